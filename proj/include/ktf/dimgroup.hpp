#pragma once
// Stationary dimension groups: inductive limits Z^k -> Z^k -> ... along a
// fixed primitive nonnegative matrix, with the entrywise order.

#include <cstddef>
#include <string>

#include "ktf/fgab.hpp"

namespace ktf {

struct DimensionGroup {
  IntMatrix step; ///< level n embeds into level n+1 by v -> step * v
  IntVector unit; ///< order unit, given at level 0

  std::size_t k() const { return step.rows(); }

  /// Checks squareness, nonnegativity, primitivity (some power up to
  /// power_bound strictly positive; 0 means k^2 + 1) and the unit.
  /// Throws std::invalid_argument naming the failed invariant.
  void validate(std::size_t power_bound = 0) const;

  /// step [[1,1],[1,0]], unit (1,1).
  static DimensionGroup golden_mean();

  friend bool operator==(const DimensionGroup &, const DimensionGroup &) = default;
};

/// Class of `vector` at `level` in the limit.
struct DgElement {
  std::size_t level = 0;
  IntVector vector;
};

enum class Sign { Positive, Negative, Zero, Undetermined };

std::string to_string(Sign s);

/// x moved to a later level.
DgElement raise(const DimensionGroup &g, const DgElement &x, std::size_t level);
bool equal(const DimensionGroup &g, const DgElement &a, const DgElement &b);
DgElement add(const DimensionGroup &g, const DgElement &a, const DgElement &b);
DgElement negate(const DgElement &x);

/// Positive if some iterate step^j x (j <= max_iter) is entrywise > 0,
/// negative symmetrically, zero iff x == 0, otherwise undetermined.
Sign positivity(const DimensionGroup &g, const DgElement &x, std::size_t max_iter);

struct UnderlyingGroup {
  bool finitely_generated = false;
  FgAbGroup group; ///< Z^k when finitely_generated
  Integer det;
};

/// Z^k when |det step| == 1; otherwise flagged as not finitely generated.
/// Throws when step is singular.
UnderlyingGroup underlying(const DimensionGroup &g);

struct RationalInterval {
  mpq_class lo;
  mpq_class hi;

  bool contains(const mpq_class &q) const { return lo <= q && q <= hi; }
  bool within(const RationalInterval &outer) const { return outer.lo <= lo && hi <= outer.hi; }
  mpq_class midpoint() const { return (lo + hi) / 2; }
  mpq_class width() const { return hi - lo; }
};

/// Bracket for the Perron state of x, normalized so the unit has value 1.
/// Bounds are the min/max coordinate ratios of x against the unit after
/// `depth` further steps (more, if the unit is not yet strictly positive).
/// Intervals are nested in depth.
RationalInterval state_value(const DimensionGroup &g, const DgElement &x, std::size_t depth);

} // namespace ktf
