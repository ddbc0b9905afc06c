#pragma once
// Elliott-invariant data: pointed ordered K_0 with a symbolic positive cone,
// K_1, the number of extreme tracial states, and the pairing.
//
// K_0 elements are integer vectors in the canonical coordinates of the
// FgAbGroup (free coordinates first, then torsion). For cones and pairings
// backed by a dimension group, the leading dimgroup->k() coordinates are
// the dimension-group part, read at level 0.

#include <optional>
#include <string>

#include "ktf/dimgroup.hpp"
#include "ktf/fgab.hpp"

namespace ktf {

enum class ConeTag {
  FullPositiveFirstCoord, ///< Z_{>0} + Z^{d-1} + F, together with 0
  SimpleCone,             ///< {(n, z) : n > 0} together with 0
  OrderFromQuotient,      ///< positive image in a dimension group, together with 0
  NonNegFree,             ///< free coordinates >= 0, torsion part 0
  Unknown,
};

std::string to_string(ConeTag t);
ConeTag cone_tag_from_string(const std::string &s);

struct ConeDescriptor {
  ConeTag tag = ConeTag::Unknown;
  std::optional<DimensionGroup> dimgroup; ///< OrderFromQuotient only
  std::size_t max_iter = 64;              ///< positivity depth for OrderFromQuotient

  friend bool operator==(const ConeDescriptor &, const ConeDescriptor &) = default;
};

enum class Membership { Member, NonMember, Undetermined };

/// Throws for Unknown cones and malformed elements.
Membership cone_contains(const ConeDescriptor &cone, const FgAbGroup &group, const IntVector &x);

enum class PairingKind { FirstCoordinate, FirstCoordOverK, StateOfDimGroup };

std::string to_string(PairingKind k);
PairingKind pairing_kind_from_string(const std::string &s);

struct PairingDescriptor {
  PairingKind kind = PairingKind::FirstCoordinate;
  Integer k = 1;                          ///< FirstCoordOverK
  std::optional<DimensionGroup> dimgroup; ///< StateOfDimGroup
  std::size_t depth = 40;                 ///< StateOfDimGroup precision

  friend bool operator==(const PairingDescriptor &, const PairingDescriptor &) = default;
};

struct ElliottData {
  FgAbGroup k0;
  ConeDescriptor cone;
  IntVector unit;
  FgAbGroup k1;
  std::size_t trace_extreme_points = 1;
  PairingDescriptor pairing;

  /// Unit nonzero and in the cone; extreme-point count >= 1; parameters
  /// present for the chosen tags.
  void validate() const;
};

/// (Z + g0, SimpleCone, (k, 0), g1, extreme_points, (n, g) -> n / k).
ElliottData build_pointlike_invariant(const FgAbGroup &g0, const FgAbGroup &g1,
                                      const Integer &k, std::size_t extreme_points);

/// Value of the (common) state on x. StateOfDimGroup returns the midpoint of
/// the state bracket at the descriptor's depth.
mpq_class pairing_eval(const ElliottData &e, const IntVector &x);

/// True iff the unit has no decomposition into two nonzero positive parts,
/// i.e. the first coordinate of the unit is 1. Only SimpleCone and
/// FullPositiveFirstCoord are decidable here.
bool projectionless_check(const ElliottData &e);

bool invariant_equal(const ElliottData &a, const ElliottData &b);

} // namespace ktf
