#pragma once
// K-theory of orbit-breaking subalgebras A_Y, solved regime by regime from
// the six-term sequence
//
//   K^0(Y) -> K_0(A_Y) -> K_0(A) -> K^1(Y) -> K_1(A_Y) -> K_1(A) -> K^0(Y)
//
// Each regime applies only the structural facts known to hold there and
// logs them in `derivation`.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ktf/elliott.hpp"
#include "ktf/pv.hpp"

namespace ktf {

enum class Regime { Point, Pointlike, Rr0 };

std::string to_string(Regime r);

struct ShortExact {
  std::string label;
  FgAbGroup sub;
  FgAbGroup middle;
  FgAbGroup quot;

  /// Free ranks add; orders multiply when all three are finite.
  bool consistent() const;
};

struct OrbitBreakK {
  Regime regime = Regime::Point;
  FgAbGroup k0;
  ConeDescriptor cone;
  IntVector unit; ///< empty when the unit class is not tracked
  FgAbGroup k1;
  std::size_t trace_extreme_points = 1; ///< carried over from A
  std::optional<PairingDescriptor> pairing;

  /// K^0(Y), K_0(A_Y), K_0(A), K^1(Y), K_1(A_Y), K_1(A).
  std::array<FgAbGroup, 6> six_term;
  std::vector<ShortExact> short_exact;
  std::vector<std::string> derivation;

  /// Alternating rank sum around the six-term cycle is 0 and every recorded
  /// short exact sequence is consistent.
  bool exactness_audit() const;
};

/// Y a single point, K_1(A) = Z. Throws when ambient K_1 is not Z or an
/// ambient extension is ambiguous.
OrbitBreakK solve_point(const CrossedProductK &ambient, std::size_t trace_extreme_points = 1,
                        std::optional<IntVector> ambient_unit = std::nullopt);

/// Y connected with K^0(Y) = Z + g0, K^1(Y) = g1, inside a point-like
/// system with K_0(A) = K_1(A) = Z.
OrbitBreakK solve_pointlike(const FgAbGroup &g0, const FgAbGroup &g1,
                            std::size_t trace_extreme_points = 1);

/// Y with K^0(Y) = Z + t, K^1(Y) = g1 inside an extension of a Cantor system
/// with K_0 = g0 (a stationary dimension group with finitely generated
/// limit). K_0 coordinates: g0 first, then t.
OrbitBreakK solve_rr0(const FgAbGroup &t, const DimensionGroup &g0, const FgAbGroup &g1,
                      std::size_t trace_extreme_points = 1);

/// j* o d_pv, which agrees with the orbit-breaking boundary. Throws when the
/// target of d_pv is not the source of j_star.
GroupHom boundary_compat(const GroupHom &d_pv, const GroupHom &j_star);

/// Throws when cone or pairing is unknown.
ElliottData to_elliott(const OrbitBreakK &r);

} // namespace ktf
