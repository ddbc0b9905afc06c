#include "ktf/obk.hpp"

#include <stdexcept>

namespace ktf {

std::string to_string(Regime r) {
  switch (r) {
  case Regime::Point:
    return "point";
  case Regime::Pointlike:
    return "pointlike";
  case Regime::Rr0:
    break;
  }
  return "rr0";
}

bool ShortExact::consistent() const {
  if (sub.free_rank + quot.free_rank != middle.free_rank)
    return false;
  if (sub.is_finite() && middle.is_finite() && quot.is_finite())
    return middle.order() == sub.order() * quot.order();
  return true;
}

bool OrbitBreakK::exactness_audit() const {
  long alternating = 0;
  for (std::size_t i = 0; i < six_term.size(); ++i) {
    const long r = static_cast<long>(six_term[i].free_rank);
    alternating += (i % 2 == 0) ? r : -r;
  }
  if (alternating != 0)
    return false;
  for (const auto &s : short_exact)
    if (!s.consistent())
      return false;
  return true;
}

OrbitBreakK solve_point(const CrossedProductK &ambient, std::size_t trace_extreme_points,
                        std::optional<IntVector> ambient_unit) {
  if (!ambient.split())
    throw std::invalid_argument("ambient K-theory has an ambiguous extension");
  if (!(ambient.k1.group == FgAbGroup::free(1)))
    throw std::invalid_argument("point regime needs K_1(A) = Z, got " +
                                ambient.k1.group.to_string());
  if (trace_extreme_points < 1)
    throw std::invalid_argument("trace simplex needs at least one extreme point");
  const FgAbGroup &g = ambient.k0.group;
  const FgAbGroup z = FgAbGroup::free(1);
  const FgAbGroup zero;

  OrbitBreakK r;
  r.regime = Regime::Point;
  r.k0 = g;
  r.k1 = zero;
  r.cone.tag = ConeTag::Unknown;
  if (ambient_unit)
    r.unit = g.reduce(*ambient_unit);
  r.trace_extreme_points = trace_extreme_points;
  r.six_term = {z, g, g, zero, zero, z};
  r.short_exact = {
      {"0 -> coker(K_1(A) -> K^0({y})) -> K_0(A_Y) -> ker(K_0(A) -> K^1({y})) -> 0", zero, g, g},
      {"0 -> coker(K_0(A) -> K^1({y})) -> K_1(A_Y) -> ker(K_1(A) -> K^0({y})) -> 0", zero, zero,
       zero},
  };
  r.derivation = {
      "K^0({y}) = Z and K^1({y}) = 0",
      "K_1(A) = Z",
      "map Z -> K^0({y}) is an isomorphism (boundary K_1(A) -> K^0({y}))",
      "K_0(A_Y) -> K_0(A) is an isomorphism: K_0(A_Y) = " + g.to_string(),
      "K_1(A_Y) = 0: K^1({y}) = 0 and the boundary out of K_1(A) is injective",
      "trace simplex restricts bijectively from A to A_Y",
  };
  return r;
}

OrbitBreakK solve_pointlike(const FgAbGroup &g0, const FgAbGroup &g1,
                            std::size_t trace_extreme_points) {
  if (trace_extreme_points < 1)
    throw std::invalid_argument("trace simplex needs at least one extreme point");
  const FgAbGroup z = FgAbGroup::free(1);
  const FgAbGroup k0y = direct_sum(z, g0);

  OrbitBreakK r;
  r.regime = Regime::Pointlike;
  r.k0 = k0y;
  r.cone.tag = ConeTag::SimpleCone;
  r.unit = IntVector(k0y.dimension());
  r.unit[0] = 1;
  r.k1 = g1;
  r.trace_extreme_points = trace_extreme_points;
  r.pairing = PairingDescriptor{PairingKind::FirstCoordOverK, 1, std::nullopt, 40};
  r.six_term = {k0y, k0y, z, g1, g1, z};
  r.short_exact = {
      {"0 -> coker(L) -> K_0(A_Y) -> K_0(A) -> 0 (split)", g0, k0y, z},
      {"0 -> K^1(Y) -> K_1(A_Y) -> ker(L) -> 0", g1, g1, FgAbGroup{}},
  };
  r.derivation = {
      "K_0(A) = Z and K_1(A) = Z (point-like space)",
      "K^0(Y) = Z + G_0 = " + k0y.to_string() + ", K^1(Y) = G_1 = " + g1.to_string(),
      "K_0(C(Z)) -> K_0(A) is an isomorphism, so iota_*: K_0(A_Y) -> K_0(A) is onto",
      "boundary K_0(A) -> K^1(Y) is 0",
      "K^0(Y) = Z + ~K^0(Y) -> K^0({y}) = Z is (n, y) |-> n",
      "L: K_1(A) = Z -> K^0(Y) is n |-> (n, 0); injective with cokernel G_0",
      "iota_* splits via (i_1)_* o (i_2)_*^{-1}: K_0(A_Y) = Z + G_0",
      "K_1(A_Y) = G_1",
      "positive cone {(n, z) : n > 0} together with 0; unit (1, 0)",
      "trace simplex restricts bijectively from A to A_Y",
  };
  return r;
}

OrbitBreakK solve_rr0(const FgAbGroup &t, const DimensionGroup &g0, const FgAbGroup &g1,
                      std::size_t trace_extreme_points) {
  if (trace_extreme_points < 1)
    throw std::invalid_argument("trace simplex needs at least one extreme point");
  g0.validate();
  const UnderlyingGroup ug = underlying(g0);
  if (!ug.finitely_generated)
    throw std::invalid_argument("dimension group limit is not finitely generated (|det step| = " +
                                Integer(abs(ug.det)).get_str() +
                                "); K_0 has no finitely generated canonical form");
  const FgAbGroup z = FgAbGroup::free(1);
  const FgAbGroup k0 = direct_sum(ug.group, t);

  OrbitBreakK r;
  r.regime = Regime::Rr0;
  r.k0 = k0;
  r.cone.tag = ConeTag::OrderFromQuotient;
  r.cone.dimgroup = g0;
  r.unit = IntVector(k0.dimension());
  for (std::size_t i = 0; i < g0.k(); ++i)
    r.unit[i] = g0.unit[i];
  r.k1 = g1;
  r.trace_extreme_points = trace_extreme_points;
  r.pairing = PairingDescriptor{PairingKind::StateOfDimGroup, 1, g0, 40};
  r.six_term = {direct_sum(z, t), k0, ug.group, g1, g1, z};
  r.short_exact = {
      {"0 -> T -> K_0(B_Y) -> G_0 -> 0 (split)", t, k0, ug.group},
      {"0 -> K^1(Y) -> K_1(B_Y) -> ker(L) -> 0", g1, g1, FgAbGroup{}},
  };
  r.derivation = {
      "K_0(B) = G_0 (stationary dimension group, limit " + ug.group.to_string() +
          ") and K_1(B) = Z",
      "K^0(Y) = Z + T = " + direct_sum(z, t).to_string() + ", K^1(Y) = G_1 = " +
          g1.to_string(),
      "boundary K_0(B) -> K^1(Y) is 0",
      "L: K_1(B) = Z -> Z + T is l |-> (l, 0)",
      "0 -> Z -> Z + T -> K_0(B_Y) -> G_0 -> 0, hence 0 -> T -> K_0(B_Y) -> G_0 -> 0",
      "splitting through K_0(B_{I^n}) = G_0: K_0(B_Y) = T + G_0",
      "positive cone is the preimage of G_0^+ (together with 0); unit 1_{G_0}",
      "K_1(B_Y) = G_1",
      "T consists of infinitesimals: the pairing factors through K_0(B_Y) -> G_0",
      "trace simplex restricts bijectively from B to B_Y",
  };
  return r;
}

GroupHom boundary_compat(const GroupHom &d_pv, const GroupHom &j_star) {
  if (d_pv.target.generators != j_star.source.generators ||
      !(d_pv.target.relations == j_star.source.relations))
    throw std::invalid_argument("boundary maps are not composable: target of d_pv differs "
                                "from source of j*");
  return {d_pv.source, j_star.target, j_star.matrix * d_pv.matrix};
}

ElliottData to_elliott(const OrbitBreakK &r) {
  if (r.cone.tag == ConeTag::Unknown)
    throw std::invalid_argument("positive cone is unknown in the " + to_string(r.regime) +
                                " regime");
  if (!r.pairing)
    throw std::invalid_argument("pairing is unknown in the " + to_string(r.regime) + " regime");
  if (r.unit.empty())
    throw std::invalid_argument("unit class is not tracked");
  ElliottData e{r.k0, r.cone, r.unit, r.k1, r.trace_extreme_points, *r.pairing};
  e.validate();
  return e;
}

} // namespace ktf
