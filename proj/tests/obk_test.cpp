#include "doctest.h"

#include <algorithm>

#include "ktf/obk.hpp"
#include "ktf/realize.hpp"
#include "ktf/verify.hpp"

using namespace ktf;

namespace {

FgAbGroup Zmod(long n) { return FgAbGroup::cyclic(n); }

bool mentions(const OrbitBreakK &r, const std::string &needle) {
  return std::any_of(r.derivation.begin(), r.derivation.end(),
                     [&](const std::string &s) { return s.find(needle) != std::string::npos; });
}

CrossedProductK ambient(const FgAbGroup &g0) {
  CrossedProductK a;
  a.k0.group = g0;
  a.k0.sub = g0;
  a.k1.group = FgAbGroup::free(1);
  a.k1.quot = FgAbGroup::free(1);
  return a;
}

long alternating_rank_sum(const OrbitBreakK &r) {
  long s = 0;
  for (std::size_t i = 0; i < 6; ++i)
    s += (i % 2 == 0 ? 1 : -1) * static_cast<long>(r.six_term[i].free_rank);
  return s;
}

} // namespace

TEST_CASE("point regime from a Cantor-type ambient") {
  const FgAbGroup g0 = FgAbGroup{3, IntVector{2}};
  const OrbitBreakK r = solve_point(ambient(g0));
  CHECK(r.regime == Regime::Point);
  CHECK(r.k0 == g0);
  CHECK(r.k1.is_trivial());
  CHECK(r.exactness_audit());
  CHECK(mentions(r, "map Z -> K^0({y}) is an isomorphism"));
  CHECK(r.cone.tag == ConeTag::Unknown);
  CHECK_THROWS(to_elliott(r));
}

TEST_CASE("point regime inside a point-like system") {
  const CrossedProductK pl = pv_compute(pointlike_model());
  const OrbitBreakK r = solve_point(pl, 1, IntVector{1});
  CHECK(r.k0 == FgAbGroup::free(1));
  CHECK(r.k1.is_trivial());
  CHECK(r.unit == IntVector{1});
  CHECK(alternating_rank_sum(r) == 0);
}

TEST_CASE("point regime preconditions") {
  CrossedProductK bad = ambient(FgAbGroup::free(1));
  bad.k1.group = FgAbGroup::free(2);
  CHECK_THROWS(solve_point(bad));
  CrossedProductK amb = ambient(FgAbGroup::free(1));
  amb.k0.status = ExtStatus::Ambiguous;
  CHECK_THROWS(solve_point(amb));
  CHECK_THROWS(solve_point(ambient(FgAbGroup::free(1)), 0));
}

TEST_CASE("point-like regime with trivial groups") {
  const OrbitBreakK r = solve_pointlike(FgAbGroup::trivial(), FgAbGroup::trivial());
  CHECK(r.k0 == FgAbGroup::free(1));
  CHECK(r.cone.tag == ConeTag::SimpleCone);
  CHECK(r.unit == IntVector{1});
  CHECK(r.k1.is_trivial());
  CHECK(r.exactness_audit());
}

TEST_CASE("point-like regime with torsion") {
  const OrbitBreakK r = solve_pointlike(Zmod(3), Zmod(5));
  CHECK(r.k0 == FgAbGroup{1, IntVector{3}});
  CHECK(r.cone.tag == ConeTag::SimpleCone);
  CHECK(r.unit == IntVector{1, 0});
  CHECK(r.k1 == Zmod(5));
  CHECK(mentions(r, "(n, y) |-> n"));
  CHECK(r.exactness_audit());
  const ElliottData e = to_elliott(r);
  CHECK(invariant_equal(e, build_pointlike_invariant(Zmod(3), Zmod(5), 1, 1)));
  CHECK(projectionless_check(e));
}

TEST_CASE("point-like regime over the catalog") {
  for (const auto &g0 : verify::finite_group_catalog())
    for (const auto &g1 : verify::finite_group_catalog()) {
      const OrbitBreakK r = solve_pointlike(g0, g1, 2);
      CHECK(r.k0 == direct_sum(FgAbGroup::free(1), g0));
      CHECK(r.k1 == g1);
      CHECK(r.trace_extreme_points == 2);
      CHECK(r.exactness_audit());
    }
}

TEST_CASE("real-rank-zero regime with the golden-mean group") {
  const DimensionGroup g0 = DimensionGroup::golden_mean();
  const OrbitBreakK r = solve_rr0(Zmod(2), g0, Zmod(3));
  CHECK(r.k0 == FgAbGroup{2, IntVector{2}});
  CHECK(r.cone.tag == ConeTag::OrderFromQuotient);
  CHECK(r.unit == IntVector{1, 1, 0});
  CHECK(r.k1 == Zmod(3));
  CHECK(r.exactness_audit());
  const ElliottData e = to_elliott(r);
  // torsion is infinitesimal
  CHECK(pairing_eval(e, {0, 0, 1}) == 0);
  CHECK(pairing_eval(e, {1, 1, 1}) == 1);
  CHECK(pairing_eval(e, {1, 0, 1}) == pairing_eval(e, {1, 0, 0}));
  CHECK(cone_contains(e.cone, e.k0, {0, 0, 1}) == Membership::NonMember);
  CHECK(cone_contains(e.cone, e.k0, {1, -1, 1}) == Membership::Member);
}

TEST_CASE("real-rank-zero regime with trivial torsion") {
  const DimensionGroup g0 = DimensionGroup::golden_mean();
  const OrbitBreakK r = solve_rr0(FgAbGroup::trivial(), g0, FgAbGroup::trivial());
  CHECK(r.k0 == FgAbGroup::free(2));
  CHECK(r.unit == g0.unit);
  CHECK(r.k1.is_trivial());
  CHECK(r.exactness_audit());
}

TEST_CASE("real-rank-zero regime rejects a non-finitely-generated limit") {
  CHECK_THROWS(solve_rr0(Zmod(2), DimensionGroup{IntMatrix{{2}}, {1}}, Zmod(3)));
  CHECK_THROWS(solve_rr0(Zmod(2), DimensionGroup{IntMatrix::identity(2), {1, 1}}, Zmod(3)));
}

TEST_CASE("short exact consistency") {
  CHECK(ShortExact{"", Zmod(2), FgAbGroup{1, IntVector{2}}, FgAbGroup::free(1)}.consistent());
  CHECK(ShortExact{"", Zmod(2), Zmod(6), Zmod(3)}.consistent());
  CHECK_FALSE(ShortExact{"", Zmod(2), Zmod(4), Zmod(3)}.consistent());
  CHECK_FALSE(ShortExact{"", FgAbGroup::free(1), FgAbGroup::free(1), FgAbGroup::free(1)}.consistent());
  OrbitBreakK r = solve_pointlike(Zmod(3), Zmod(5));
  r.six_term[1] = FgAbGroup::free(2);
  CHECK_FALSE(r.exactness_audit());
}

TEST_CASE("boundary compatibility") {
  const PresentedGroup z = PresentedGroup::free(1);
  const GroupHom d_pv{z, z, IntMatrix{{-1}}};
  CHECK(boundary_compat(d_pv, GroupHom::identity(z)).matrix == d_pv.matrix);
  const GroupHom zero{z, z, IntMatrix{{0}}};
  CHECK(boundary_compat(zero, GroupHom{z, PresentedGroup::free(2), IntMatrix{{1}, {0}}})
            .matrix.is_zero());
  // unital restriction Z -> K^0(Y) = Z + G_0 sends 1 to (1, 0): -[1] lands on (-1, 0)
  const PresentedGroup k0y(2, IntMatrix{{0}, {3}});
  const GroupHom ob = boundary_compat(d_pv, GroupHom{z, k0y, IntMatrix{{1}, {0}}});
  CHECK(ob.matrix == IntMatrix{{-1}, {0}});
  CHECK(is_well_defined(ob));
  CHECK_THROWS(boundary_compat(GroupHom{z, k0y, IntMatrix{{1}, {0}}}, GroupHom::identity(z)));
}
