// Acceptance suite: one PASS/FAIL line per criterion, each under its time
// budget. Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ktf/cli.hpp"
#include "ktf/json_io.hpp"
#include "ktf/obk.hpp"
#include "ktf/realize.hpp"
#include "ktf/verify.hpp"

using namespace ktf;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_sweep(const verify::SweepReport &rep) {
  std::string detail = std::to_string(rep.cases.size() - rep.failures()) + "/" +
                       std::to_string(rep.cases.size()) + " cases";
  for (const auto &c : rep.cases)
    if (!c.pass) {
      detail += "; first failure " + c.name + " (" + c.detail + ")";
      break;
    }
  return {rep.all_pass() && !rep.cases.empty(), detail};
}

int failures = 0;

void criterion(int id, const char *name, double limit_s, const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass)
    ++failures;
  std::printf("%s  %2d %-28s %8.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", id, name, s,
              limit_s, o.detail.c_str(), in_time ? "" : " [over time]");
  std::fflush(stdout);
}

FgAbGroup Zmod(long n) { return FgAbGroup::cyclic(n); }

Outcome pointlike_catalog() {
  std::size_t n = 0;
  for (const auto &g0 : verify::finite_group_catalog())
    for (const auto &g1 : verify::finite_group_catalog()) {
      const OrbitBreakK r = solve_pointlike(g0, g1);
      IntVector unit(1 + g0.torsion.size());
      unit[0] = 1;
      if (!(r.k0 == direct_sum(FgAbGroup::free(1), g0) && r.cone.tag == ConeTag::SimpleCone &&
            r.unit == unit && r.k1 == g1 && r.exactness_audit()))
        return {false, "G0=" + g0.to_string() + " G1=" + g1.to_string()};
      ++n;
    }
  ElliottData by_hand;
  by_hand.k0 = FgAbGroup::free(1);
  by_hand.cone.tag = ConeTag::NonNegFree;
  by_hand.unit = {1};
  by_hand.pairing.kind = PairingKind::FirstCoordinate;
  const ElliottData solved = to_elliott(solve_pointlike(FgAbGroup{}, FgAbGroup{}));
  if (!invariant_equal(solved, by_hand))
    return {false, "(0,0) differs from the Jiang-Su invariant"};
  return {true, std::to_string(n) + " pairs; (0,0) is Jiang-Su"};
}

Outcome point_catalog() {
  std::size_t n = 0;
  for (const auto &f : verify::finite_group_catalog()) {
    std::vector<CrossedProductK> ambients;
    ambients.push_back(pv_compute(realize(1, f, FgAbGroup{})));
    for (std::size_t d = 2; d <= 3; ++d) {
      CrossedProductK a;
      a.k0.group = a.k0.sub = direct_sum(FgAbGroup::free(d), f);
      a.k1.group = a.k1.quot = FgAbGroup::free(1);
      ambients.push_back(a);
    }
    for (const auto &a : ambients) {
      const OrbitBreakK r = solve_point(a);
      if (!(iso_check(r.k0, a.k0.group) && r.k1.is_trivial() && r.exactness_audit()))
        return {false, "G0=" + a.k0.group.to_string()};
      ++n;
    }
  }
  return {true, std::to_string(n) + " ambients"};
}

Outcome rr0_golden() {
  const DimensionGroup g0 = DimensionGroup::golden_mean();
  const OrbitBreakK r = solve_rr0(Zmod(2), g0, Zmod(3));
  if (!(r.k0 == FgAbGroup{2, IntVector{2}}))
    return {false, "K0 = " + r.k0.to_string()};
  if (r.cone.tag != ConeTag::OrderFromQuotient)
    return {false, "cone " + to_string(r.cone.tag)};
  if (!(IntVector(r.unit.begin(), r.unit.begin() + 2) == g0.unit) || r.unit[2] != 0)
    return {false, "unit does not map to the unit of G0"};
  if (!(r.k1 == Zmod(3)))
    return {false, "K1 = " + r.k1.to_string()};
  const ElliottData e = to_elliott(r);
  for (long t = 0; t < 2; ++t)
    if (pairing_eval(e, {0, 0, t}) != 0)
      return {false, "torsion element pairs nonzero"};
  if (!r.exactness_audit())
    return {false, "exactness audit"};
  return {true, "K0 = " + r.k0.to_string() + ", K1 = " + r.k1.to_string()};
}

Outcome dimgroup_properties() {
  const DimensionGroup g = DimensionGroup::golden_mean();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> dist(-30, 30);
  const std::size_t iters = 64;
  auto sample = [&] { return DgElement{0, {dist(rng), dist(rng)}}; };
  std::size_t determined = 0;
  while (determined < 100) {
    const DgElement x = sample(), y = sample();
    const Sign sx = positivity(g, x, iters);
    if (sx == Sign::Undetermined)
      continue;
    ++determined;
    const Sign sn = positivity(g, negate(x), iters);
    const bool anti = (sx == Sign::Zero && sn == Sign::Zero) ||
                      (sx == Sign::Positive && sn == Sign::Negative) ||
                      (sx == Sign::Negative && sn == Sign::Positive);
    if (!anti)
      return {false, "antisymmetry fails"};
    const Sign sy = positivity(g, y, iters);
    if (sx == Sign::Positive && sy == Sign::Positive &&
        positivity(g, add(g, x, y), iters) != Sign::Positive)
      return {false, "additivity fails"};
    if (sx != Sign::Zero && sy == Sign::Zero && positivity(g, add(g, x, y), iters) != sx)
      return {false, "adding zero changes the sign"};
    const RationalInterval a = state_value(g, x, 5), b = state_value(g, x, 10),
                           c = state_value(g, x, 20);
    if (!(b.within(a) && c.within(b)))
      return {false, "state intervals not nested"};
  }
  const DgElement u{0, g.unit};
  for (std::size_t depth : {5, 10, 20})
    if (!state_value(g, u, depth).contains(1))
      return {false, "unit state interval misses 1"};
  return {true, std::to_string(determined) + " determined elements"};
}

Outcome projectionless() {
  const ElliottData one = build_pointlike_invariant(FgAbGroup{}, FgAbGroup{}, 1, 1);
  if (!projectionless_check(one))
    return {false, "SimpleCone unit (1,0)"};
  for (long k = 2; k <= 6; ++k)
    if (projectionless_check(build_pointlike_invariant(Zmod(3), FgAbGroup{}, k, 1)))
      return {false, "SimpleCone unit (" + std::to_string(k) + ",0)"};
  ElliottData full;
  full.k0 = FgAbGroup{3, IntVector{2}};
  full.cone.tag = ConeTag::FullPositiveFirstCoord;
  full.unit = {1, 0, 0, 0};
  if (!projectionless_check(full))
    return {false, "FullPositiveFirstCoord unit (1,0,...,0)"};
  return {true, "SimpleCone k=1..6, FullPositiveFirstCoord"};
}

Outcome ext_gated_ambiguity() {
  // degree-1 kernel Z/2 sits over coker Z + Z/2 in K_0, and Ext(Z/2, Z + Z/2) != 0
  const SpaceKModel m{PresentedGroup(2, IntMatrix{{0}, {2}}), PresentedGroup(1, IntMatrix{{2}}),
                      IntMatrix::identity(2), IntMatrix::identity(1), IntVector{1, 0}};
  if (ext1(Zmod(2), FgAbGroup{1, IntVector{2}}).is_trivial())
    return {false, "Ext vanishes; the model does not exercise the gate"};
  const CrossedProductK r = pv_compute(m);
  if (r.k0.status != ExtStatus::Ambiguous)
    return {false, "K0 asserted as " + r.k0.group.to_string()};
  const std::string text = json::to_json(m).dump();
  const char *argv[] = {"ktf", "pv", text.c_str()};
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(3, argv, in, out, err);
  if (code != 2)
    return {false, "exit code " + std::to_string(code)};
  const auto j = nlohmann::json::parse(out.str());
  if (j["k0"]["status"] != "ambiguous")
    return {false, "output not flagged"};
  return {true, "exit 2, K0 flagged ambiguous"};
}

} // namespace

int main() {
  criterion(1, "companion sweep n<=64", 2, [] { return from_sweep(verify::companion_sweep(64)); });
  criterion(2, "SNF certificates", 15,
            [] { return from_sweep(verify::snf_certificate_sweep(1000, 1, 8, 20)); });
  criterion(3, "oracle equivalence", 30,
            [] { return from_sweep(verify::oracle_sweep(200, 2, 512, 4)); });
  criterion(4, "realization round trip", 10,
            [] { return from_sweep(verify::realize_roundtrip_sweep(3)); });
  criterion(5, "rank duality", 20, [] { return from_sweep(verify::rank_duality_sweep(500, 3)); });
  criterion(6, "point-like orbit breaking", 5, pointlike_catalog);
  criterion(7, "point orbit breaking", 2, point_catalog);
  criterion(8, "real rank zero", 5, rr0_golden);
  criterion(9, "dimension group", 5, dimgroup_properties);
  criterion(10, "projectionless", 1, projectionless);
  criterion(11, "Ext-gated ambiguity", 1, ext_gated_ambiguity);
  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
