#pragma once
// Randomized and exhaustive verification sweeps shared by the CLI `verify`
// command and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ktf/pv.hpp"

namespace ktf::verify {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SweepReport {
  std::string title;
  std::vector<CaseResult> cases;

  bool all_pass() const;
  std::size_t failures() const;
};

/// n in 2..max_n: ker(1-B) = 0, coker(1-B) = Z/n, B^n = I, B^k != I for 0<k<n.
SweepReport companion_sweep(std::size_t max_n);

/// Random m (dims 1..max_dim, entries in [-max_abs, max_abs]): u m v == d,
/// |det u| == |det v| == 1, divisibility chain.
SweepReport snf_certificate_sweep(std::size_t count, std::uint64_t seed, std::size_t max_dim = 8,
                                  long max_abs = 20);

/// Random full-rank square matrices with |det| <= max_det: cokernel agrees
/// with the enumeration oracle.
SweepReport oracle_sweep(std::size_t count, std::uint64_t seed, long max_det = 512,
                         std::size_t max_dim = 4);

/// d in 1..max_d over the small finite-group catalog: pv(realize(d, f0, f1))
/// is (Z^d + f0, Z^d + f1), split-forced.
SweepReport realize_roundtrip_sweep(std::size_t max_d = 3);

/// Random valid models from permutation and companion blocks: whenever both
/// extensions split, free ranks of K_0 and K_1 agree and are >= 1.
SweepReport rank_duality_sweep(std::size_t count, std::uint64_t seed);

/// 0, Z/2, Z/3, Z/4, Z/6, Z/2+Z/2, Z/2+Z/4.
std::vector<FgAbGroup> finite_group_catalog();

/// Random unimodular n x n matrix (product of elementary operations).
IntMatrix random_unimodular(std::size_t n, std::mt19937_64 &rng, std::size_t ops = 0);

/// Free k0 and k1 with block-diagonal finite-order automorphisms built from
/// permutation and companion blocks, conjugated by random unimodular
/// changes of basis. The unit is a fixed vector of infinite order.
SpaceKModel random_model(std::mt19937_64 &rng);

} // namespace ktf::verify
