#include "ktf/verify.hpp"

#include <algorithm>
#include <numeric>

#include "ktf/oracle.hpp"
#include "ktf/realize.hpp"

namespace ktf::verify {

bool SweepReport::all_pass() const { return failures() == 0; }

std::size_t SweepReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult &c) { return !c.pass; }));
}

namespace {

long uniform(std::mt19937_64 &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

bool divisibility_chain(const IntVector &diag) {
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (sgn(diag[i]) < 0)
      return false;
    if (i + 1 < diag.size() && sgn(diag[i]) != 0 &&
        mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()) == 0)
      return false;
    if (i + 1 < diag.size() && sgn(diag[i]) == 0 && sgn(diag[i + 1]) != 0)
      return false;
  }
  return true;
}

bool off_diagonal_zero(const IntMatrix &d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && sgn(d(i, j)) != 0)
        return false;
  return true;
}

IntMatrix permutation_matrix(const std::vector<std::size_t> &sigma) {
  IntMatrix p(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j)
    p(sigma[j], j) = 1;
  return p;
}

IntMatrix random_finite_order_block(std::mt19937_64 &rng) {
  if (uniform(rng, 0, 1) == 0) {
    std::vector<std::size_t> sigma(static_cast<std::size_t>(uniform(rng, 1, 4)));
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return permutation_matrix(sigma);
  }
  return companion_block(static_cast<std::size_t>(uniform(rng, 2, 6))).aut;
}

IntMatrix random_aut(std::mt19937_64 &rng, std::size_t blocks, std::vector<IntMatrix> lead = {}) {
  for (std::size_t i = 0; i < blocks; ++i)
    lead.push_back(random_finite_order_block(rng));
  return IntMatrix::block_diagonal(lead);
}

} // namespace

SweepReport companion_sweep(std::size_t max_n) {
  SweepReport rep{"companion blocks", {}};
  for (std::size_t n = 2; n <= max_n; ++n) {
    const Block b = companion_block(n);
    const GroupHom d{b.group, b.group, IntMatrix::identity(n - 1) - b.aut};
    const FgAbGroup ker = hom_kernel(d);
    const FgAbGroup coker = hom_cokernel(d);
    const auto ord = matrix_order(b.aut, n);
    const bool ok = ker.is_trivial() && coker == FgAbGroup::cyclic(n) && ord && *ord == n;
    rep.cases.push_back({"n=" + std::to_string(n), ok,
                         "ker=" + ker.to_string() + " coker=" + coker.to_string() + " order=" +
                             (ord ? std::to_string(*ord) : std::string(">n"))});
  }
  return rep;
}

SweepReport snf_certificate_sweep(std::size_t count, std::uint64_t seed, std::size_t max_dim,
                                  long max_abs) {
  SweepReport rep{"SNF certificates", {}};
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    const auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    IntMatrix m(r, k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j)
        m(i, j) = uniform(rng, -max_abs, max_abs);
    const SnfResult s = snf(m);
    const bool cert = s.u * m * s.v == s.d;
    const bool unimod = abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1;
    const bool shape = off_diagonal_zero(s.d) && divisibility_chain(s.diagonal());
    rep.cases.push_back({"#" + std::to_string(c) + " " + std::to_string(r) + "x" +
                             std::to_string(k),
                         cert && unimod && shape,
                         std::string(cert ? "" : "u*m*v!=d ") + (unimod ? "" : "not unimodular ") +
                             (shape ? "" : "bad diagonal")});
  }
  return rep;
}

SweepReport oracle_sweep(std::size_t count, std::uint64_t seed, long max_det, std::size_t max_dim) {
  SweepReport rep{"cokernel vs enumeration oracle", {}};
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    IntMatrix m;
    Integer det;
    do {
      const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
      const long range = n <= 2 ? 24 : (n == 3 ? 6 : 3);
      m = IntMatrix(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) = uniform(rng, -range, range);
      det = determinant(m);
    } while (sgn(det) == 0 || abs(det) > max_det);
    const FgAbGroup fast = cokernel(m);
    const FgAbGroup slow = oracle::oracle_cokernel(m);
    const bool stats_ok = order_statistics(fast) == oracle::cokernel_order_statistics(m);
    rep.cases.push_back({"#" + std::to_string(c) + " |det|=" + Integer(abs(det)).get_str(),
                         fast == slow && stats_ok,
                         "snf=" + fast.to_string() + " oracle=" + slow.to_string()});
  }
  return rep;
}

std::vector<FgAbGroup> finite_group_catalog() {
  return {FgAbGroup{},
          FgAbGroup::cyclic(2),
          FgAbGroup::cyclic(3),
          FgAbGroup::cyclic(4),
          FgAbGroup::cyclic(6),
          FgAbGroup::from_cyclic_orders({2, 2}),
          FgAbGroup::from_cyclic_orders({2, 4})};
}

SweepReport realize_roundtrip_sweep(std::size_t max_d) {
  SweepReport rep{"realization round trip", {}};
  const auto catalog = finite_group_catalog();
  for (std::size_t d = 1; d <= max_d; ++d)
    for (const auto &f0 : catalog)
      for (const auto &f1 : catalog) {
        const CrossedProductK r = pv_compute(realize(d, f0, f1));
        const FgAbGroup want0 = direct_sum(FgAbGroup::free(d), f0);
        const FgAbGroup want1 = direct_sum(FgAbGroup::free(d), f1);
        const bool ok = r.split() && r.k0.group == want0 && r.k1.group == want1;
        rep.cases.push_back({"d=" + std::to_string(d) + " F0=" + f0.to_string() +
                                 " F1=" + f1.to_string(),
                             ok, "K0=" + r.k0.group.to_string() + " K1=" + r.k1.group.to_string()});
      }
  return rep;
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64 &rng, std::size_t ops) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2)
    return p;
  if (ops == 0)
    ops = 3 * n;
  for (std::size_t k = 0; k < ops; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i)
      ++j;
    if (uniform(rng, 0, 3) == 0)
      p.swap_rows(i, j);
    else
      p.add_row_multiple(i, j, Integer(uniform(rng, -2, 2)));
  }
  return p;
}

SpaceKModel random_model(std::mt19937_64 &rng) {
  const IntMatrix a0 = random_aut(rng, static_cast<std::size_t>(uniform(rng, 0, 3)),
                                  {IntMatrix::identity(1)});
  const IntMatrix a1 = random_aut(rng, static_cast<std::size_t>(uniform(rng, 0, 3)));
  const std::size_t n0 = a0.rows(), n1 = a1.rows();
  const IntMatrix p0 = random_unimodular(n0, rng);
  const IntMatrix p1 = random_unimodular(n1, rng);
  const IntMatrix p0inv = *solve(p0, IntMatrix::identity(n0));
  const IntMatrix p1inv = *solve(p1, IntMatrix::identity(n1));
  IntVector e0(n0);
  e0[0] = 1;
  return {PresentedGroup::free(n0), PresentedGroup::free(n1), p0 * a0 * p0inv, p1 * a1 * p1inv,
          p0 * e0};
}

SweepReport rank_duality_sweep(std::size_t count, std::uint64_t seed) {
  SweepReport rep{"rank duality", {}};
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    const SpaceKModel m = random_model(rng);
    const CrossedProductK r = pv_compute(m);
    const bool ok = !r.split() || rank_duality_check(r);
    rep.cases.push_back({"#" + std::to_string(c), ok,
                         "K0=" + r.k0.group.to_string() + " K1=" + r.k1.group.to_string() +
                             (r.split() ? "" : " (ambiguous)")});
  }
  return rep;
}

} // namespace ktf::verify
