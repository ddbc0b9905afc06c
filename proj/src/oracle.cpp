#include "ktf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ktf::oracle {

namespace {

struct RationalInverse {
  std::vector<std::vector<mpq_class>> inv;
  mpq_class det;
};

// Gauss-Jordan over Q. det == 0 signals a singular matrix.
RationalInverse invert(const IntMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0)
      ++p;
    if (p == n)
      return {{}, 0};
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    const mpq_class piv = a[c][c];
    det *= piv;
    for (auto &x : a[c])
      x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0)
        continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  RationalInverse out;
  out.det = det;
  out.inv.assign(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.inv[i][j] = a[i][n + j];
  return out;
}

using Key = std::vector<Integer>;

Integer mod(const Integer &x, const Integer &d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Columns of m that are independent over Q, chosen greedily from the left.
std::vector<std::size_t> independent_columns(const IntMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> basis; // reduced rows, pivot at pivots[i]
  std::vector<std::size_t> pivots, chosen;
  for (std::size_t j = 0; j < m.cols() && chosen.size() < n; ++j) {
    std::vector<mpq_class> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = m(i, j);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[pivots[b]]) == 0)
        continue;
      const mpq_class f = v[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t i = 0; i < n; ++i)
        v[i] -= f * basis[b][i];
    }
    std::size_t p = 0;
    while (p < n && sgn(v[p]) == 0)
      ++p;
    if (p == n)
      continue;
    basis.push_back(v);
    pivots.push_back(p);
    chosen.push_back(j);
  }
  return chosen;
}

Key add_keys(const Key &a, const Key &b, const Integer &d) {
  Key out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = mod(a[i] + b[i], d);
  return out;
}

// All sums of the generators, by breadth-first search from 0.
std::set<Key> closure(const std::vector<Key> &gens, std::size_t n, const Integer &d) {
  std::set<Key> seen{Key(n)};
  std::deque<Key> frontier{Key(n)};
  while (!frontier.empty()) {
    const Key k = frontier.front();
    frontier.pop_front();
    for (const auto &g : gens) {
      Key next = add_keys(k, g, d);
      if (seen.insert(next).second)
        frontier.push_back(std::move(next));
    }
  }
  return seen;
}

// Element orders of Z^n / column-span(m), one entry per element.
std::vector<Integer> element_orders(const IntMatrix &m, const Integer &bound) {
  const std::size_t n = m.rows();
  if (n == 0)
    return {Integer(1)};
  const std::vector<std::size_t> cols = independent_columns(m);
  if (cols.size() < n)
    throw std::invalid_argument("matrix does not have full row rank: cokernel is infinite");
  IntMatrix sq(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      sq(i, j) = m(i, cols[j]);
  const RationalInverse ri = invert(sq);
  const Integer d = abs(ri.det.get_num());
  if (d > bound)
    throw std::invalid_argument("enumeration needs " + d.get_str() + " cosets, over the bound " +
                                bound.get_str());
  // For the square part, x lies in the image iff adj x == 0 (mod |det|), so
  // adj x mod |det| is a faithful coset key.
  auto key_of = [&](const IntVector &x) {
    Key k(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc += ri.inv[i][j] * ri.det * x[j];
      k[i] = mod(acc.get_num(), d);
    }
    return k;
  };
  std::vector<Key> gens;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n);
    e[j] = 1;
    gens.push_back(key_of(e));
  }
  const std::set<Key> all = closure(gens, n, d);
  if (Integer(static_cast<unsigned long>(all.size())) != d)
    throw std::logic_error("coset enumeration found " + std::to_string(all.size()) +
                           " cosets, expected " + d.get_str());
  // remaining columns generate a subgroup h; the cokernel is all / h
  std::vector<Key> extra;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end())
      extra.push_back(key_of(m.col(j)));
  std::vector<Integer> orders;
  if (extra.empty()) {
    // order of x is |det| / gcd(|det|, key entries)
    for (const auto &x : all) {
      Integer g = d;
      for (const auto &c : x)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      orders.push_back(d / g);
    }
    return orders;
  }
  const std::set<Key> h = closure(extra, n, d);
  std::set<Key> covered;
  for (const auto &x : all) {
    if (covered.count(x))
      continue;
    for (const auto &y : h)
      covered.insert(add_keys(x, y, d));
    Integer k = 1;
    for (Key acc = x; !h.count(acc); acc = add_keys(acc, x, d))
      ++k;
    orders.push_back(k);
  }
  return orders;
}

std::vector<unsigned long> prime_factors(Integer n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p))
        n /= p;
    }
  }
  if (n > 1)
    ps.push_back(n.get_ui());
  return ps;
}

} // namespace

std::map<Integer, Integer> cokernel_order_statistics(const IntMatrix &m, const Integer &bound) {
  std::map<Integer, Integer> stats;
  for (const auto &k : element_orders(m, bound))
    stats[k] += 1;
  return stats;
}

FgAbGroup oracle_cokernel(const IntMatrix &m, const Integer &bound) {
  return group_from_order_statistics(cokernel_order_statistics(m, bound));
}

FgAbGroup group_from_order_statistics(const std::map<Integer, Integer> &stats) {
  Integer total = 0;
  for (const auto &[ord, cnt] : stats)
    total += cnt;
  if (total < 1)
    throw std::invalid_argument("empty order statistics");

  // per prime: exponents of the cyclic p-primary factors, largest first
  std::vector<std::vector<Integer>> columns;
  for (unsigned long p : prime_factors(total)) {
    std::vector<unsigned long> ge; // ge[j-1] = number of factors with exponent >= j
    unsigned long prev_log = 0;
    for (unsigned long j = 1;; ++j) {
      Integer pj;
      mpz_ui_pow_ui(pj.get_mpz_t(), p, j);
      Integer count = 0;
      for (const auto &[ord, cnt] : stats)
        if (mpz_divisible_p(pj.get_mpz_t(), ord.get_mpz_t()))
          count += cnt;
      unsigned long lg = 0;
      while (mpz_divisible_ui_p(count.get_mpz_t(), p)) {
        count /= p;
        ++lg;
      }
      if (count != 1)
        throw std::invalid_argument("order statistics are not those of an abelian group");
      if (lg == prev_log)
        break;
      ge.push_back(lg - prev_log);
      prev_log = lg;
    }
    std::vector<Integer> powers;
    for (std::size_t i = 0; ge.size() > 0 && i < ge.front(); ++i) {
      unsigned long e = 0;
      while (e < ge.size() && ge[e] > i)
        ++e;
      Integer pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
      powers.push_back(pe);
    }
    columns.push_back(powers);
  }
  std::size_t width = 0;
  for (const auto &c : columns)
    width = std::max(width, c.size());
  IntVector factors(width, Integer(1));
  for (const auto &c : columns)
    for (std::size_t i = 0; i < c.size(); ++i)
      factors[i] *= c[i];
  std::reverse(factors.begin(), factors.end());
  FgAbGroup g;
  g.torsion = factors;
  return g;
}

} // namespace ktf::oracle
