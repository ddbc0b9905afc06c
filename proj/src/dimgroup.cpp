#include "ktf/dimgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktf {

namespace {

using Pattern = std::vector<std::vector<bool>>;

Pattern bool_product(const Pattern &a, const Pattern &b) {
  const std::size_t n = a.size();
  Pattern c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j])
            c[i][j] = true;
  return c;
}

bool all_true(const Pattern &p) {
  return std::all_of(p.begin(), p.end(), [](const auto &row) {
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
  });
}

bool strictly_positive(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return sgn(x) > 0; });
}

bool strictly_negative(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return sgn(x) < 0; });
}

void check_element(const DimensionGroup &g, const DgElement &x) {
  if (x.vector.size() != g.k())
    throw std::invalid_argument("dimension-group element has " +
                                std::to_string(x.vector.size()) + " coordinates, expected " +
                                std::to_string(g.k()));
}

} // namespace

std::string to_string(Sign s) {
  switch (s) {
  case Sign::Positive:
    return "positive";
  case Sign::Negative:
    return "negative";
  case Sign::Zero:
    return "zero";
  case Sign::Undetermined:
    break;
  }
  return "undetermined";
}

void DimensionGroup::validate(std::size_t power_bound) const {
  const std::size_t n = k();
  if (n == 0 || !step.is_square())
    throw std::invalid_argument("step must be a nonempty square matrix");
  if (unit.size() != n)
    throw std::invalid_argument("unit length does not match step size");
  Pattern p(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(step(i, j)) < 0)
        throw std::invalid_argument("step has a negative entry");
      p[i][j] = sgn(step(i, j)) > 0;
    }
  if (power_bound == 0)
    power_bound = n * n + 1;
  Pattern acc = p;
  bool primitive = all_true(acc);
  for (std::size_t e = 2; e <= power_bound && !primitive; ++e) {
    acc = bool_product(acc, p);
    primitive = all_true(acc);
  }
  if (!primitive)
    throw std::invalid_argument("step is not primitive within " + std::to_string(power_bound) +
                                " powers");
  if (is_zero(unit) ||
      std::any_of(unit.begin(), unit.end(), [](const Integer &x) { return sgn(x) < 0; }))
    throw std::invalid_argument("unit must be nonzero with nonnegative entries");
}

DimensionGroup DimensionGroup::golden_mean() { return {IntMatrix{{1, 1}, {1, 0}}, {1, 1}}; }

DgElement raise(const DimensionGroup &g, const DgElement &x, std::size_t level) {
  check_element(g, x);
  if (level < x.level)
    throw std::invalid_argument("cannot lower an element's level");
  DgElement y{level, x.vector};
  for (std::size_t l = x.level; l < level; ++l)
    y.vector = g.step * y.vector;
  return y;
}

bool equal(const DimensionGroup &g, const DgElement &a, const DgElement &b) {
  // k extra steps make the comparison exact even for singular steps
  const std::size_t level = std::max(a.level, b.level) + g.k();
  return raise(g, a, level).vector == raise(g, b, level).vector;
}

DgElement add(const DimensionGroup &g, const DgElement &a, const DgElement &b) {
  const std::size_t level = std::max(a.level, b.level);
  DgElement x = raise(g, a, level);
  const DgElement y = raise(g, b, level);
  for (std::size_t i = 0; i < x.vector.size(); ++i)
    x.vector[i] += y.vector[i];
  return x;
}

DgElement negate(const DgElement &x) {
  DgElement y = x;
  for (auto &v : y.vector)
    v = -v;
  return y;
}

Sign positivity(const DimensionGroup &g, const DgElement &x, std::size_t max_iter) {
  check_element(g, x);
  if (equal(g, x, DgElement{x.level, IntVector(g.k())}))
    return Sign::Zero;
  IntVector v = x.vector;
  for (std::size_t j = 0;; ++j) {
    if (strictly_positive(v))
      return Sign::Positive;
    if (strictly_negative(v))
      return Sign::Negative;
    if (j == max_iter)
      break;
    v = g.step * v;
  }
  return Sign::Undetermined;
}

UnderlyingGroup underlying(const DimensionGroup &g) {
  UnderlyingGroup u;
  u.det = determinant(g.step);
  if (sgn(u.det) == 0)
    throw std::invalid_argument("step is singular; underlying group needs an invertible step");
  u.finitely_generated = abs(u.det) == 1;
  if (u.finitely_generated)
    u.group = FgAbGroup::free(g.k());
  return u;
}

RationalInterval state_value(const DimensionGroup &g, const DgElement &x, std::size_t depth) {
  check_element(g, x);
  std::size_t level = x.level + depth;
  DgElement xs = raise(g, x, level);
  DgElement us = raise(g, DgElement{0, g.unit}, level);
  const std::size_t limit = level + g.k() * g.k() + 1;
  while (!strictly_positive(us.vector)) {
    if (level == limit)
      throw std::invalid_argument("unit does not become strictly positive; step not primitive");
    ++level;
    xs.vector = g.step * xs.vector;
    us.vector = g.step * us.vector;
  }
  RationalInterval r;
  for (std::size_t i = 0; i < g.k(); ++i) {
    mpq_class q(xs.vector[i], us.vector[i]);
    q.canonicalize();
    if (i == 0 || q < r.lo)
      r.lo = q;
    if (i == 0 || q > r.hi)
      r.hi = q;
  }
  return r;
}

} // namespace ktf
