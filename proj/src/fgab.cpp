#include "ktf/fgab.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ktf {

FgAbGroup FgAbGroup::cyclic(const Integer &order) { return from_cyclic_orders({order}); }

FgAbGroup FgAbGroup::from_cyclic_orders(const IntVector &orders) {
  for (const auto &o : orders)
    if (sgn(o) < 0)
      throw std::invalid_argument("cyclic order must be nonnegative");
  return cokernel(IntMatrix::diagonal(orders));
}

Integer FgAbGroup::order() const {
  if (!is_finite())
    throw std::invalid_argument("order of an infinite group");
  Integer n = 1;
  for (const auto &t : torsion)
    n *= t;
  return n;
}

IntVector FgAbGroup::reduce(const IntVector &element) const {
  if (element.size() != dimension())
    throw std::invalid_argument("element has " + std::to_string(element.size()) +
                                " coordinates, group " + to_string() + " expects " +
                                std::to_string(dimension()));
  IntVector out = element;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Integer &x = out[free_rank + i];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion[i].get_mpz_t());
  }
  return out;
}

bool FgAbGroup::is_zero_element(const IntVector &element) const {
  return is_zero(reduce(element));
}

bool FgAbGroup::is_canonical() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      return false;
    if (i + 1 < torsion.size() &&
        mpz_divisible_p(torsion[i + 1].get_mpz_t(), torsion[i].get_mpz_t()) == 0)
      return false;
  }
  return true;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial())
    return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1)
      os << '^' << free_rank;
    first = false;
  }
  for (const auto &t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

PresentedGroup::PresentedGroup(std::size_t n, IntMatrix rel)
    : generators(n), relations(std::move(rel)) {
  if (relations.rows() != n)
    throw std::invalid_argument("relation matrix has " + std::to_string(relations.rows()) +
                                " rows, expected one per generator (" + std::to_string(n) +
                                ")");
}

PresentedGroup PresentedGroup::canonical(const FgAbGroup &g) {
  IntMatrix rel(g.dimension(), g.torsion.size());
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    rel(g.free_rank + i, i) = g.torsion[i];
  return {g.dimension(), std::move(rel)};
}

bool PresentedGroup::equal_elements(const IntVector &a, const IntVector &b) const {
  if (a.size() != generators || b.size() != generators)
    throw std::invalid_argument("element length does not match generator count");
  IntVector diff(generators);
  for (std::size_t i = 0; i < generators; ++i)
    diff[i] = a[i] - b[i];
  return solve(relations, diff).has_value();
}

GroupHom GroupHom::identity(const PresentedGroup &g) {
  return {g, g, IntMatrix::identity(g.generators)};
}

FgAbGroup cokernel(const IntMatrix &m) {
  const IntVector diag = snf(m).diagonal();
  FgAbGroup g;
  g.free_rank = m.rows() - diag.size();
  for (const auto &x : diag) {
    if (sgn(x) == 0)
      ++g.free_rank;
    else if (x != 1)
      g.torsion.push_back(x);
  }
  return g;
}

Normalized normalize(const PresentedGroup &g) {
  const SnfResult s = snf(g.relations);
  const std::size_t n = g.generators;
  std::vector<std::size_t> free_idx, torsion_idx;
  FgAbGroup canon;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer di = i < std::min(s.d.rows(), s.d.cols()) ? Integer(s.d(i, i)) : Integer(0);
    if (sgn(di) == 0)
      free_idx.push_back(i);
    else if (di != 1) {
      torsion_idx.push_back(i);
      canon.torsion.push_back(di);
    }
  }
  canon.free_rank = free_idx.size();

  IntMatrix iso(canon.dimension(), n);
  std::size_t r = 0;
  for (auto idx : {&free_idx, &torsion_idx})
    for (std::size_t i : *idx) {
      for (std::size_t j = 0; j < n; ++j)
        iso(r, j) = s.u(i, j);
      ++r;
    }
  return {canon, GroupHom{g, PresentedGroup::canonical(canon), std::move(iso)}};
}

FgAbGroup direct_sum(const FgAbGroup &a, const FgAbGroup &b) { return direct_sum({a, b}); }

FgAbGroup direct_sum(const std::vector<FgAbGroup> &parts) {
  IntVector orders;
  std::size_t free_rank = 0;
  for (const auto &p : parts) {
    free_rank += p.free_rank;
    orders.insert(orders.end(), p.torsion.begin(), p.torsion.end());
  }
  FgAbGroup g = FgAbGroup::from_cyclic_orders(orders);
  g.free_rank += free_rank;
  return g;
}

namespace {

void check_shape(const GroupHom &h) {
  if (h.matrix.rows() != h.target.generators || h.matrix.cols() != h.source.generators)
    throw std::invalid_argument("homomorphism matrix is " + std::to_string(h.matrix.rows()) +
                                "x" + std::to_string(h.matrix.cols()) + ", expected " +
                                std::to_string(h.target.generators) + "x" +
                                std::to_string(h.source.generators));
}

void require_well_defined(const GroupHom &h) {
  if (!is_well_defined(h))
    throw std::invalid_argument(
        "homomorphism is not well-defined: a source relation maps outside the target "
        "relation lattice");
}

} // namespace

bool is_well_defined(const GroupHom &h) {
  check_shape(h);
  return solve(h.target.relations, h.matrix * h.source.relations).has_value();
}

FgAbGroup hom_kernel(const GroupHom &h) {
  require_well_defined(h);
  const std::size_t n = h.source.generators;
  // {(x, y) : M x + R_t y = 0}, projected to x, is the preimage of the
  // target relation lattice.
  const IntMatrix k = kernel_basis(h.matrix.hconcat(h.target.relations));
  const IntMatrix preimage = column_lattice_basis(k.row_range(0, n));
  const auto rel = solve(preimage, h.source.relations);
  if (!rel)
    throw std::logic_error("hom_kernel: source relations outside preimage lattice");
  return cokernel(*rel);
}

FgAbGroup hom_cokernel(const GroupHom &h) {
  require_well_defined(h);
  return cokernel(h.matrix.hconcat(h.target.relations));
}

bool iso_check(const FgAbGroup &a, const FgAbGroup &b) { return a == b; }

std::map<Integer, Integer> order_statistics(const FgAbGroup &g, const Integer &max_elements) {
  if (!g.is_finite())
    throw std::invalid_argument("order statistics of an infinite group " + g.to_string());
  if (g.order() > max_elements)
    throw std::invalid_argument("group " + g.to_string() + " has more than " +
                                max_elements.get_str() + " elements");
  std::map<Integer, Integer> stats;
  IntVector x(g.torsion.size());
  for (;;) {
    Integer ord = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Integer gi, oi;
      mpz_gcd(gi.get_mpz_t(), x[i].get_mpz_t(), g.torsion[i].get_mpz_t());
      oi = g.torsion[i] / gi;
      mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), oi.get_mpz_t());
    }
    stats[ord] += 1;
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < g.torsion[i])
        break;
      x[i] = 0;
    }
    if (i == x.size())
      break;
  }
  return stats;
}

GroupHom multiplication_map(const FgAbGroup &g, const Integer &factor) {
  const PresentedGroup p = PresentedGroup::canonical(g);
  return {p, p, factor * IntMatrix::identity(g.dimension())};
}

FgAbGroup ext1(const FgAbGroup &a, const FgAbGroup &b) {
  std::vector<FgAbGroup> parts;
  for (const auto &t : a.torsion)
    parts.push_back(hom_cokernel(multiplication_map(b, t)));
  return direct_sum(parts);
}

std::optional<IntMatrix> automorphism_inverse(const GroupHom &h) {
  check_shape(h);
  const std::size_t n = h.source.generators;
  if (h.target.generators != n)
    return std::nullopt;
  if (!is_well_defined(h))
    return std::nullopt;
  const IntMatrix a = h.matrix.hconcat(h.target.relations);
  auto sol = solve(a, IntMatrix::identity(n));
  if (!sol)
    return std::nullopt;
  IntMatrix inv = sol->row_range(0, n);
  GroupHom back{h.target, h.source, inv};
  if (!is_well_defined(back))
    return std::nullopt;
  if (!solve(h.source.relations, inv * h.matrix - IntMatrix::identity(n)))
    return std::nullopt;
  return inv;
}

} // namespace ktf
