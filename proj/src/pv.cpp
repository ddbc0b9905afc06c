#include "ktf/pv.hpp"

#include <stdexcept>

namespace ktf {

std::string to_string(ExtStatus s) {
  return s == ExtStatus::SplitForced ? "split-forced" : "ambiguous";
}

namespace {

void require_automorphism(const PresentedGroup &g, const IntMatrix &aut, const char *name) {
  if (aut.rows() != g.generators || aut.cols() != g.generators)
    throw std::invalid_argument(std::string(name) + " must be " +
                                std::to_string(g.generators) + "x" +
                                std::to_string(g.generators));
  const GroupHom h{g, g, aut};
  if (!is_well_defined(h))
    throw std::invalid_argument(std::string(name) + " is not well-defined on its group");
  if (!automorphism_inverse(h))
    throw std::invalid_argument(std::string(name) + " is not invertible");
}

GroupHom one_minus(const PresentedGroup &g, const IntMatrix &aut) {
  return {g, g, IntMatrix::identity(g.generators) - aut};
}

} // namespace

void SpaceKModel::validate() const {
  require_automorphism(k0, aut0, "aut0");
  require_automorphism(k1, aut1, "aut1");
  if (unit.size() != k0.generators)
    throw std::invalid_argument("unit has " + std::to_string(unit.size()) +
                                " coordinates, k0 has " + std::to_string(k0.generators) +
                                " generators");
  if (!k0.equal_elements(aut0 * unit, unit))
    throw std::invalid_argument("unit class is not fixed by aut0");
  // The unit must have infinite order: it generates the rank summand.
  const Normalized n = normalize(k0);
  const IntVector u = n.iso.matrix * unit;
  bool infinite = false;
  for (std::size_t i = 0; i < n.group.free_rank; ++i)
    infinite = infinite || sgn(u[i]) != 0;
  if (!infinite)
    throw std::invalid_argument("unit class has finite order in k0");
}

ExtensionK resolve_extension(const FgAbGroup &sub, const FgAbGroup &quot) {
  ExtensionK e;
  e.sub = sub;
  e.quot = quot;
  e.group = direct_sum(sub, quot);
  e.status = ext1(quot, sub).is_trivial() ? ExtStatus::SplitForced : ExtStatus::Ambiguous;
  return e;
}

CrossedProductK pv_compute(const SpaceKModel &m) {
  m.validate();
  const GroupHom d0 = one_minus(m.k0, m.aut0);
  const GroupHom d1 = one_minus(m.k1, m.aut1);
  CrossedProductK r;
  r.k0 = resolve_extension(hom_cokernel(d0), hom_kernel(d1));
  r.k1 = resolve_extension(hom_cokernel(d1), hom_kernel(d0));
  return r;
}

bool rank_duality_check(const CrossedProductK &r) {
  if (!r.split())
    throw std::invalid_argument("rank duality needs both extensions split-forced");
  return r.k0.group.free_rank == r.k1.group.free_rank && r.k1.group.free_rank >= 1;
}

} // namespace ktf
