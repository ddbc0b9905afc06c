#include "ktf/realize.hpp"

#include <stdexcept>

namespace ktf {

Block companion_block(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("companion block needs n >= 2, got " + std::to_string(n));
  const std::size_t k = n - 1;
  IntMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    b(i, k - 1) = -1;
    if (i > 0)
      b(i, i - 1) = 1;
  }
  return {PresentedGroup::free(k), std::move(b), Degree::Zero};
}

Block free_block(std::size_t d) {
  if (d == 0)
    throw std::invalid_argument("free block needs d >= 1");
  return {PresentedGroup::free(d), IntMatrix::identity(d), Degree::Zero};
}

Block suspend(const Block &b) {
  if (b.slot != Degree::Zero)
    throw std::invalid_argument("cannot suspend a degree-1 block");
  Block s = b;
  s.slot = Degree::One;
  return s;
}

std::optional<unsigned long> matrix_order(const IntMatrix &m, unsigned long max_order) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix p = m;
  for (unsigned long k = 1; k <= max_order; ++k) {
    if (p == id)
      return k;
    p = m * p; // m on the left: the product skips m's zero entries
  }
  return std::nullopt;
}

namespace {

std::vector<Block> cyclic_blocks(const FgAbGroup &f) {
  std::vector<Block> blocks;
  for (const auto &t : f.torsion) {
    if (!t.fits_ulong_p())
      throw std::invalid_argument("invariant factor " + t.get_str() + " is too large");
    blocks.push_back(companion_block(t.get_ui()));
  }
  return blocks;
}

std::pair<PresentedGroup, IntMatrix> assemble(const std::vector<Block> &blocks) {
  std::vector<IntMatrix> auts;
  std::size_t n = 0;
  for (const auto &b : blocks) {
    auts.push_back(b.aut);
    n += b.group.generators;
  }
  return {PresentedGroup::free(n), IntMatrix::block_diagonal(auts)};
}

} // namespace

SpaceKModel realize(std::size_t d, const FgAbGroup &f0, const FgAbGroup &f1) {
  if (d == 0)
    throw std::invalid_argument("d must be >= 1: the unitary generates a copy of Z in K_1");
  if (!f0.is_finite() || !f1.is_finite())
    throw std::invalid_argument("f0 and f1 must be finite groups");

  std::vector<Block> deg0{free_block(d)};
  for (auto &b : cyclic_blocks(f0))
    deg0.push_back(std::move(b));
  std::vector<Block> deg1;
  for (const auto &b : cyclic_blocks(f1))
    deg1.push_back(suspend(b));

  auto [k0, aut0] = assemble(deg0);
  auto [k1, aut1] = assemble(deg1);
  IntVector unit(k0.generators);
  unit[0] = 1;
  return {std::move(k0), std::move(k1), std::move(aut0), std::move(aut1), std::move(unit)};
}

SpaceKModel pointlike_model() {
  return {PresentedGroup::free(1), PresentedGroup::free(0), IntMatrix::identity(1),
          IntMatrix::identity(0), IntVector{1}};
}

} // namespace ktf
