#pragma once
// SpaceKModels with prescribed crossed-product K-theory, assembled from
// companion-matrix blocks, identity blocks and suspension.

#include <optional>

#include "ktf/pv.hpp"

namespace ktf {

enum class Degree { Zero, One };

/// A free group with a finite-order automorphism placed in K^0 or K^1.
struct Block {
  PresentedGroup group;
  IntMatrix aut;
  Degree slot = Degree::Zero;
};

/// Z^{n-1} with the companion matrix B: ones on the first subdiagonal, -1
/// down the last column. ker(1 - B) = 0 and coker(1 - B) = Z/n.
Block companion_block(std::size_t n);

/// Z^d with the identity automorphism.
Block free_block(std::size_t d);

/// Move a degree-0 block to degree 1.
Block suspend(const Block &b);

/// Smallest k >= 1 with m^k == I, searching up to max_order.
std::optional<unsigned long> matrix_order(const IntMatrix &m, unsigned long max_order);

/// k0 = Z^d + companion blocks for f0, k1 = suspended companion blocks for
/// f1; the unit is the first coordinate.
SpaceKModel realize(std::size_t d, const FgAbGroup &f0, const FgAbGroup &f1);

/// k0 = Z generated by the unit, k1 = 0, identity automorphisms.
SpaceKModel pointlike_model();

} // namespace ktf
