#pragma once
// Finitely generated abelian groups: canonical forms, presentations and
// homomorphisms between presentations.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ktf/zmatrix.hpp"

namespace ktf {

/// Z^free_rank + Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
///
/// Elements are written in canonical coordinates: the free coordinates
/// first, then one coordinate per torsion factor (reduced into [0, t_i)).
struct FgAbGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free(std::size_t rank) { return {rank, {}}; }
  static FgAbGroup cyclic(const Integer &order);
  /// Canonical form of the direct sum of cyclic groups Z/c_i, where c_i == 0
  /// stands for Z and c_i == 1 for the trivial group. Any order of the c_i is
  /// accepted.
  static FgAbGroup from_cyclic_orders(const IntVector &orders);

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Number of canonical coordinates.
  std::size_t dimension() const { return free_rank + torsion.size(); }
  /// Group order; throws for infinite groups.
  Integer order() const;
  /// Reduce torsion coordinates into [0, t_i); throws on wrong length.
  IntVector reduce(const IntVector &element) const;
  bool is_zero_element(const IntVector &element) const;
  /// Whether the canonical invariants are valid (entries >= 2, chain holds).
  bool is_canonical() const;

  /// e.g. "Z^2 + Z/3", "0".
  std::string to_string() const;

  friend bool operator==(const FgAbGroup &, const FgAbGroup &) = default;
};

/// Z^generators / column-span(relations).
struct PresentedGroup {
  std::size_t generators = 0;
  IntMatrix relations;

  PresentedGroup() = default;
  PresentedGroup(std::size_t n, IntMatrix rel);
  static PresentedGroup free(std::size_t n) { return {n, IntMatrix(n, 0)}; }
  /// The canonical presentation of g: generators in canonical coordinates,
  /// one relation column per torsion factor.
  static PresentedGroup canonical(const FgAbGroup &g);

  /// Whether a - b lies in the relation lattice.
  bool equal_elements(const IntVector &a, const IntVector &b) const;
};

/// Homomorphism source -> target given on generators; matrix has
/// target.generators rows and source.generators columns.
struct GroupHom {
  PresentedGroup source;
  PresentedGroup target;
  IntMatrix matrix;

  static GroupHom identity(const PresentedGroup &g);
};

/// Canonical form plus the isomorphism from the input presentation onto
/// PresentedGroup::canonical(group).
struct Normalized {
  FgAbGroup group;
  GroupHom iso;
};

/// Canonical form of Z^rows / column-span(m), from the Smith diagonal.
FgAbGroup cokernel(const IntMatrix &m);

Normalized normalize(const PresentedGroup &g);
FgAbGroup direct_sum(const FgAbGroup &a, const FgAbGroup &b);
FgAbGroup direct_sum(const std::vector<FgAbGroup> &parts);

bool is_well_defined(const GroupHom &h);
/// Throws std::invalid_argument for ill-defined homomorphisms.
FgAbGroup hom_kernel(const GroupHom &h);
/// Throws std::invalid_argument for ill-defined homomorphisms.
FgAbGroup hom_cokernel(const GroupHom &h);

bool iso_check(const FgAbGroup &a, const FgAbGroup &b);

/// Exhaustive enumeration of a finite group: element order -> count.
/// Throws for infinite groups or groups with more than max_elements elements.
std::map<Integer, Integer> order_statistics(const FgAbGroup &g,
                                            const Integer &max_elements = 1000000);

/// Ext^1(a, b): sum over torsion factors t of a of coker(x t on b).
FgAbGroup ext1(const FgAbGroup &a, const FgAbGroup &b);

/// Endomorphism x -> factor * x of g, on its canonical presentation.
GroupHom multiplication_map(const FgAbGroup &g, const Integer &factor);

/// Two-sided inverse of an endomorphism on the same presentation, if the
/// map is an automorphism.
std::optional<IntMatrix> automorphism_inverse(const GroupHom &h);

} // namespace ktf
