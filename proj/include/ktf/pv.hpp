#pragma once
// K-theory of a crossed product C(X) x Z from the (K^0, K^1) data of X and
// the automorphisms induced by the homeomorphism.

#include <string>

#include "ktf/fgab.hpp"

namespace ktf {

/// K-theoretic shadow of a space with a homeomorphism.
struct SpaceKModel {
  PresentedGroup k0;
  PresentedGroup k1;
  IntMatrix aut0; ///< acts on k0
  IntMatrix aut1; ///< acts on k1
  IntVector unit; ///< class of the unit in k0

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

enum class ExtStatus { SplitForced, Ambiguous };

std::string to_string(ExtStatus s);

/// One K-group of the crossed product, sitting in 0 -> sub -> K -> quot -> 0.
struct ExtensionK {
  FgAbGroup group; ///< sub + quot; only proved when status is SplitForced
  ExtStatus status = ExtStatus::SplitForced;
  FgAbGroup sub;
  FgAbGroup quot;
};

struct CrossedProductK {
  ExtensionK k0;
  ExtensionK k1;

  bool split() const {
    return k0.status == ExtStatus::SplitForced && k1.status == ExtStatus::SplitForced;
  }
};

/// Resolve 0 -> sub -> ? -> quot -> 0 as far as the data forces.
ExtensionK resolve_extension(const FgAbGroup &sub, const FgAbGroup &quot);

/// K_0 sits in 0 -> coker(1 - aut0) -> K_0 -> ker(1 - aut1) -> 0 and K_1 in
/// 0 -> coker(1 - aut1) -> K_1 -> ker(1 - aut0) -> 0.
CrossedProductK pv_compute(const SpaceKModel &m);

/// Free ranks of K_0 and K_1 agree and K_1 has free rank >= 1. Throws when
/// either extension is ambiguous.
bool rank_duality_check(const CrossedProductK &r);

} // namespace ktf
