#pragma once
// Brute-force cokernel oracle. Shares no code with the Smith/Hermite path:
// it inverts over Q by Gauss-Jordan, enumerates the quotient group element by
// element and rebuilds the invariant factors from element-order counts.

#include <map>

#include "ktf/fgab.hpp"

namespace ktf::oracle {

/// Default enumeration bound; the CLI overrides it from KTF_MAX_ENUM.
inline const Integer kDefaultMaxEnum = 1000000;

/// Z^n / column-span(m) for m of full row rank. The leftmost n independent
/// columns form a square block s with |det s| <= bound; its quotient is
/// enumerated and then divided by the remaining columns. Throws
/// std::invalid_argument for infinite or over-bound input.
FgAbGroup oracle_cokernel(const IntMatrix &m, const Integer &bound = kDefaultMaxEnum);

/// Element order -> count for the same quotient, by enumeration.
std::map<Integer, Integer> cokernel_order_statistics(const IntMatrix &m,
                                                    const Integer &bound = kDefaultMaxEnum);

/// The finite abelian group with the given element-order statistics.
FgAbGroup group_from_order_statistics(const std::map<Integer, Integer> &stats);

} // namespace ktf::oracle
