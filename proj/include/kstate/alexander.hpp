#pragma once

#include "kstate/diagram.hpp"
#include "kstate/gradings.hpp"
#include "kstate/kauffman_states.hpp"
#include "kstate/laurent.hpp"

namespace kstate {

/// Graded Euler characteristic sum over states of (-1)^M t^A, before normalization.
/// Throws ErrorKind::invariant if some M or A is not an integer.
LaurentPolynomial state_sum_raw(const Diagram& d, const MarkedEdge& e,
                                const GradingTables& tables = standard_tables(),
                                std::uint64_t max_states = default_max_states);

/// state_sum_raw, symmetrically normalized.
LaurentPolynomial state_sum_euler(const Diagram& d, const MarkedEdge& e,
                                  const GradingTables& tables = standard_tables(),
                                  std::uint64_t max_states = default_max_states);

/// Arc index (0-based) of every edge: arcs run from one under-pass to the next.
std::vector<int> wirtinger_arcs(const Diagram& d);

/// Alexander polynomial from Fox derivatives of the Wirtinger presentation, with the
/// column of the arc through `marked_label` and the row of the crossing ending that arc removed.
LaurentPolynomial fox_alexander(const Diagram& d, int marked_label = 1);

/// |Delta(-1)|.
BigInt determinant(const Diagram& d);

}  // namespace kstate
