#include "kstate/alexander.hpp"

#include <string>

#include "bareiss.hpp"
#include "kstate/error.hpp"

namespace kstate {

LaurentPolynomial state_sum_raw(const Diagram& d, const MarkedEdge& e, const GradingTables& tables,
                                std::uint64_t max_states) {
  LaurentPolynomial sum;
  for_each_state(
      d, e,
      [&](const KauffmanState& x) {
        const Quarter m = maslov(x, d, tables);
        const Quarter a = alexander(x, d, tables);
        if (!m.is_integer() || !a.is_integer()) {
          throw Error(ErrorKind::invariant, "state has non-integer grading (M=" + m.to_string() +
                                                ", A=" + a.to_string() + ")");
        }
        const long sign = m.whole_part() % 2 == 0 ? 1 : -1;
        sum += LaurentPolynomial::monomial(sign, static_cast<int>(a.whole_part()));
      },
      max_states);
  return sum;
}

LaurentPolynomial state_sum_euler(const Diagram& d, const MarkedEdge& e, const GradingTables& tables,
                                  std::uint64_t max_states) {
  return state_sum_raw(d, e, tables, max_states).normalized();
}

std::vector<int> wirtinger_arcs(const Diagram& d) {
  const int labels = d.edge_count();
  std::vector<int> arc(labels, -1);
  // Start on an edge leaving an under-pass so each arc gets one contiguous id.
  int start = 1;
  while (d.edge(start).tail_pass != Pass::under) ++start;
  int current = -1;
  for (int k = 0; k < labels; ++k) {
    const int label = (start - 1 + k) % labels + 1;
    if (d.edge(label).tail_pass == Pass::under) ++current;
    arc[label - 1] = current;
  }
  return arc;
}

namespace {

struct Letter {
  int generator;
  int exponent;  // +-1
};

/// Abelianized Fox derivative of a word with respect to `generator`; every generator maps to t.
LaurentPolynomial fox_derivative(const std::vector<Letter>& word, int generator) {
  LaurentPolynomial out;
  int prefix = 0;
  for (const Letter& l : word) {
    if (l.generator == generator) {
      if (l.exponent > 0)
        out += LaurentPolynomial::monomial(1, prefix);
      else
        out -= LaurentPolynomial::monomial(1, prefix - 1);
    }
    prefix += l.exponent;
  }
  return out;
}

}  // namespace

LaurentPolynomial fox_alexander(const Diagram& d, int marked_label) {
  const int n = d.crossing_count();
  const std::vector<int> arc = wirtinger_arcs(d);
  if (marked_label < 1 || marked_label > d.edge_count())
    throw Error(ErrorKind::malformed, "no edge labelled " + std::to_string(marked_label));

  // Relation at a crossing: x_out = x_over^s x_in x_over^-s.
  std::vector<std::vector<LaurentPolynomial>> matrix(n, std::vector<LaurentPolynomial>(n));
  for (const Crossing& c : d.crossings()) {
    const int over = arc[c.slots[c.over_in_slot()] - 1];
    const int in = arc[c.slots[0] - 1];
    const int out = arc[c.slots[2] - 1];
    const int s = c.sign;
    const std::vector<Letter> relator{{over, s}, {in, 1}, {over, -s}, {out, -1}};
    for (int g = 0; g < n; ++g) matrix[c.id][g] = fox_derivative(relator, g);
  }

  const int drop_column = arc[marked_label - 1];
  // The arc through the marked edge ends where it next passes under.
  int label = marked_label;
  while (d.edge(label).head_pass != Pass::under) label = label % d.edge_count() + 1;
  const int drop_row = d.edge(label).head.crossing;

  std::vector<std::vector<LaurentPolynomial>> minor;
  for (int r = 0; r < n; ++r) {
    if (r == drop_row) continue;
    std::vector<LaurentPolynomial> row;
    for (int col = 0; col < n; ++col)
      if (col != drop_column) row.push_back(matrix[r][col]);
    minor.push_back(std::move(row));
  }
  const LaurentPolynomial det = detail::bareiss_determinant(std::move(minor));
  if (det.is_zero()) throw Error(ErrorKind::invariant, "Alexander matrix minor is singular");
  return det.normalized();
}

BigInt determinant(const Diagram& d) {
  const BigInt v = fox_alexander(d).evaluate(-1);
  return v < 0 ? BigInt(-v) : v;
}

}  // namespace kstate
