#include "kstate/alternation.hpp"

#include <algorithm>

#include "kstate/error.hpp"

namespace kstate {

bool FixableSet::contains(int crossing) const {
  return std::binary_search(crossings.begin(), crossings.end(), crossing);
}

std::array<FixableSet, 2> alternating_assignments(const Diagram& d) {
  // Visits are numbered by the incoming edge label, so along the knot they
  // alternate parity; an alternating diagram is over on one parity class only.
  std::array<FixableSet, 2> masks;
  for (const Crossing& c : d.crossings()) {
    const int over_visit = c.slots[c.over_in_slot()];
    const int under_visit = c.slots[0];
    if ((over_visit + under_visit) % 2 == 0) {
      throw Error(ErrorKind::inconsistent, "crossing " + std::to_string(c.id) +
                                               " is visited twice with the same parity");
    }
    masks[over_visit % 2 == 0 ? 0 : 1].crossings.push_back(c.id);
  }
  return masks;
}

FixableSet min_fixable_set(const Diagram& d) {
  auto masks = alternating_assignments(d);
  const int a = masks[0].size(), b = masks[1].size();
  if (a != b) return a < b ? masks[0] : masks[1];
  return masks[0].contains(0) ? masks[0] : masks[1];
}

int dalt(const Diagram& d) { return min_fixable_set(d).size(); }

PairCheck pair_decomposition_check(const Diagram& d, const MarkedEdge& e, const KauffmanState& x,
                                   const KauffmanState& y, const FixableSet& fixable) {
  const std::vector<int> domains = marked_domains(d, e);
  std::vector<int> x_at(d.faces().size(), -1), y_at(d.faces().size(), -1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    x_at.at(x.assignment.at(c).face) = c;
    y_at.at(y.assignment.at(c).face) = c;
  }
  auto corner_f = [&](const KauffmanState& s, int c) {
    const Crossing& crossing = d.crossing(c);
    return f_value(crossing, quadrant_class(crossing, s.assignment[c].quadrant));
  };

  PairCheck out;
  Quarter f_difference;
  for (int face : domains) {
    const int cx = x_at[face], cy = y_at[face];
    if (cx < 0 || cy < 0) throw Error(ErrorKind::invariant, "state does not cover every domain");
    const bool fx = fixable.contains(cx), fy = fixable.contains(cy);
    const int category = !fx && fy ? 0 : fx && !fy ? 1 : fx && fy ? 2 : 3;
    ++out.case_counts[category];
    const Quarter diff = corner_f(x, cx) - corner_f(y, cy);
    f_difference += diff;
    const Quarter magnitude = diff < Quarter{} ? -diff : diff;
    if (category >= 2 && diff != Quarter{}) out.same_f_in_cases_3_4 = false;
    if (category < 2 && magnitude > Quarter::from_fourths(2)) out.half_bound_in_cases_1_2 = false;
  }
  const Quarter delta_diff = delta(x, d) - delta(y, d);
  if (delta_diff != f_difference) {
    throw Error(ErrorKind::invariant, "f-value sum disagrees with delta difference");
  }
  out.delta_difference = delta_diff < Quarter{} ? -delta_diff : delta_diff;
  out.case_counts_bounded = out.case_counts[0] <= fixable.size() && out.case_counts[1] <= fixable.size();
  out.delta_bounded = out.delta_difference <= Quarter::whole(fixable.size());
  return out;
}

void PairTotals::add(const PairCheck& check, int fixable_size) {
  ++pairs;
  if (!check.ok()) ++violations;
  for (int i = 0; i < 4; ++i) case_totals[i] += check.case_counts[i];
  max_case_1 = std::max(max_case_1, check.case_counts[0]);
  max_case_2 = std::max(max_case_2, check.case_counts[1]);
  max_delta_difference = std::max(max_delta_difference, check.delta_difference);
  if (check.delta_difference == Quarter::whole(fixable_size)) ++tight_pairs;
}

AlternationReport verify_theorem(const Diagram& d, const VerifyOptions& options, std::string name) {
  AlternationReport report;
  report.name = std::move(name);
  report.crossings = d.crossing_count();
  report.writhe = d.writhe();
  report.alternating = is_alternating(d);
  report.fixable = min_fixable_set(d);
  report.dalt = report.fixable.size();
  report.beta = bad_domain_count(d);

  std::vector<MarkedEdge> marked;
  try {
    if (options.edge) {
      const MarkedEdge m = marked_edge(d, *options.edge);
      if (m.excluded_faces[0] == m.excluded_faces[1])
        throw Error(ErrorKind::empty_state_set, "edge " + std::to_string(m.label) + " is not eligible");
      marked.push_back(m);
    } else {
      marked = eligible_marked_edges(d);
    }
  } catch (const Error& err) {
    report.errors.push_back(std::string(to_string(err.kind())) + ": " + err.what());
  }

  bool all_within = !marked.empty();
  bool decomposition = true;
  for (const MarkedEdge& m : marked) {
    EdgeReport edge;
    edge.label = m.label;
    try {
      const SpreadSummary summary = delta_summary(d, m, options.max_states);
      edge.states = summary.states;
      edge.delta_histogram = summary.histogram;
      if (auto s = summary.spread()) {
        if (!s->is_integer()) throw Error(ErrorKind::invariant, "delta spread is not an integer");
        edge.spread = s->whole_part();
        edge.spread_within_dalt = *edge.spread <= report.dalt;
        report.max_spread = std::max(report.max_spread.value_or(0), *edge.spread);
      } else {
        throw Error(ErrorKind::empty_state_set,
                    "marked edge " + std::to_string(m.label) + " has no Kauffman states");
      }
      if (options.deep) {
        const std::vector<KauffmanState> states = enumerate_states(d, m, options.max_states);
        PairTotals totals;
        for (std::size_t i = 0; i < states.size(); ++i)
          for (std::size_t j = i + 1; j < states.size(); ++j)
            totals.add(pair_decomposition_check(d, m, states[i], states[j], report.fixable),
                       report.dalt);
        if (totals.violations > 0) decomposition = false;
        edge.pairs = totals;
      }
    } catch (const Error& err) {
      edge.error = std::string(to_string(err.kind())) + ": " + err.what();
      report.errors.push_back("edge " + std::to_string(m.label) + ": " + *edge.error);
      if (err.kind() == ErrorKind::invariant) decomposition = false;
    }
    all_within = all_within && edge.spread_within_dalt;
    report.edges.push_back(std::move(edge));
  }
  report.theorem_ok = all_within;
  if (options.deep) report.decomposition_ok = decomposition && report.errors.empty();
  if (report.max_spread) report.spread_within_beta = *report.max_spread <= report.beta;
  return report;
}

}  // namespace kstate
