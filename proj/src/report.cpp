#include "kstate/report.hpp"

#include <charconv>
#include <sstream>

#include "kstate/error.hpp"

namespace kstate {

namespace {

Json optional_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json histogram_json(const std::map<Quarter, std::uint64_t>& histogram) {
  Json out = Json::object();
  for (const auto& [value, count] : histogram) out[value.to_string()] = count;
  return out;
}

std::string histogram_text(const std::map<Quarter, std::uint64_t>& histogram) {
  std::string out = "{";
  for (const auto& [value, count] : histogram) {
    if (out.size() > 1) out += ", ";
    out += value.to_string() + ": " + std::to_string(count);
  }
  return out + "}";
}

std::string crossing_list(const FixableSet& f) {
  if (f.crossings.empty()) return "-";
  std::string out;
  for (int c : f.crossings) {
    if (!out.empty()) out += ",";
    out += std::to_string(c);
  }
  return out;
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

const std::array<std::pair<const char*, QuadrantClass>, 3> class_keys{{
    {"N", QuadrantClass::north},
    {"S", QuadrantClass::south},
    {"lateral", QuadrantClass::lateral},
}};

}  // namespace

Json to_json(const LaurentPolynomial& p) {
  Json coefficients = Json::object();
  for (const auto& [exponent, c] : p.coefficients()) coefficients[std::to_string(exponent)] = c.str();
  return {{"string", p.to_string()}, {"coefficients", coefficients}};
}

Json to_json(Quarter q) { return {{"value", q.to_string()}, {"fourths", q.fourths()}}; }

Json to_json(const KauffmanState& x) {
  Json out = Json::array();
  for (std::size_t c = 0; c < x.assignment.size(); ++c)
    out.push_back({static_cast<int>(c), x.assignment[c].face, x.assignment[c].quadrant});
  return out;
}

Json to_json(const GradingVector& g) {
  return {{"maslov", to_json(g.maslov)}, {"alexander", to_json(g.alexander)}, {"delta", to_json(g.delta)}};
}

Json to_json(const PairTotals& t) {
  return {{"pairs", t.pairs},
          {"violations", t.violations},
          {"case_totals", t.case_totals},
          {"max_case_1", t.max_case_1},
          {"max_case_2", t.max_case_2},
          {"max_delta_difference", t.max_delta_difference.to_string()},
          {"tight_pairs", t.tight_pairs}};
}

Json to_json(const EdgeReport& edge) {
  Json out{{"label", edge.label},
           {"states", edge.states},
           {"spread", edge.spread ? Json(*edge.spread) : Json(nullptr)},
           {"delta_histogram", histogram_json(edge.delta_histogram)},
           {"spread_within_dalt", edge.spread_within_dalt}};
  if (edge.pairs) out["pairs"] = to_json(*edge.pairs);
  if (edge.error) out["error"] = *edge.error;
  return out;
}

Json to_json(const AlternationReport& r) {
  Json edges = Json::array();
  for (const EdgeReport& e : r.edges) edges.push_back(to_json(e));
  Json out{{"crossings", r.crossings},
           {"writhe", r.writhe},
           {"alternating", r.alternating},
           {"dalt", r.dalt},
           {"fixable_crossings", r.fixable.crossings},
           {"beta", r.beta},
           {"max_spread", r.max_spread ? Json(*r.max_spread) : Json(nullptr)},
           {"theorem_ok", r.theorem_ok},
           {"spread_within_beta", optional_bool(r.spread_within_beta)},
           {"edges", edges}};
  if (r.decomposition_ok) out["decomposition_ok"] = *r.decomposition_ok;
  if (!r.errors.empty()) out["errors"] = r.errors;
  return out;
}

Json to_json(const DiagramAnalysis& a) {
  Json out{{"name", a.name}, {"pd", a.pd}};
  if (a.report) {
    const AlternationReport& r = *a.report;
    out.update(to_json(r));
    // Headline numbers for single-edge runs.
    if (r.edges.size() == 1 && !r.edges.front().error) {
      out["states"] = r.edges.front().states;
      out["spread"] = r.edges.front().spread ? Json(*r.edges.front().spread) : Json(nullptr);
    }
  }
  Json checks = Json::object();
  checks["state_count_oracle"] = optional_bool(a.counts_match_oracle);
  checks["state_count_edge_independence"] = optional_bool(a.counts_edge_independent);
  checks["state_validity"] = optional_bool(a.states_valid);
  checks["f_decomposition"] = optional_bool(a.f_decomposition_ok);
  checks["delta_integrality"] = optional_bool(a.delta_integral);
  checks["grading_tables_delta"] = optional_bool(a.tables_match_delta);
  checks["good_face_uniformity"] = optional_bool(a.good_faces_uniform);
  checks["euler_vs_fox"] = optional_bool(a.euler_matches_fox);
  checks["euler_edge_independence"] = optional_bool(a.euler_edge_independent);
  checks["determinant_vs_state_count"] = optional_bool(a.determinant_matches_state_count);
  checks["expected_determinant"] = optional_bool(a.expected_determinant_ok);
  checks["expected_alternating"] = optional_bool(a.expected_alternating_ok);
  checks["mirror"] = optional_bool(a.mirror_ok);
  out["state_count_oracle"] = a.state_count_oracle ? Json(*a.state_count_oracle) : Json(nullptr);
  out["alexander_fox"] = a.fox ? to_json(*a.fox) : Json(nullptr);
  out["alexander_state_sum"] = a.state_sum ? to_json(*a.state_sum) : Json(nullptr);
  out["determinant"] = a.determinant ? Json(*a.determinant) : Json(nullptr);
  out["checks"] = checks;
  out["passed"] = a.passed();
  if (a.error) {
    out["error"] = *a.error;
    out["error_exit"] = a.error_exit;
  }
  return out;
}

RunSummary summarize(const std::vector<DiagramAnalysis>& results, std::size_t skipped) {
  RunSummary s;
  s.diagrams = results.size();
  s.skipped = skipped;
  int error_exit = 0;
  bool violation = false;
  for (const DiagramAnalysis& a : results) {
    if (a.passed()) {
      ++s.passed;
      continue;
    }
    ++s.failed;
    const std::vector<std::string> failed = a.failures();
    for (const std::string& name : failed) ++s.failures_by_check[name];
    if (!failed.empty()) violation = true;
    if (a.error) {
      ++s.errors;
      if (error_exit == 0) error_exit = a.error_exit;
    }
  }
  s.exit_status = violation ? 1 : error_exit;
  return s;
}

Json to_json(const RunSummary& s) {
  Json by_check = Json::object();
  for (const auto& [name, count] : s.failures_by_check) by_check[name] = count;
  return {{"diagrams", s.diagrams}, {"passed", s.passed},          {"failed", s.failed},
          {"errors", s.errors},     {"skipped", s.skipped},        {"failures_by_check", by_check},
          {"exit_status", s.exit_status}};
}

Json run_report(const std::vector<DiagramAnalysis>& results, const RunSummary& summary) {
  Json diagrams = Json::array();
  for (const DiagramAnalysis& a : results) diagrams.push_back(to_json(a));
  return {{"diagrams", diagrams}, {"summary", to_json(summary)}};
}

std::string to_text(const DiagramAnalysis& a) {
  std::ostringstream out;
  out << (a.name.empty() ? "diagram" : a.name) << ": " << a.pd << '\n';
  if (a.report) {
    const AlternationReport& r = *a.report;
    out << "  crossings " << r.crossings << ", writhe " << r.writhe << ", alternating "
        << yes_no(r.alternating) << '\n';
    out << "  dalt " << r.dalt << " (fixable: " << crossing_list(r.fixable) << "), beta " << r.beta
        << '\n';
    for (const EdgeReport& e : r.edges) {
      out << "  edge " << e.label << ": ";
      if (e.error) {
        out << "error " << *e.error << '\n';
        continue;
      }
      out << "states " << e.states << ", spread " << (e.spread ? std::to_string(*e.spread) : "-")
          << ", delta " << histogram_text(e.delta_histogram);
      if (e.pairs) {
        out << ", pairs " << e.pairs->pairs << " (violations " << e.pairs->violations << ", cases "
            << e.pairs->case_totals[0] << '/' << e.pairs->case_totals[1] << '/'
            << e.pairs->case_totals[2] << '/' << e.pairs->case_totals[3] << ')';
      }
      out << '\n';
    }
    out << "  spread <= dalt: " << yes_no(r.theorem_ok) << '\n';
  }
  if (a.fox) out << "  alexander (fox): " << a.fox->to_string() << '\n';
  if (a.state_sum) out << "  alexander (states): " << a.state_sum->to_string() << '\n';
  if (a.determinant) out << "  determinant: " << *a.determinant << '\n';
  if (a.state_count_oracle) out << "  spanning trees: " << *a.state_count_oracle << '\n';
  if (a.error) out << "  error: " << *a.error << '\n';
  const std::vector<std::string> failed = a.failures();
  if (failed.empty()) {
    out << "  checks: " << (a.error ? "incomplete" : "pass") << '\n';
  } else {
    out << "  checks: FAIL";
    for (const std::string& f : failed) out << ' ' << f;
    out << '\n';
  }
  return out.str();
}

std::string to_text(const RunSummary& s) {
  std::ostringstream out;
  out << "diagrams " << s.diagrams << ", passed " << s.passed << ", failed " << s.failed
      << ", errors " << s.errors;
  if (s.skipped) out << ", skipped " << s.skipped;
  out << '\n';
  for (const auto& [name, count] : s.failures_by_check) out << "  " << name << ": " << count << '\n';
  return out.str();
}

Quarter parse_quarter(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::malformed, "bad grading value '" + std::string(text) + "'"); };
  std::int64_t num = 0, den = 1;
  const std::size_t slash = text.find('/');
  const std::string_view head = text.substr(0, slash);
  auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), num);
  if (ec != std::errc{} || p != head.data() + head.size() || head.empty()) throw fail();
  if (slash != std::string_view::npos) {
    const std::string_view tail = text.substr(slash + 1);
    auto [q, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), den);
    if (ec2 != std::errc{} || q != tail.data() + tail.size() || tail.empty()) throw fail();
  }
  if (den <= 0 || 4 % den != 0) throw fail();
  return Quarter::from_fourths(num * (4 / den));
}

GradingTables parse_tables(std::string_view text) {
  GradingTables tables;
  try {
    const Json doc = Json::parse(text);
    for (const auto& [key, sign] : {std::pair{"positive", 1}, std::pair{"negative", -1}}) {
      const Json& block = doc.at(key);
      for (const auto& [name, cls] : class_keys) {
        const Json& entry = block.at(name);
        auto read = [&](const char* field) {
          const Json& v = entry.at(field);
          return v.is_string() ? parse_quarter(v.get<std::string>()) : Quarter::whole(v.get<std::int64_t>());
        };
        tables.at(sign, cls) = {read("maslov"), read("alexander")};
      }
    }
  } catch (const Json::exception& err) {
    throw Error(ErrorKind::malformed, std::string("grading tables: ") + err.what());
  }
  return tables;
}

Json to_json(const GradingTables& tables) {
  Json out = Json::object();
  for (const auto& [key, sign] : {std::pair{"positive", 1}, std::pair{"negative", -1}}) {
    Json block = Json::object();
    for (const auto& [name, cls] : class_keys) {
      const LocalGrading& g = tables.at(sign, cls);
      block[name] = {{"maslov", g.maslov.to_string()}, {"alexander", g.alexander.to_string()}};
    }
    out[key] = block;
  }
  return out;
}

}  // namespace kstate
