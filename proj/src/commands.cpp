#include "kstate/commands.hpp"

#include <ostream>

#include "kstate/analysis.hpp"
#include "kstate/census.hpp"
#include "kstate/error.hpp"
#include "kstate/report.hpp"

namespace kstate {

namespace {

std::string_view trimmed(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void report_error(std::ostream& err, const Error& e) {
  err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
}

// A bare diagram is treated as a one-record census.
std::vector<CensusRecord> load_records(std::string_view input) {
  if (looks_like_census(input)) return parse_census(input);
  const Diagram d = parse_diagram(input);
  return {CensusRecord{"diagram", d.pd_string(), std::nullopt, std::nullopt}};
}

int validate_one(const Diagram& d, std::ostream& out) {
  const int n = d.crossing_count();
  const int faces = static_cast<int>(d.faces().size());
  out << "crossings: " << n << '\n';
  out << "labels: pass (1.." << d.edge_count() << ", each twice)\n";
  out << "components: 1\n";
  out << "faces: " << faces << '\n';
  out << "euler: " << (n - d.edge_count() + faces == 2 ? "pass" : "FAIL") << " (" << n << " - "
      << d.edge_count() << " + " << faces << " = " << n - d.edge_count() + faces << ")\n";
  out << "writhe: " << d.writhe() << '\n';
  out << "alternating: " << (is_alternating(d) ? "yes" : "no") << '\n';
  out << "reduced: " << (is_reduced(d) ? "yes" : "no") << '\n';
  face_colors(d);  // throws if the checkerboard coloring is improper
  out << "checkerboard: pass\n";
  return 0;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  const std::string_view t = trimmed(text);
  if (!t.empty() && (t.front() == 'O' || t.front() == 'U' || t.front() == 'o' || t.front() == 'u'))
    return parse_gauss(t);
  return parse_pd(t);
}

int cmd_validate(std::string_view input, std::ostream& out, std::ostream& err) {
  try {
    if (!looks_like_census(input)) return validate_one(parse_diagram(input), out);
    int status = 0;
    for (const CensusRecord& record : parse_census(input)) {
      try {
        const Diagram d = parse_pd(record.pd);
        face_colors(d);
        out << record.name << ": pass, faces: " << d.faces().size() << '\n';
      } catch (const Error& e) {
        out << record.name << ": FAIL " << to_string(e.kind()) << ": " << e.what() << '\n';
        if (status == 0) status = exit_code(e.kind());
      }
    }
    return status;
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code(e.kind());
  }
}

int cmd_analyze(std::string_view input, const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err) {
  const bool census = looks_like_census(input);
  std::vector<CensusRecord> records;
  try {
    records = load_records(input);
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code(e.kind());
  }
  AnalysisOptions analysis;
  analysis.edge = options.edge;
  analysis.mirror_checks = true;
  analysis.max_states = options.max_states;
  const std::vector<DiagramAnalysis> results = analyze_batch(records, analysis, options.jobs);
  const RunSummary summary = summarize(results);

  if (options.json) {
    const Json doc = census ? run_report(results, summary) : to_json(results.front());
    out << doc.dump(2) << '\n';
  } else {
    for (const DiagramAnalysis& a : results) out << to_text(a);
    if (census) out << to_text(summary);
  }
  for (const DiagramAnalysis& a : results)
    if (a.error) err << a.name << ": " << *a.error << '\n';
  return summary.exit_status;
}

int cmd_verify(std::string_view input, const VerifyCommandOptions& options, std::ostream& out,
               std::ostream& err) {
  std::vector<CensusRecord> records;
  try {
    records = load_records(input);
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code(e.kind());
  }

  std::size_t skipped = 0;
  if (options.max_crossings) {
    std::vector<CensusRecord> kept;
    for (CensusRecord& r : records) {
      // Unparseable records are kept so their errors are reported.
      bool keep = true;
      try {
        keep = parse_pd(r.pd).crossing_count() <= *options.max_crossings;
      } catch (const Error&) {
      }
      if (keep) kept.push_back(std::move(r));
      else ++skipped;
    }
    records = std::move(kept);
  }

  AnalysisOptions analysis;
  analysis.deep = options.deep;
  analysis.mirror_checks = true;
  analysis.max_states = options.max_states;
  if (options.tables) analysis.tables = *options.tables;
  const std::vector<DiagramAnalysis> results = analyze_batch(records, analysis, options.jobs);
  const RunSummary summary = summarize(results, skipped);

  if (options.json) {
    out << run_report(results, summary).dump(2) << '\n';
  } else {
    for (const DiagramAnalysis& a : results)
      if (!a.passed()) out << to_text(a);
    out << to_text(summary);
    out << (summary.exit_status == 0 ? "verify: PASS" : "verify: FAIL") << '\n';
  }
  for (const DiagramAnalysis& a : results)
    if (a.error) err << a.name << ": " << *a.error << '\n';
  return summary.exit_status;
}

}  // namespace kstate
