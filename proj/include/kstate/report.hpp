#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kstate/analysis.hpp"

namespace kstate {

using Json = nlohmann::ordered_json;

/// {"string": "t^-1 - 1 + t", "coefficients": {"-1": "1", "0": "-1", "1": "1"}}
Json to_json(const LaurentPolynomial& p);

/// Rational string plus the value scaled by 4: {"value": "-1/2", "fourths": -2}.
Json to_json(Quarter q);

/// One [crossing, face, quadrant] triple per crossing.
Json to_json(const KauffmanState& x);

Json to_json(const GradingVector& g);
Json to_json(const PairTotals& totals);
Json to_json(const EdgeReport& edge);
Json to_json(const AlternationReport& report);
Json to_json(const DiagramAnalysis& analysis);

/// Aggregate of a batch: counts plus the first failing record per check.
struct RunSummary {
  std::size_t diagrams = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  std::size_t skipped = 0;  // over --max-crossings
  std::map<std::string, std::size_t> failures_by_check;
  int exit_status = 0;
};

RunSummary summarize(const std::vector<DiagramAnalysis>& results, std::size_t skipped = 0);
Json to_json(const RunSummary& summary);

/// Full deterministic report: {"diagrams": [...], "summary": {...}}.
Json run_report(const std::vector<DiagramAnalysis>& results, const RunSummary& summary);

std::string to_text(const DiagramAnalysis& analysis);
std::string to_text(const RunSummary& summary);

/// Parses grading tables from JSON:
/// {"positive": {"N": {"maslov": "0", "alexander": "1/2"}, "S": ..., "lateral": ...},
///  "negative": {...}}. Throws kstate::Error(ErrorKind::malformed).
GradingTables parse_tables(std::string_view text);
Json to_json(const GradingTables& tables);

/// "3/4", "-1/2", "2" -> Quarter; only multiples of 1/4 are accepted.
Quarter parse_quarter(std::string_view text);

}  // namespace kstate
