#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kstate/alexander.hpp"
#include "kstate/alternation.hpp"
#include "kstate/census.hpp"
#include "kstate/gradings.hpp"

namespace kstate {

struct AnalysisOptions {
  std::optional<int> edge;  // single marked edge; all eligible edges otherwise
  bool deep = false;        // all-pairs four-case decomposition checks
  bool mirror_checks = false;
  std::uint64_t max_states = default_max_states;
  GradingTables tables = standard_tables();
};

/// Outcome of every per-diagram check. A check that was not run stays nullopt.
struct DiagramAnalysis {
  std::string name;
  std::string pd;
  std::optional<AlternationReport> report;

  std::optional<std::string> state_count_oracle;  // decimal, arbitrary precision
  std::optional<bool> counts_match_oracle;        // every marked edge
  std::optional<bool> counts_edge_independent;
  std::optional<bool> states_valid;               // bijection + corner incidence
  std::optional<bool> f_decomposition_ok;         // per-crossing f terms in {+-1/4}, sum = delta + wr/4
  std::optional<bool> delta_integral;
  std::optional<bool> tables_match_delta;         // M - A = delta per quadrant
  std::optional<bool> good_faces_uniform;         // equal f at every corner of a good face

  std::optional<LaurentPolynomial> fox;
  std::optional<LaurentPolynomial> state_sum;
  std::optional<bool> euler_matches_fox;
  std::optional<bool> euler_edge_independent;
  std::optional<std::string> determinant;
  std::optional<bool> determinant_matches_state_count;  // alternating diagrams only

  std::optional<bool> expected_determinant_ok;  // census cross-checks
  std::optional<bool> expected_alternating_ok;

  std::optional<bool> mirror_ok;  // delta multiset negates; dalt, beta, Delta unchanged

  std::optional<std::string> error;
  int error_exit = 0;  // exit status class of `error`

  /// Every check that ran passed and there was no error.
  bool passed() const;
  /// Names of failed checks, for diagnostics.
  std::vector<std::string> failures() const;
};

DiagramAnalysis analyze_diagram(const Diagram& d, const std::string& name,
                                const AnalysisOptions& options = {});

/// Parses the record and analyzes it, recording parse errors instead of throwing.
DiagramAnalysis analyze_record(const CensusRecord& record, const AnalysisOptions& options = {});

/// Runs analyze_record over a batch on up to `jobs` threads; results keep input order.
std::vector<DiagramAnalysis> analyze_batch(const std::vector<CensusRecord>& records,
                                           const AnalysisOptions& options, unsigned jobs = 1);

}  // namespace kstate
