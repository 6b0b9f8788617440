#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kstate/diagram.hpp"
#include "kstate/gradings.hpp"
#include "kstate/kauffman_states.hpp"

namespace kstate {

/// Crossings whose change makes the diagram alternating (the fixable crossings).
struct FixableSet {
  std::vector<int> crossings;  // ascending
  int size() const noexcept { return static_cast<int>(crossings.size()); }
  bool contains(int crossing) const;
};

/// The two alternating over/under assignments of the projection, as flip masks
/// relative to the diagram. Mask 0 puts odd-numbered visits over.
std::array<FixableSet, 2> alternating_assignments(const Diagram& d);

/// Smaller of the two masks; on a tie, the one containing crossing 0. Its size is dalt(D).
FixableSet min_fixable_set(const Diagram& d);
int dalt(const Diagram& d);

/// Domain categories for a pair of states, numbered from 1:
/// 1 static/fixable, 2 fixable/static, 3 fixable/fixable, 4 static/static.
struct PairCheck {
  std::array<int, 4> case_counts{};
  Quarter delta_difference;       // |delta(x) - delta(y)|
  bool same_f_in_cases_3_4 = true;
  bool half_bound_in_cases_1_2 = true;  // |f(c_x) - f(c_y)| <= 1/2 per domain
  bool case_counts_bounded = true;      // case 1 and case 2 counts each <= |F|
  bool delta_bounded = true;            // |delta(x) - delta(y)| <= |F|

  bool ok() const noexcept {
    return same_f_in_cases_3_4 && half_bound_in_cases_1_2 && case_counts_bounded && delta_bounded;
  }
};

PairCheck pair_decomposition_check(const Diagram& d, const MarkedEdge& e, const KauffmanState& x,
                                   const KauffmanState& y, const FixableSet& fixable);

struct PairTotals {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::array<std::uint64_t, 4> case_totals{};
  int max_case_1 = 0;
  int max_case_2 = 0;
  Quarter max_delta_difference;
  std::uint64_t tight_pairs = 0;  // |delta(x) - delta(y)| == |F|

  void add(const PairCheck& check, int fixable_size);
};

struct EdgeReport {
  int label = 0;
  std::uint64_t states = 0;
  std::optional<std::int64_t> spread;  // nullopt: empty state set
  std::map<Quarter, std::uint64_t> delta_histogram;
  bool spread_within_dalt = false;
  std::optional<PairTotals> pairs;  // filled by deep verification
  std::optional<std::string> error;
};

struct AlternationReport {
  std::string name;
  int crossings = 0;
  int writhe = 0;
  bool alternating = false;
  int dalt = 0;
  FixableSet fixable;
  int beta = 0;
  std::vector<EdgeReport> edges;
  bool theorem_ok = false;
  std::optional<bool> decomposition_ok;  // set when deep
  std::optional<std::int64_t> max_spread;
  std::optional<bool> spread_within_beta;  // informational only
  std::vector<std::string> errors;
};

struct VerifyOptions {
  std::optional<int> edge;  // only this marked edge; all eligible edges otherwise
  bool deep = false;
  std::uint64_t max_states = default_max_states;
};

AlternationReport verify_theorem(const Diagram& d, const VerifyOptions& options = {},
                                 std::string name = {});

}  // namespace kstate
