#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "kstate/diagram.hpp"
#include "kstate/gradings.hpp"

namespace kstate {

/// Parses a single diagram given as PD code or signed Gauss code.
Diagram parse_diagram(std::string_view text);

struct AnalyzeOptions {
  std::optional<int> edge;  // nullopt: all eligible edges
  bool json = true;
  std::uint64_t max_states = default_max_states;
  unsigned jobs = 1;
};

struct VerifyCommandOptions {
  bool deep = false;
  std::optional<int> max_crossings;
  std::optional<GradingTables> tables;
  bool json = false;
  std::uint64_t max_states = default_max_states;
  unsigned jobs = 1;
};

/// Each command reads already-loaded input text, writes its report to `out` and
/// diagnostics to `err`, and returns the process exit status.
int cmd_validate(std::string_view input, std::ostream& out, std::ostream& err);
int cmd_analyze(std::string_view input, const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_verify(std::string_view input, const VerifyCommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace kstate
