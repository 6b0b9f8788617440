#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kstate {

struct CensusRecord {
  std::string name;
  std::string pd;
  std::optional<std::int64_t> determinant;
  std::optional<bool> alternating;
};

/// CSV with a `name,pd` header (optional `determinant` and `alternating` columns;
/// PD tokens use ';' inside brackets) or a JSON array of objects with the same keys.
/// Throws kstate::Error(ErrorKind::malformed) with a line reference on bad input.
std::vector<CensusRecord> parse_census(std::string_view text);
std::vector<CensusRecord> load_census(const std::string& path);

/// True if the text looks like a census rather than a single diagram.
bool looks_like_census(std::string_view text);

std::string read_input(const std::string& path);  // "-" reads stdin

}  // namespace kstate
