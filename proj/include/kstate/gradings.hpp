#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "kstate/diagram.hpp"
#include "kstate/kauffman_states.hpp"

namespace kstate {

/// Exact multiple of 1/4, stored as its numerator.
class Quarter {
public:
  constexpr Quarter() = default;
  static constexpr Quarter from_fourths(std::int64_t fourths) { return Quarter(fourths); }
  static constexpr Quarter whole(std::int64_t value) { return Quarter(4 * value); }

  constexpr std::int64_t fourths() const noexcept { return fourths_; }
  constexpr bool is_integer() const noexcept { return fourths_ % 4 == 0; }
  /// Integer value; only meaningful when is_integer().
  constexpr std::int64_t whole_part() const noexcept { return fourths_ / 4; }

  constexpr Quarter operator-() const { return Quarter(-fourths_); }
  constexpr Quarter& operator+=(Quarter o) { fourths_ += o.fourths_; return *this; }
  constexpr Quarter& operator-=(Quarter o) { fourths_ -= o.fourths_; return *this; }
  friend constexpr Quarter operator+(Quarter a, Quarter b) { return a += b; }
  friend constexpr Quarter operator-(Quarter a, Quarter b) { return a -= b; }
  friend constexpr Quarter operator*(std::int64_t k, Quarter q) { return Quarter(k * q.fourths_); }
  constexpr auto operator<=>(const Quarter&) const = default;

  /// Reduced rational string: "-3/4", "1/2", "-1", "0".
  std::string to_string() const;

private:
  constexpr explicit Quarter(std::int64_t fourths) : fourths_(fourths) {}
  std::int64_t fourths_ = 0;
};

inline constexpr Quarter quarter_one = Quarter::from_fourths(1);

/// N: between the two outgoing strands; S: between the two incoming; lateral otherwise.
enum class QuadrantClass { north, south, lateral };

const char* to_string(QuadrantClass q) noexcept;
QuadrantClass quadrant_class(const Crossing& c, int quadrant);

/// Local delta contribution: 0 on lateral quadrants, -sign/2 on N and S.
Quarter delta_contribution(const Crossing& c, QuadrantClass q);

/// f = delta_contribution + sign/4; throws ErrorKind::invariant unless it is +-1/4.
Quarter f_value(const Crossing& c, QuadrantClass q);

struct LocalGrading {
  Quarter maslov;
  Quarter alexander;
};

/// Local Maslov/Alexander contributions indexed by [sign > 0][class].
struct GradingTables {
  std::array<std::array<LocalGrading, 3>, 2> entries{};

  const LocalGrading& at(int sign, QuadrantClass q) const {
    return entries[sign > 0 ? 1 : 0][static_cast<int>(q)];
  }
  LocalGrading& at(int sign, QuadrantClass q) { return entries[sign > 0 ? 1 : 0][static_cast<int>(q)]; }

  /// M - A equals delta_contribution for every entry.
  bool matches_delta_table() const;
};

const GradingTables& standard_tables();

struct GradingVector {
  Quarter maslov;
  Quarter alexander;
  Quarter delta;
  auto operator<=>(const GradingVector&) const = default;
};

Quarter delta(const KauffmanState& x, const Diagram& d);
Quarter maslov(const KauffmanState& x, const Diagram& d, const GradingTables& tables = standard_tables());
Quarter alexander(const KauffmanState& x, const Diagram& d, const GradingTables& tables = standard_tables());
GradingVector gradings(const KauffmanState& x, const Diagram& d, const GradingTables& tables = standard_tables());

/// Per-crossing f-values of a state; their sum equals delta(x) + writhe/4.
std::vector<Quarter> f_terms(const KauffmanState& x, const Diagram& d);

struct SpreadSummary {
  std::uint64_t states = 0;
  std::optional<Quarter> min_delta;
  std::optional<Quarter> max_delta;
  std::map<Quarter, std::uint64_t> histogram;

  /// max - min; nullopt when there are no states.
  std::optional<Quarter> spread() const;
  void add(Quarter delta);
  void merge(const SpreadSummary& other);
};

/// Folds delta over all states of (d, e) without storing them.
SpreadSummary delta_summary(const Diagram& d, const MarkedEdge& e,
                            std::uint64_t max_states = default_max_states);

/// max delta - min delta over the states of (d, e); throws ErrorKind::empty_state_set
/// when there are none and ErrorKind::invariant if the spread is not an integer.
std::int64_t delta_spread(const Diagram& d, const MarkedEdge& e,
                     std::uint64_t max_states = default_max_states);

}  // namespace kstate
