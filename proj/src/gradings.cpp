#include "kstate/gradings.hpp"

#include <numeric>

#include "kstate/error.hpp"

namespace kstate {

std::string Quarter::to_string() const {
  std::int64_t num = fourths_;
  std::int64_t den = 4;
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  if (num == 0) return "0";
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(QuadrantClass q) noexcept {
  switch (q) {
    case QuadrantClass::north: return "N";
    case QuadrantClass::south: return "S";
    case QuadrantClass::lateral: return "lateral";
  }
  return "?";
}

QuadrantClass quadrant_class(const Crossing& c, int quadrant) {
  if (quadrant < 0 || quadrant > 3) throw Error(ErrorKind::invariant, "quadrant out of range");
  const bool first_in = c.is_incoming(quadrant);
  const bool second_in = c.is_incoming((quadrant + 1) % 4);
  if (first_in && second_in) return QuadrantClass::south;
  if (!first_in && !second_in) return QuadrantClass::north;
  return QuadrantClass::lateral;
}

Quarter delta_contribution(const Crossing& c, QuadrantClass q) {
  if (q == QuadrantClass::lateral) return Quarter{};
  return Quarter::from_fourths(-2 * c.sign);
}

Quarter f_value(const Crossing& c, QuadrantClass q) {
  const Quarter f = delta_contribution(c, q) + Quarter::from_fourths(c.sign);
  if (f != quarter_one && f != -quarter_one) {
    throw Error(ErrorKind::invariant, "f-value " + f.to_string() + " outside {1/4, -1/4}");
  }
  return f;
}

bool GradingTables::matches_delta_table() const {
  for (int sign : {-1, 1}) {
    Crossing probe;
    probe.sign = sign;
    for (QuadrantClass q : {QuadrantClass::north, QuadrantClass::south, QuadrantClass::lateral}) {
      const LocalGrading& g = at(sign, q);
      if (g.maslov - g.alexander != delta_contribution(probe, q)) return false;
    }
  }
  return true;
}

const GradingTables& standard_tables() {
  static const GradingTables tables = [] {
    const Quarter half = Quarter::from_fourths(2);
    GradingTables t;
    // Alexander: sign/2 between the outgoing strands, -sign/2 between the incoming ones.
    // Maslov: -sign in S, zero elsewhere.
    t.at(1, QuadrantClass::north) = {Quarter{}, half};
    t.at(1, QuadrantClass::south) = {Quarter::whole(-1), -half};
    t.at(1, QuadrantClass::lateral) = {Quarter{}, Quarter{}};
    t.at(-1, QuadrantClass::north) = {Quarter{}, -half};
    t.at(-1, QuadrantClass::south) = {Quarter::whole(1), half};
    t.at(-1, QuadrantClass::lateral) = {Quarter{}, Quarter{}};
    return t;
  }();
  return tables;
}

Quarter delta(const KauffmanState& x, const Diagram& d) {
  Quarter sum;
  for (const Crossing& c : d.crossings())
    sum += delta_contribution(c, quadrant_class(c, x.assignment.at(c.id).quadrant));
  return sum;
}

Quarter maslov(const KauffmanState& x, const Diagram& d, const GradingTables& tables) {
  Quarter sum;
  for (const Crossing& c : d.crossings())
    sum += tables.at(c.sign, quadrant_class(c, x.assignment.at(c.id).quadrant)).maslov;
  return sum;
}

Quarter alexander(const KauffmanState& x, const Diagram& d, const GradingTables& tables) {
  Quarter sum;
  for (const Crossing& c : d.crossings())
    sum += tables.at(c.sign, quadrant_class(c, x.assignment.at(c.id).quadrant)).alexander;
  return sum;
}

GradingVector gradings(const KauffmanState& x, const Diagram& d, const GradingTables& tables) {
  return {maslov(x, d, tables), alexander(x, d, tables), delta(x, d)};
}

std::vector<Quarter> f_terms(const KauffmanState& x, const Diagram& d) {
  std::vector<Quarter> out;
  out.reserve(d.crossings().size());
  for (const Crossing& c : d.crossings())
    out.push_back(f_value(c, quadrant_class(c, x.assignment.at(c.id).quadrant)));
  return out;
}

std::optional<Quarter> SpreadSummary::spread() const {
  if (!min_delta || !max_delta) return std::nullopt;
  return *max_delta - *min_delta;
}

void SpreadSummary::add(Quarter value) {
  ++states;
  ++histogram[value];
  if (!min_delta || value < *min_delta) min_delta = value;
  if (!max_delta || value > *max_delta) max_delta = value;
}

void SpreadSummary::merge(const SpreadSummary& other) {
  states += other.states;
  for (const auto& [value, count] : other.histogram) histogram[value] += count;
  if (other.min_delta && (!min_delta || *other.min_delta < *min_delta)) min_delta = other.min_delta;
  if (other.max_delta && (!max_delta || *other.max_delta > *max_delta)) max_delta = other.max_delta;
}

SpreadSummary delta_summary(const Diagram& d, const MarkedEdge& e, std::uint64_t max_states) {
  SpreadSummary summary;
  for_each_state(d, e, [&](const KauffmanState& x) { summary.add(delta(x, d)); }, max_states);
  return summary;
}

std::int64_t delta_spread(const Diagram& d, const MarkedEdge& e, std::uint64_t max_states) {
  const auto spread = delta_summary(d, e, max_states).spread();
  if (!spread) {
    throw Error(ErrorKind::empty_state_set,
                "marked edge " + std::to_string(e.label) + " has no Kauffman states");
  }
  if (!spread->is_integer()) throw Error(ErrorKind::invariant, "delta spread is not an integer");
  return spread->whole_part();
}

}  // namespace kstate
