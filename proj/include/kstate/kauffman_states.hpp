#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kstate/diagram.hpp"
#include "kstate/laurent.hpp"

namespace kstate {

/// A marked edge together with the two faces it removes from the matching.
struct MarkedEdge {
  int label = 0;
  std::array<int, 2> excluded_faces{};
};

struct StateCorner {
  int face = 0;
  int quadrant = 0;
  auto operator<=>(const StateCorner&) const = default;
};

/// Kauffman state: entry c is the corner chosen at crossing c.
struct KauffmanState {
  std::vector<StateCorner> assignment;
  auto operator<=>(const KauffmanState&) const = default;
};

inline constexpr std::uint64_t default_max_states = 10'000'000;

/// Reads KSTATE_MAX_STATES, falling back to default_max_states.
std::uint64_t max_states_from_env();

/// Edges whose two sides are distinct faces. Throws ErrorKind::empty_state_set if none are.
std::vector<MarkedEdge> eligible_marked_edges(const Diagram& d);
MarkedEdge marked_edge(const Diagram& d, int label);

/// Faces not incident to the marked edge, ascending.
std::vector<int> marked_domains(const Diagram& d, const MarkedEdge& e);

using StateVisitor = std::function<void(const KauffmanState&)>;

/// Streams every Kauffman state of (d, e) to `visit`, in search order. Returns the
/// number of states. Throws ErrorKind::resource_cap once more than `max_states` are found.
std::uint64_t for_each_state(const Diagram& d, const MarkedEdge& e, const StateVisitor& visit,
                             std::uint64_t max_states = default_max_states);

/// All Kauffman states of (d, e) in lexicographic order.
std::vector<KauffmanState> enumerate_states(const Diagram& d, const MarkedEdge& e,
                                            std::uint64_t max_states = default_max_states);

/// Checks the bijection and corner-incidence conditions of a state.
bool is_valid_state(const Diagram& d, const MarkedEdge& e, const KauffmanState& x);

/// Spanning-tree count of one checkerboard graph (matrix-tree theorem).
BigInt spanning_tree_count(const CheckerboardGraph& g);

/// Spanning-tree count of the checkerboard graph; throws ErrorKind::invariant if the
/// two color classes disagree.
BigInt state_count_oracle(const Diagram& d);

}  // namespace kstate
