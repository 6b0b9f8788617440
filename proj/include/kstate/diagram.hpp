#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kstate {

// Slot layout of a crossing, counterclockwise:
//
//          c (outgoing under)
//          |
//   d -----+----- b        over strand runs d -> b (sign +1) or b -> d (sign -1)
//          |
//          a (incoming under)
//
// Quadrant q sits between slot q and slot q + 1 (mod 4).

enum class Pass { over, under };

struct Crossing {
  int id = 0;
  std::array<int, 4> slots{};  // edge labels, 1-based
  int sign = 1;

  /// Slot carrying the incoming over-strand: 3 (d) for positive, 1 (b) for negative.
  int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }
  bool is_incoming(int slot) const noexcept { return slot == 0 || slot == over_in_slot(); }
  static Pass pass_of(int slot) noexcept { return slot % 2 == 0 ? Pass::under : Pass::over; }
};

struct SlotRef {
  int crossing = 0;
  int slot = 0;
  auto operator<=>(const SlotRef&) const = default;
};

struct Edge {
  int label = 0;
  SlotRef tail;  // outgoing end
  SlotRef head;  // incoming end
  Pass tail_pass = Pass::over;
  Pass head_pass = Pass::under;

  bool is_bad() const noexcept { return tail_pass == head_pass; }
};

struct Corner {
  int crossing = 0;
  int quadrant = 0;
  auto operator<=>(const Corner&) const = default;
};

struct Face {
  int id = 0;
  std::vector<Corner> corners;     // in boundary-walk order
  std::vector<int> boundary_edges; // sorted, unique
};

using PdToken = std::array<int, 4>;

/// Oriented single-component knot diagram stored as a rotation system.
/// Immutable once built; every derived table is computed in the constructor.
class Diagram {
public:
  /// Builds and validates a diagram from PD tokens. Throws kstate::Error.
  explicit Diagram(std::vector<PdToken> tokens);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int id) const { return crossings_.at(id); }

  /// Edges indexed by label - 1.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int label) const { return edges_.at(label - 1); }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  int face_of(Corner corner) const { return corner_face_.at(corner.crossing * 4 + corner.quadrant); }

  /// The two faces flanking an edge (equal when the edge borders one face on both sides).
  std::array<int, 2> faces_beside(int label) const;

  /// Slot at the other end of the edge attached to `ref`.
  SlotRef opposite(SlotRef ref) const { return partner_.at(ref.crossing * 4 + ref.slot); }

  int writhe() const noexcept { return writhe_; }

  const std::vector<PdToken>& pd() const noexcept { return tokens_; }
  std::string pd_string() const;

  bool operator==(const Diagram& other) const { return tokens_ == other.tokens_; }

private:
  std::vector<PdToken> tokens_;
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  std::vector<SlotRef> partner_;
  std::vector<Face> faces_;
  std::vector<int> corner_face_;
  int writhe_ = 0;
};

struct CheckerboardGraph {
  int color = 0;                              // 0: faces holding quadrants 0/2 of crossing 0
  std::vector<int> vertices;                  // face ids of this color class
  std::vector<std::array<int, 2>> edges;      // per crossing, indices into `vertices`
};

Diagram parse_pd(std::string_view text);

/// Signed Gauss code: tokens `O<k><s>` / `U<k><s>` (k crossing label, s in {+,-}),
/// separated by whitespace or commas, in traversal order.
Diagram parse_gauss(std::string_view text);
std::string to_gauss(const Diagram& d);

bool is_alternating(const Diagram& d);

/// No nugatory crossing: no face meets a crossing in two opposite quadrants.
bool is_reduced(const Diagram& d);
std::vector<int> bad_edges(const Diagram& d);
std::vector<int> bad_domains(const Diagram& d);
int bad_domain_count(const Diagram& d);
int writhe(const Diagram& d);

/// Face 2-coloring: entry i is the color (0/1) of face i. Throws on an improper coloring.
std::vector<int> face_colors(const Diagram& d);
CheckerboardGraph checkerboard_graph(const Diagram& d, int color);

/// Changes over/under at the given crossings; crossing ids and edge labels are kept.
Diagram change_crossings(const Diagram& d, std::span<const int> crossing_ids);
Diagram mirror(const Diagram& d);

}  // namespace kstate
