#include "kstate/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "kstate/error.hpp"

namespace kstate {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed: return "malformed";
    case ErrorKind::duplicate_label: return "duplicate-label";
    case ErrorKind::non_planar: return "non-planar";
    case ErrorKind::inconsistent: return "inconsistent-orientation";
    case ErrorKind::not_realizable: return "not-realizable";
    case ErrorKind::link: return "link";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::resource_cap: return "resource-cap";
    case ErrorKind::empty_state_set: return "empty-state-set";
    case ErrorKind::invariant: return "invariant";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed:
    case ErrorKind::duplicate_label:
    case ErrorKind::non_planar:
    case ErrorKind::inconsistent:
    case ErrorKind::not_realizable:
      return 2;
    case ErrorKind::link:
    case ErrorKind::unsupported:
      return 3;
    case ErrorKind::resource_cap:
      return 4;
    case ErrorKind::empty_state_set:
    case ErrorKind::invariant:
      return 1;
  }
  return 1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram::Diagram(std::vector<PdToken> tokens) : tokens_(std::move(tokens)) {
  const int n = static_cast<int>(tokens_.size());
  if (n == 0) throw Error(ErrorKind::unsupported, "diagram has no crossings");
  const int labels = 2 * n;
  auto next_label = [labels](int l) { return l % labels + 1; };

  // Label multiplicity and slot pairing.
  std::vector<std::vector<SlotRef>> where(labels + 1);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const int l = tokens_[c][s];
      if (l < 1 || l > labels) {
        throw Error(ErrorKind::duplicate_label, "label " + std::to_string(l) + " outside 1.." +
                                                    std::to_string(labels));
      }
      where[l].push_back({c, s});
    }
  }
  for (int l = 1; l <= labels; ++l) {
    if (where[l].size() != 2) {
      throw Error(ErrorKind::duplicate_label, "label " + std::to_string(l) + " appears " +
                                                  std::to_string(where[l].size()) +
                                                  " times, expected 2");
    }
  }
  partner_.resize(4 * n);
  for (int l = 1; l <= labels; ++l) {
    const auto [p, q] = std::pair{where[l][0], where[l][1]};
    partner_[p.crossing * 4 + p.slot] = q;
    partner_[q.crossing * 4 + q.slot] = p;
  }

  // Strands pass straight through a crossing (slot s to s + 2).
  UnionFind strands(labels + 1);
  for (const auto& t : tokens_) {
    strands.unite(t[0], t[2]);
    strands.unite(t[1], t[3]);
  }
  for (int l = 2; l <= labels; ++l) {
    if (strands.find(l) != strands.find(1)) {
      throw Error(ErrorKind::link, "links unsupported: diagram has more than one component");
    }
  }

  // Orientation from consecutive labels.
  crossings_.resize(n);
  for (int c = 0; c < n; ++c) {
    const auto& t = tokens_[c];
    Crossing& x = crossings_[c];
    x.id = c;
    x.slots = t;
    if (t[2] != next_label(t[0])) {
      throw Error(ErrorKind::inconsistent, "crossing " + std::to_string(c) +
                                               ": under-strand labels are not consecutive");
    }
    const bool over_d_to_b = t[1] == next_label(t[3]);
    const bool over_b_to_d = t[3] == next_label(t[1]);
    if (over_d_to_b && over_b_to_d) {
      // Only possible with two labels; the over-strand enters on the label the under-strand leaves on.
      x.sign = t[3] == t[2] ? 1 : -1;
    } else if (over_d_to_b) {
      x.sign = 1;
    } else if (over_b_to_d) {
      x.sign = -1;
    } else {
      throw Error(ErrorKind::inconsistent, "crossing " + std::to_string(c) +
                                               ": over-strand labels are not consecutive");
    }
  }

  edges_.resize(labels);
  std::vector<int> head_seen(labels + 1, 0), tail_seen(labels + 1, 0);
  for (const auto& x : crossings_) {
    for (int s = 0; s < 4; ++s) {
      const int l = x.slots[s];
      Edge& e = edges_[l - 1];
      e.label = l;
      if (x.is_incoming(s)) {
        e.head = {x.id, s};
        e.head_pass = Crossing::pass_of(s);
        ++head_seen[l];
      } else {
        e.tail = {x.id, s};
        e.tail_pass = Crossing::pass_of(s);
        ++tail_seen[l];
      }
    }
  }
  for (int l = 1; l <= labels; ++l) {
    if (head_seen[l] != 1 || tail_seen[l] != 1) {
      throw Error(ErrorKind::inconsistent,
                  "edge " + std::to_string(l) + " is not oriented consistently");
    }
  }

  // Face tracing: leave corner (c, q) along slot q + 1, arrive at slot j of the
  // next crossing; the face continues in quadrant j there.
  corner_face_.assign(4 * n, -1);
  for (int start = 0; start < 4 * n; ++start) {
    if (corner_face_[start] >= 0) continue;
    Face face;
    face.id = static_cast<int>(faces_.size());
    int at = start;
    while (corner_face_[at] < 0) {
      corner_face_[at] = face.id;
      const Corner corner{at / 4, at % 4};
      face.corners.push_back(corner);
      const SlotRef out{corner.crossing, (corner.quadrant + 1) % 4};
      face.boundary_edges.push_back(tokens_[out.crossing][out.slot]);
      const SlotRef arrive = opposite(out);
      at = arrive.crossing * 4 + arrive.slot;
    }
    if (at != start) throw Error(ErrorKind::non_planar, "face walk does not close");
    std::sort(face.boundary_edges.begin(), face.boundary_edges.end());
    face.boundary_edges.erase(std::unique(face.boundary_edges.begin(), face.boundary_edges.end()),
                              face.boundary_edges.end());
    faces_.push_back(std::move(face));
  }
  if (static_cast<int>(faces_.size()) != n + 2) {
    throw Error(ErrorKind::non_planar, "rotation system has " + std::to_string(faces_.size()) +
                                           " faces, a planar projection needs " +
                                           std::to_string(n + 2));
  }

  writhe_ = 0;
  for (const auto& x : crossings_) writhe_ += x.sign;
}

std::array<int, 2> Diagram::faces_beside(int label) const {
  const SlotRef tail = edge(label).tail;
  return {face_of({tail.crossing, (tail.slot + 3) % 4}), face_of({tail.crossing, tail.slot})};
}

std::string Diagram::pd_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (i) out << ' ';
    out << "X[" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ']';
  }
  return out.str();
}

namespace {

class PdScanner {
public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<PdToken> run() {
    skip_separators();
    if (at_end()) throw Error(ErrorKind::malformed, "malformed PD input: empty input");
    bool wrapped = false;
    if (text_.substr(pos_, 3) == "PD[") {
      wrapped = true;
      pos_ += 3;
    }
    std::vector<PdToken> tokens;
    for (;;) {
      skip_separators();
      if (at_end()) break;
      if (wrapped && text_[pos_] == ']') {
        ++pos_;
        wrapped = false;
        skip_separators();
        if (!at_end()) fail("unexpected trailing input");
        break;
      }
      tokens.push_back(token());
    }
    if (wrapped) fail("missing closing ']' of PD[...]");
    if (tokens.empty()) throw Error(ErrorKind::malformed, "malformed PD input: no crossings");
    return tokens;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::malformed,
                "malformed PD input at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (at_end() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  int integer() {
    skip_space();
    const std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected an edge label");
    if (pos_ - begin > 9) fail("edge label too large");
    return std::stoi(std::string(text_.substr(begin, pos_ - begin)));
  }

  PdToken token() {
    expect('X');
    expect('[');
    PdToken t{};
    for (int s = 0; s < 4; ++s) {
      if (s > 0) {
        skip_space();
        if (at_end() || (text_[pos_] != ',' && text_[pos_] != ';')) fail("expected ',' or ';'");
        ++pos_;
      }
      t[s] = integer();
    }
    expect(']');
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(std::string_view text) { return Diagram(PdScanner(text).run()); }

Diagram parse_gauss(std::string_view text) {
  struct Visit {
    long label;
    bool over;
    int sign;
  };
  std::vector<Visit> visits;
  std::size_t pos = 0;
  auto separator = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; };
  while (pos < text.size()) {
    if (separator(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t begin = pos;
    while (pos < text.size() && !separator(text[pos])) ++pos;
    const std::string_view tok = text.substr(begin, pos - begin);
    auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::malformed, "malformed Gauss code at offset " + std::to_string(begin) +
                                            " ('" + std::string(tok) + "'): " + what);
    };
    if (tok.size() < 3) fail("expected O<k>+ / U<k>- style token");
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(tok.front())));
    if (kind != 'O' && kind != 'U') fail("token must start with O or U");
    const char sign = tok.back();
    if (sign != '+' && sign != '-') fail("token must end with + or -");
    const std::string_view digits = tok.substr(1, tok.size() - 2);
    if (digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      fail("crossing label must be a positive integer");
    visits.push_back({std::stol(std::string(digits)), kind == 'O', sign == '+' ? 1 : -1});
  }
  if (visits.empty()) throw Error(ErrorKind::malformed, "malformed Gauss code: empty input");

  struct Seen {
    int first = -1;
    int over_visit = -1;
    int under_visit = -1;
    int sign = 0;
    int count = 0;
  };
  std::map<long, Seen> seen;
  std::vector<long> order;
  for (int k = 0; k < static_cast<int>(visits.size()); ++k) {
    const Visit& v = visits[k];
    Seen& s = seen[v.label];
    if (s.count == 0) {
      s.first = k;
      s.sign = v.sign;
      order.push_back(v.label);
    } else if (s.sign != v.sign) {
      throw Error(ErrorKind::malformed, "crossing " + std::to_string(v.label) + " has conflicting signs");
    }
    ++s.count;
    (v.over ? s.over_visit : s.under_visit) = k;
  }
  for (const auto& [label, s] : seen) {
    if (s.count != 2 || s.over_visit < 0 || s.under_visit < 0) {
      throw Error(ErrorKind::malformed, "crossing " + std::to_string(label) +
                                            " must be visited exactly once over and once under");
    }
  }

  // Edge k (1-based) enters visit k and edge k + 1 leaves it.
  const int labels = static_cast<int>(visits.size());
  auto in_edge = [](int visit) { return visit + 1; };
  auto out_edge = [labels](int visit) { return (visit + 1) % labels + 1; };
  std::vector<PdToken> tokens;
  for (long label : order) {
    const Seen& s = seen[label];
    const int a = in_edge(s.under_visit), c = out_edge(s.under_visit);
    const int over_in = in_edge(s.over_visit), over_out = out_edge(s.over_visit);
    tokens.push_back(s.sign > 0 ? PdToken{a, over_out, c, over_in} : PdToken{a, over_in, c, over_out});
  }
  try {
    return Diagram(std::move(tokens));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::non_planar) {
      throw Error(ErrorKind::not_realizable, std::string("Gauss code is not planar: ") + e.what());
    }
    throw;
  }
}

std::string to_gauss(const Diagram& d) {
  std::ostringstream out;
  for (const Edge& e : d.edges()) {
    if (e.label > 1) out << ' ';
    const Crossing& x = d.crossing(e.head.crossing);
    out << (e.head_pass == Pass::over ? 'O' : 'U') << x.id + 1 << (x.sign > 0 ? '+' : '-');
  }
  return out.str();
}

bool is_alternating(const Diagram& d) {
  return std::none_of(d.edges().begin(), d.edges().end(), [](const Edge& e) { return e.is_bad(); });
}

bool is_reduced(const Diagram& d) {
  for (const Crossing& x : d.crossings()) {
    if (d.face_of({x.id, 0}) == d.face_of({x.id, 2}) || d.face_of({x.id, 1}) == d.face_of({x.id, 3}))
      return false;
  }
  return true;
}

std::vector<int> bad_edges(const Diagram& d) {
  std::vector<int> out;
  for (const Edge& e : d.edges())
    if (e.is_bad()) out.push_back(e.label);
  return out;
}

std::vector<int> bad_domains(const Diagram& d) {
  std::vector<int> out;
  for (const Face& f : d.faces()) {
    if (std::any_of(f.boundary_edges.begin(), f.boundary_edges.end(),
                    [&](int l) { return d.edge(l).is_bad(); }))
      out.push_back(f.id);
  }
  return out;
}

int bad_domain_count(const Diagram& d) { return static_cast<int>(bad_domains(d).size()); }

int writhe(const Diagram& d) { return d.writhe(); }

std::vector<int> face_colors(const Diagram& d) {
  const int faces = static_cast<int>(d.faces().size());
  std::vector<int> color(faces, -1);
  const int root = d.face_of({0, 0});
  color[root] = 0;
  std::queue<int> pending;
  pending.push(root);
  while (!pending.empty()) {
    const int f = pending.front();
    pending.pop();
    for (int label : d.faces()[f].boundary_edges) {
      const auto [left, right] = d.faces_beside(label);
      const int other = left == f ? right : left;
      if (color[other] < 0) {
        color[other] = 1 - color[f];
        pending.push(other);
      }
    }
  }
  for (const Edge& e : d.edges()) {
    const auto [left, right] = d.faces_beside(e.label);
    if (color[left] < 0 || color[left] == color[right]) {
      throw Error(ErrorKind::invariant, "checkerboard coloring fails across edge " +
                                            std::to_string(e.label));
    }
  }
  return color;
}

CheckerboardGraph checkerboard_graph(const Diagram& d, int color) {
  const std::vector<int> colors = face_colors(d);
  CheckerboardGraph g;
  g.color = color;
  std::vector<int> index(colors.size(), -1);
  for (int f = 0; f < static_cast<int>(colors.size()); ++f) {
    if (colors[f] == color) {
      index[f] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(f);
    }
  }
  for (const Crossing& x : d.crossings()) {
    const int q = colors[d.face_of({x.id, 0})] == color ? 0 : 1;
    const int u = index[d.face_of({x.id, q})];
    const int v = index[d.face_of({x.id, q + 2})];
    if (u < 0 || v < 0) throw Error(ErrorKind::invariant, "checkerboard coloring inconsistent at crossing");
    g.edges.push_back({u, v});
  }
  return g;
}

Diagram change_crossings(const Diagram& d, std::span<const int> crossing_ids) {
  std::vector<bool> flip(d.crossing_count(), false);
  for (int id : crossing_ids) flip.at(id) = true;
  std::vector<PdToken> tokens = d.pd();
  for (const Crossing& x : d.crossings()) {
    if (!flip[x.id]) continue;
    const auto& t = x.slots;
    // The incoming over-strand becomes slot 0; cyclic order is unchanged.
    tokens[x.id] = x.sign > 0 ? PdToken{t[3], t[0], t[1], t[2]} : PdToken{t[1], t[2], t[3], t[0]};
  }
  return Diagram(std::move(tokens));
}

Diagram mirror(const Diagram& d) {
  std::vector<int> all(d.crossing_count());
  std::iota(all.begin(), all.end(), 0);
  return change_crossings(d, all);
}

}  // namespace kstate
