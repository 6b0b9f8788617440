#include "kstate/kauffman_states.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "bareiss.hpp"
#include "kstate/error.hpp"

namespace kstate {

std::uint64_t max_states_from_env() {
  if (const char* raw = std::getenv("KSTATE_MAX_STATES")) {
    try {
      const unsigned long long v = std::stoull(raw);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return default_max_states;
}

MarkedEdge marked_edge(const Diagram& d, int label) {
  if (label < 1 || label > d.edge_count())
    throw Error(ErrorKind::malformed, "no edge labelled " + std::to_string(label));
  return {label, d.faces_beside(label)};
}

std::vector<MarkedEdge> eligible_marked_edges(const Diagram& d) {
  std::vector<MarkedEdge> out;
  for (const Edge& e : d.edges()) {
    const MarkedEdge m = marked_edge(d, e.label);
    if (m.excluded_faces[0] != m.excluded_faces[1]) out.push_back(m);
  }
  if (out.empty()) throw Error(ErrorKind::empty_state_set, "diagram has no eligible marked edge");
  return out;
}

std::vector<int> marked_domains(const Diagram& d, const MarkedEdge& e) {
  std::vector<int> out;
  for (const Face& f : d.faces())
    if (f.id != e.excluded_faces[0] && f.id != e.excluded_faces[1]) out.push_back(f.id);
  return out;
}

namespace {

class StateSearch {
public:
  StateSearch(const Diagram& d, const MarkedEdge& e, const StateVisitor& visit, std::uint64_t cap)
      : visit_(visit), cap_(cap) {
    const int n = d.crossing_count();
    std::vector<int> domain_index(d.faces().size(), -1);
    const std::vector<int> domains = marked_domains(d, e);
    for (std::size_t i = 0; i < domains.size(); ++i) domain_index[domains[i]] = static_cast<int>(i);
    domain_free_.assign(domains.size(), true);

    options_.resize(n);
    by_domain_.resize(domains.size());
    for (int c = 0; c < n; ++c) {
      for (int q = 0; q < 4; ++q) {
        const int face = d.face_of({c, q});
        if (domain_index[face] < 0) continue;
        options_[c].push_back({face, q, domain_index[face]});
      }
      std::sort(options_[c].begin(), options_[c].end(),
                [](const Option& a, const Option& b) { return std::pair(a.face, a.quadrant) < std::pair(b.face, b.quadrant); });
      for (const Option& o : options_[c]) by_domain_[o.domain].push_back({c, o});
    }
    current_.assignment.assign(n, {-1, -1});
    crossing_free_.assign(n, true);
    remaining_ = n;
    // |Dom_e| == n for every eligible edge; anything else cannot admit a bijection.
    feasible_ = domains.size() == static_cast<std::size_t>(n);
  }

  std::uint64_t run() {
    if (feasible_) search();
    return count_;
  }

private:
  struct Option {
    int face;
    int quadrant;
    int domain;
  };
  struct DomainOption {
    int crossing;
    Option option;
  };

  void assign(int c, const Option& o) {
    current_.assignment[c] = {o.face, o.quadrant};
    crossing_free_[c] = false;
    domain_free_[o.domain] = false;
    --remaining_;
  }

  void release(int c, const Option& o) {
    current_.assignment[c] = {-1, -1};
    crossing_free_[c] = true;
    domain_free_[o.domain] = true;
    ++remaining_;
  }

  void search() {
    if (remaining_ == 0) {
      if (++count_ > cap_) {
        throw Error(ErrorKind::resource_cap,
                    "state enumeration exceeded the cap of " + std::to_string(cap_) + " states");
      }
      visit_(current_);
      return;
    }
    // Branch on whichever crossing or domain has the fewest live options; a count of
    // one is a forced move, zero is a dead end.
    int best = std::numeric_limits<int>::max();
    int best_crossing = -1, best_domain = -1;
    for (std::size_t c = 0; c < options_.size(); ++c) {
      if (!crossing_free_[c]) continue;
      int live = 0;
      for (const Option& o : options_[c]) live += domain_free_[o.domain];
      if (live < best) {
        best = live;
        best_crossing = static_cast<int>(c);
        best_domain = -1;
        if (live == 0) return;
      }
    }
    for (std::size_t dom = 0; dom < by_domain_.size(); ++dom) {
      if (!domain_free_[dom]) continue;
      int live = 0;
      for (const DomainOption& o : by_domain_[dom]) live += crossing_free_[o.crossing];
      if (live < best) {
        best = live;
        best_domain = static_cast<int>(dom);
        if (live == 0) return;
      }
    }
    if (best_domain >= 0) {
      for (const DomainOption& o : by_domain_[best_domain]) {
        if (!crossing_free_[o.crossing]) continue;
        assign(o.crossing, o.option);
        search();
        release(o.crossing, o.option);
      }
    } else {
      for (const Option& o : options_[best_crossing]) {
        if (!domain_free_[o.domain]) continue;
        assign(best_crossing, o);
        search();
        release(best_crossing, o);
      }
    }
  }

  const StateVisitor& visit_;
  std::uint64_t cap_;
  std::vector<std::vector<Option>> options_;
  std::vector<std::vector<DomainOption>> by_domain_;
  std::vector<bool> crossing_free_;
  std::vector<bool> domain_free_;
  KauffmanState current_;
  int remaining_ = 0;
  bool feasible_ = true;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t for_each_state(const Diagram& d, const MarkedEdge& e, const StateVisitor& visit,
                             std::uint64_t max_states) {
  return StateSearch(d, e, visit, max_states).run();
}

std::vector<KauffmanState> enumerate_states(const Diagram& d, const MarkedEdge& e,
                                            std::uint64_t max_states) {
  std::vector<KauffmanState> states;
  for_each_state(d, e, [&](const KauffmanState& x) { states.push_back(x); }, max_states);
  std::sort(states.begin(), states.end());
  return states;
}

bool is_valid_state(const Diagram& d, const MarkedEdge& e, const KauffmanState& x) {
  if (static_cast<int>(x.assignment.size()) != d.crossing_count()) return false;
  std::vector<int> domains = marked_domains(d, e);
  std::vector<int> used;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const StateCorner& s = x.assignment[c];
    if (s.quadrant < 0 || s.quadrant > 3) return false;
    if (d.face_of({c, s.quadrant}) != s.face) return false;
    if (!std::binary_search(domains.begin(), domains.end(), s.face)) return false;
    used.push_back(s.face);
  }
  std::sort(used.begin(), used.end());
  return used == domains;
}

BigInt spanning_tree_count(const CheckerboardGraph& g) {
  const std::size_t v = g.vertices.size();
  if (v <= 1) return 1;
  std::vector<std::vector<BigInt>> laplacian(v, std::vector<BigInt>(v, 0));
  for (const auto& [a, b] : g.edges) {
    if (a == b) continue;
    laplacian[a][a] += 1;
    laplacian[b][b] += 1;
    laplacian[a][b] -= 1;
    laplacian[b][a] -= 1;
  }
  laplacian.pop_back();
  for (auto& row : laplacian) row.pop_back();
  return detail::bareiss_determinant(std::move(laplacian));
}

BigInt state_count_oracle(const Diagram& d) {
  const BigInt first = spanning_tree_count(checkerboard_graph(d, 0));
  const BigInt second = spanning_tree_count(checkerboard_graph(d, 1));
  if (first != second) {
    throw Error(ErrorKind::invariant, "checkerboard graphs disagree on spanning-tree count");
  }
  return first;
}

}  // namespace kstate
