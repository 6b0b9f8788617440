#pragma once

// Test-only helpers and oracles. The oracles work from raw PD tokens and share no
// code with the library beyond the token type.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kstate/census.hpp"
#include "kstate/diagram.hpp"

namespace kstate::testing {

// Negative (left-handed) trefoil in the usual textbook numbering.
inline const char* const trefoil_negative = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
// All-positive trefoil (census 3_1).
inline const char* const trefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
inline const char* const figure_eight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline const char* const kink_positive = "X[1,1,2,2]";
inline const char* const kink_negative = "X[1,2,2,1]";
// T(3,4): standard 8-crossing PD (census 8_19) and the closure of (s1 s2)^4.
inline const char* const torus_3_4 =
    "X[2,14,3,13] X[5,11,6,10] X[7,15,8,14] X[9,5,10,4] X[11,7,12,6] X[12,2,13,1] X[15,9,16,8] "
    "X[16,4,1,3]";
inline const char* const torus_3_4_braid =
    "X[1,7,2,6] X[12,8,13,7] X[13,3,14,2] X[8,4,9,3] X[9,15,10,14] X[4,16,5,15] X[5,11,6,10] "
    "X[16,12,1,11]";
// 9-crossing T(3,4) diagram one crossing change away from alternating.
inline const char* const torus_3_4_nine =
    "X[1,9,2,8] X[3,11,4,10] X[5,15,6,14] X[4,7,5,8] X[9,3,10,2] X[11,17,12,16] X[13,1,14,18] "
    "X[15,7,16,6] X[17,13,18,12]";

inline std::string data_path(const std::string& name) { return std::string(KSTATE_DATA_DIR) + "/" + name; }
inline std::string fixture_path(const std::string& name) {
  return std::string(KSTATE_FIXTURE_DIR) + "/" + name;
}

inline const std::vector<CensusRecord>& census() {
  static const std::vector<CensusRecord> records = load_census(data_path("census_10.csv"));
  return records;
}

inline std::vector<CensusRecord> census_up_to(int crossings) {
  std::vector<CensusRecord> out;
  for (const CensusRecord& r : census())
    if (parse_pd(r.pd).crossing_count() <= crossings) out.push_back(r);
  return out;
}

// Positions (token, slot) of every label.
inline std::map<int, std::vector<std::array<int, 2>>> label_positions(const std::vector<PdToken>& pd) {
  std::map<int, std::vector<std::array<int, 2>>> out;
  for (int c = 0; c < static_cast<int>(pd.size()); ++c)
    for (int s = 0; s < 4; ++s) out[pd[c][s]].push_back({c, s});
  return out;
}

// Smallest number of crossing changes making the diagram alternating, by trying every
// subset. An edge is good when its two ends sit on slots of different parity (one
// under, one over); changing a crossing swaps the parity of all four of its slots.
inline int brute_force_dalt(const std::vector<PdToken>& pd) {
  const int n = static_cast<int>(pd.size());
  const auto positions = label_positions(pd);
  int best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (const auto& [label, ends] : positions) {
      const int p0 = (ends[0][1] % 2) ^ ((mask >> ends[0][0]) & 1);
      const int p1 = (ends[1][1] % 2) ^ ((mask >> ends[1][0]) & 1);
      if (p0 == p1) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Faces by walking corners: from quadrant q of crossing c, leave along slot q+1 and
// continue in the quadrant that starts at the arrival slot. Returns face id per corner.
inline std::vector<int> trace_faces(const std::vector<PdToken>& pd, int& face_count) {
  const int n = static_cast<int>(pd.size());
  const auto positions = label_positions(pd);
  std::vector<int> face(4 * n, -1);
  face_count = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (face[start] >= 0) continue;
    int corner = start;
    while (face[corner] < 0) {
      face[corner] = face_count;
      const int c = corner / 4, s = (corner % 4 + 1) % 4;
      const auto& ends = positions.at(pd[c][s]);
      const auto& other = (ends[0] == std::array<int, 2>{c, s}) ? ends[1] : ends[0];
      corner = other[0] * 4 + other[1];
    }
    ++face_count;
  }
  return face;
}

// Number of Kauffman states for the marked edge, by trying all 4^n corner choices.
inline std::uint64_t brute_force_state_count(const std::vector<PdToken>& pd, int marked_label) {
  const int n = static_cast<int>(pd.size());
  int faces = 0;
  const std::vector<int> face = trace_faces(pd, faces);
  // The two faces beside the marked edge: the corners on either side of any slot carrying it.
  std::vector<bool> excluded(faces, false);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      if (pd[c][s] == marked_label) {
        excluded[face[c * 4 + s]] = true;
        excluded[face[c * 4 + (s + 3) % 4]] = true;
      }
  std::uint64_t count = 0;
  std::vector<int> choice(n, 0);
  std::vector<int> used(faces, 0);
  auto recurse = [&](auto&& self, int c) -> void {
    if (c == n) {
      ++count;
      return;
    }
    for (int q = 0; q < 4; ++q) {
      const int f = face[c * 4 + q];
      if (excluded[f] || used[f]) continue;
      used[f] = 1;
      self(self, c + 1);
      used[f] = 0;
    }
  };
  recurse(recurse, 0);
  return count;
}

// |det| of the Fox-coloring matrix minor (Alexander matrix at t = -1): one row per
// crossing, 2*over - under_in - under_out, arcs found by merging labels joined at over-passes.
inline std::int64_t coloring_determinant(const std::vector<PdToken>& pd) {
  const int n = static_cast<int>(pd.size());
  std::map<int, int> parent;
  for (const PdToken& t : pd)
    for (int l : t) parent[l] = l;
  auto find = [&](int l) {
    while (parent[l] != l) l = parent[l] = parent[parent[l]];
    return l;
  };
  for (const PdToken& t : pd) parent[find(t[1])] = find(t[3]);  // over strand is one arc
  std::map<int, int> arc_index;
  for (auto& [l, p] : parent) {
    const int root = find(l);
    if (!arc_index.count(root)) {
      const int next = static_cast<int>(arc_index.size());
      arc_index[root] = next;
    }
  }
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
  for (int c = 0; c < n; ++c) {
    m[c][arc_index[find(pd[c][1])]] += 2;
    m[c][arc_index[find(pd[c][0])]] -= 1;
    m[c][arc_index[find(pd[c][2])]] -= 1;
  }
  // Drop last row and column; fraction-free elimination.
  const int k = n - 1;
  if (k == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    int pivot = i;
    while (pivot < k && m[pivot][i] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != i) {
      std::swap(m[pivot], m[i]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int col = i + 1; col < k; ++col) m[r][col] = (m[r][col] * m[i][i] - m[r][i] * m[i][col]) / prev;
      m[r][i] = 0;
    }
    prev = m[i][i];
  }
  const __int128 det = sign * m[k - 1][k - 1];
  return static_cast<std::int64_t>(det < 0 ? -det : det);
}

}  // namespace kstate::testing
