#pragma once

// Test-only helpers: random poset generation and independent brute-force
// oracles. Nothing here may call into the code paths it is used to check.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latcal/lattice.hpp"
#include "latcal/poset.hpp"

namespace latcal::testsupport {

// Random poset on up to max_n elements: random DAG edges over a fixed node
// order, covers derived by transitive reduction inside from_covers.
inline Poset random_poset(std::mt19937& rng, int max_n = 7, double edge_p = 0.35) {
  std::uniform_int_distribution<int> nd(1, max_n);
  int n = nd(rng);
  std::bernoulli_distribution ed(edge_p);
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ed(rng)) covers.emplace_back(elements[i], elements[j]);
  return Poset::from_covers(elements, covers);
}

// Least upper bound by exhaustive enumeration, or nullopt.
inline std::optional<int> brute_join(const Poset& p, int x, int y) {
  std::vector<int> ub;
  for (int k = 0; k < p.size(); ++k)
    if (p.leq(x, k) && p.leq(y, k)) ub.push_back(k);
  for (int k : ub) {
    bool least = true;
    for (int l : ub)
      if (!p.leq(k, l)) least = false;
    if (least) return k;
  }
  return std::nullopt;
}

inline std::optional<int> brute_meet(const Poset& p, int x, int y) {
  std::vector<int> lb;
  for (int k = 0; k < p.size(); ++k)
    if (p.leq(k, x) && p.leq(k, y)) lb.push_back(k);
  for (int k : lb) {
    bool greatest = true;
    for (int l : lb)
      if (!p.leq(l, k)) greatest = false;
    if (greatest) return k;
  }
  return std::nullopt;
}

inline bool brute_is_lattice(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!brute_join(p, x, y) || !brute_meet(p, x, y)) return false;
  return true;
}

// Number of antichains (pairwise incomparable subsets, empty set included).
inline size_t count_antichains(const Poset& p) {
  size_t count = 0;
  const uint32_t total = uint32_t{1} << p.size();
  for (uint32_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (int i = 0; i < p.size() && ok; ++i)
      for (int j = i + 1; j < p.size() && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && (p.leq(i, j) || p.leq(j, i))) ok = false;
    if (ok) ++count;
  }
  return count;
}

// Order isomorphism by backtracking with down/up-count invariants.
inline bool order_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  auto profile = [](const Poset& p, int i) {
    int below = 0, above = 0;
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(j, i)) ++below;
      if (p.leq(i, j)) ++above;
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<int, int>> pa(n), pb(n);
  for (int i = 0; i < n; ++i) pa[i] = profile(a, i), pb[i] = profile(b, i);

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || pa[i] != pb[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        if (a.leq(i, k) != b.leq(j, map[k]) || a.leq(k, i) != b.leq(map[k], j)) ok = false;
      if (!ok) continue;
      map[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
      map[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

inline std::vector<std::string> bridge_elements() { return {"L", "R", "S"}; }
inline std::vector<std::pair<std::string, std::string>> bridge_covers() {
  return {{"L", "S"}, {"R", "S"}};
}

// The six-element poset that fails lattice certification: two bottoms a, b
// under both middles c, d, under two tops e, f.
inline Poset hexagon_non_lattice() {
  return Poset::from_covers({"a", "b", "c", "d", "e", "f"},
                            {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                             {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}});
}

}  // namespace latcal::testsupport
