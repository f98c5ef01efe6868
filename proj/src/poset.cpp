#include "latcal/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace latcal {

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Chain: return "chain";
    case Shape::Antichain: return "antichain";
    case Shape::Mixed: return "mixed";
  }
  return "?";
}

namespace {

// Returns a cycle as a vertex sequence, or empty if the digraph is acyclic.
std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, ei] = stack.back();
      if (ei < adj[v].size()) {
        int w = adj[v][ei++];
        if (state[w] == 1) {
          std::vector<int> cycle{w};
          for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
          cycle.push_back(w);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> indeg(n, 0), order;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) ++indeg[w];
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return order;
}

}  // namespace

Poset Poset::from_covers(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  if (elements.empty()) throw EmptyPosetError("poset must have at least one element");

  std::unordered_map<std::string, int> raw_index;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!raw_index.emplace(elements[i], static_cast<int>(i)).second)
      throw DuplicateElementError("duplicate element '" + elements[i] + "'");
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> raw_covers;
  for (const auto& [lo, hi] : covers) {
    auto il = raw_index.find(lo);
    auto ih = raw_index.find(hi);
    if (il == raw_index.end()) throw UnknownElementError("unknown element '" + lo + "' in cover");
    if (ih == raw_index.end()) throw UnknownElementError("unknown element '" + hi + "' in cover");
    if (il->second == ih->second)
      throw CycleError("cycle: " + lo + " < " + hi);
    if (raw_covers.emplace(il->second, ih->second).second)
      adj[il->second].push_back(ih->second);
  }

  if (auto cyc = find_cycle(n, adj); !cyc.empty()) {
    std::ostringstream os;
    os << "cycle:";
    for (int v : cyc) os << ' ' << elements[v];
    throw CycleError(os.str());
  }

  Poset p;
  p.labels_ = elements;
  std::sort(p.labels_.begin(), p.labels_.end());
  for (int i = 0; i < n; ++i) p.index_[p.labels_[i]] = i;

  // Remap to canonical indices.
  std::vector<int> remap(n);
  for (int i = 0; i < n; ++i) remap[i] = p.index_[elements[i]];
  std::vector<std::vector<int>> cadj(n);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) cadj[remap[v]].push_back(remap[w]);

  // Reflexive-transitive closure, uppers first.
  p.up_ = detail::BitMatrix(n);
  p.down_ = detail::BitMatrix(n);
  auto order = topo_order(n, cadj);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    p.up_.set(v, v);
    for (int w : cadj[v]) p.up_.or_row_into(w, v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.up_.get(i, j)) p.down_.set(j, i);

  // Canonical covers: the transitive reduction of the closure.
  const int words = p.up_.words();
  std::vector<uint64_t> between(words);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.up_.get(i, j)) continue;
      bool has_mid = false;
      const uint64_t* ui = p.up_.row(i);
      const uint64_t* dj = p.down_.row(j);
      for (int w = 0; w < words && !has_mid; ++w) {
        uint64_t m = ui[w] & dj[w];
        // Mask out the endpoints.
        if (i >> 6 == w) m &= ~(uint64_t{1} << (i & 63));
        if (j >> 6 == w) m &= ~(uint64_t{1} << (j & 63));
        has_mid = m != 0;
      }
      if (!has_mid) p.covers_.emplace_back(i, j);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  std::set<std::pair<int, int>> canon_input;
  for (const auto& [a, b] : raw_covers) canon_input.emplace(remap[a], remap[b]);
  p.had_redundant_covers_ =
      canon_input != std::set<std::pair<int, int>>(p.covers_.begin(), p.covers_.end());
  return p;
}

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownElementError("unknown element '" + label + "'");
  return it->second;
}

bool Poset::leq(const std::string& x, const std::string& y) const {
  return leq(index_of(x), index_of(y));
}

std::vector<std::pair<std::string, std::string>> Poset::cover_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(covers_.size());
  for (const auto& [a, b] : covers_) out.emplace_back(labels_[a], labels_[b]);
  return out;
}

long long Poset::mobius(int x, int y) const {
  if (!leq(x, y))
    throw NotComparableError("mobius: '" + labels_[x] + "' is not below '" + labels_[y] + "'");
  // Interval [x, y], processed by increasing number of interval elements below.
  std::vector<int> interval;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) interval.push_back(z);
  std::vector<int> rank(interval.size());
  for (size_t a = 0; a < interval.size(); ++a)
    for (int w : interval)
      if (leq(w, interval[a])) ++rank[a];
  std::vector<size_t> perm(interval.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return rank[a] < rank[b]; });

  std::unordered_map<int, long long> mu;
  for (size_t a : perm) {
    int z = interval[a];
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (int w : interval)
      if (w != z && leq(w, z)) s += mu[w];
    mu[z] = -s;
  }
  return mu[y];
}

long long Poset::mobius(const std::string& x, const std::string& y) const {
  return mobius(index_of(x), index_of(y));
}

Shape Poset::classify() const {
  bool all_comparable = true, none_comparable = true;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (leq(i, j) || leq(j, i))
        none_comparable = false;
      else
        all_comparable = false;
    }
  }
  if (all_comparable) return Shape::Chain;
  if (none_comparable) return Shape::Antichain;
  return Shape::Mixed;
}

}  // namespace latcal
