#include "latcal/lattice.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace latcal {

namespace {

struct RowKey {
  const uint64_t* p;
  int words;
};

struct RowHash {
  size_t operator()(const RowKey& k) const {
    size_t h = 1469598103934665603ull;
    for (int w = 0; w < k.words; ++w) {
      h ^= k.p[w];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct RowEq {
  bool operator()(const RowKey& a, const RowKey& b) const {
    return detail::rows_equal(a.p, b.p, a.words);
  }
};

using RowMap = std::unordered_map<RowKey, int, RowHash, RowEq>;

// Elements of S (packed row) with no strictly smaller element inside S.
std::vector<int> extremal(const uint64_t* S, const detail::BitMatrix& strict_side, int n,
                          int words) {
  std::vector<int> out;
  std::vector<uint64_t> tmp(words);
  for (int k = 0; k < n; ++k) {
    if (!((S[k >> 6] >> (k & 63)) & 1)) continue;
    const uint64_t* side = strict_side.row(k);
    bool has_inner = false;
    for (int w = 0; w < words && !has_inner; ++w) {
      uint64_t m = S[w] & side[w];
      if (k >> 6 == w) m &= ~(uint64_t{1} << (k & 63));
      has_inner = m != 0;
    }
    if (!has_inner) out.push_back(k);
  }
  return out;
}

}  // namespace

std::variant<Lattice, LatticeDiagnostic> certify_lattice(const Poset& p) {
  const int n = p.size();
  const int words = p.up().words();

  RowMap by_up, by_down;
  for (int i = 0; i < n; ++i) {
    by_up.emplace(RowKey{p.up().row(i), words}, i);
    by_down.emplace(RowKey{p.down().row(i), words}, i);
  }

  Lattice l;
  l.poset_ = p;
  l.join_.assign(static_cast<size_t>(n) * n, -1);
  l.meet_.assign(static_cast<size_t>(n) * n, -1);

  std::vector<uint64_t> buf(words);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      // Join: the least upper bound exists iff some element's up-set equals
      // the intersection of the two up-sets.
      for (int w = 0; w < words; ++w) buf[w] = p.up().row(i)[w] & p.up().row(j)[w];
      auto it = by_up.find(RowKey{buf.data(), words});
      if (it == by_up.end()) {
        LatticeDiagnostic d;
        d.failure_witness = BoundFailure{p.label(i), p.label(j), true, {}};
        for (int k : extremal(buf.data(), p.down(), n, words))
          d.failure_witness->candidates.push_back(p.label(k));
        return d;
      }
      l.join_[l.idx(i, j)] = l.join_[l.idx(j, i)] = it->second;

      for (int w = 0; w < words; ++w) buf[w] = p.down().row(i)[w] & p.down().row(j)[w];
      auto im = by_down.find(RowKey{buf.data(), words});
      if (im == by_down.end()) {
        LatticeDiagnostic d;
        d.failure_witness = BoundFailure{p.label(i), p.label(j), false, {}};
        for (int k : extremal(buf.data(), p.up(), n, words))
          d.failure_witness->candidates.push_back(p.label(k));
        return d;
      }
      l.meet_[l.idx(i, j)] = l.meet_[l.idx(j, i)] = im->second;
    }
  }

  l.bottom_ = 0;
  l.top_ = 0;
  for (int i = 1; i < n; ++i) {
    l.bottom_ = l.meet(l.bottom_, i);
    l.top_ = l.join(l.top_, i);
  }
  return l;
}

Lattice certify_or_throw(const Poset& p) {
  auto r = certify_lattice(p);
  if (auto* l = std::get_if<Lattice>(&r)) return std::move(*l);
  const auto& d = std::get<LatticeDiagnostic>(r);
  std::string msg = "not a lattice";
  if (d.failure_witness) {
    msg += ": pair (" + d.failure_witness->x + ", " + d.failure_witness->y + ") has no unique " +
           (d.failure_witness->join_side ? "least upper bound" : "greatest lower bound");
  }
  throw NotLatticeError(msg);
}

std::string Lattice::join(const std::string& x, const std::string& y) const {
  return label(join(index_of(x), index_of(y)));
}

std::string Lattice::meet(const std::string& x, const std::string& y) const {
  return label(meet(index_of(x), index_of(y)));
}

std::vector<int> Lattice::join_irreducibles() const {
  std::vector<int> lower_covers(size(), 0);
  for (const auto& [lo, hi] : poset_.covers()) ++lower_covers[hi];
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (i != bottom_ && lower_covers[i] == 1) out.push_back(i);
  return out;
}

std::optional<std::array<int, 3>> Lattice::distributivity_violation() const {
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
          return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool Lattice::is_distributive() const { return !distributivity_violation().has_value(); }

}  // namespace latcal
