#include "latcal/builders.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latcal {

namespace {

std::string set_label(uint32_t mask, const std::vector<std::string>& member_labels) {
  std::string out = "{";
  bool first = true;
  for (size_t e = 0; e < member_labels.size(); ++e) {
    if (!(mask >> e & 1)) continue;
    if (!first) out += ',';
    out += member_labels[e];
    first = false;
  }
  return out + "}";
}

struct DownsetFamily {
  std::vector<uint32_t> masks;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
};

DownsetFamily enumerate_downsets(const Poset& p, bool include_empty, std::size_t max_elements) {
  const int n = p.size();
  if (n > 20) throw SizeLimitError("downset builder limited to 20 base elements, got " +
                                   std::to_string(n));

  std::vector<uint32_t> down_mask(n, 0), strict_down(n, 0);
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f)
      if (p.leq(f, e)) down_mask[e] |= uint32_t{1} << f;
    strict_down[e] = down_mask[e] & ~(uint32_t{1} << e);
  }

  DownsetFamily fam;
  const uint32_t total = uint32_t{1} << n;
  std::map<uint32_t, std::string> label_of;
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (mask == 0 && !include_empty) continue;
    bool closed = true;
    for (int e = 0; e < n && closed; ++e)
      if ((mask >> e & 1) && (down_mask[e] & ~mask)) closed = false;
    if (!closed) continue;
    fam.masks.push_back(mask);
    label_of[mask] = set_label(mask, p.elements());
  }
  if (fam.masks.size() > max_elements)
    throw SizeLimitError("downset family has " + std::to_string(fam.masks.size()) +
                         " elements, limit is " + std::to_string(max_elements));

  for (uint32_t mask : fam.masks) {
    fam.labels.push_back(label_of.at(mask));
    // Covers: add one element whose strict down-set is already present.
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1) continue;
      if ((strict_down[e] & ~mask) == 0)
        fam.covers.emplace_back(label_of.at(mask), label_of.at(mask | uint32_t{1} << e));
    }
  }
  return fam;
}

// Strips one level of tuple parentheses so n-ary products print flat.
std::string flat(const std::string& l) {
  if (l.size() >= 2 && l.front() == '(' && l.back() == ')') return l.substr(1, l.size() - 2);
  return l;
}

}  // namespace

Poset downset_poset(const Poset& p, bool include_empty, std::size_t max_elements) {
  auto fam = enumerate_downsets(p, include_empty, max_elements);
  return Poset::from_covers(fam.labels, fam.covers);
}

Lattice downset_lattice(const Poset& p, bool include_empty, std::size_t max_elements) {
  return certify_or_throw(downset_poset(p, include_empty, max_elements));
}

Lattice powerset_lattice(const std::vector<std::string>& states, std::size_t max_elements) {
  const size_t n = states.size();
  if (n > 20) throw SizeLimitError("powerset builder limited to 20 states, got " +
                                   std::to_string(n));
  if ((size_t{1} << n) > max_elements)
    throw SizeLimitError("powerset has " + std::to_string(size_t{1} << n) +
                         " elements, limit is " + std::to_string(max_elements));
  std::vector<std::string> sorted_states(states);
  std::sort(sorted_states.begin(), sorted_states.end());

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  const uint32_t total = uint32_t{1} << n;
  for (uint32_t mask = 0; mask < total; ++mask) {
    labels.push_back(set_label(mask, sorted_states));
    for (size_t e = 0; e < n; ++e)
      if (!(mask >> e & 1))
        covers.emplace_back(set_label(mask, sorted_states),
                            set_label(mask | uint32_t{1} << e, sorted_states));
  }
  return certify_or_throw(Poset::from_covers(labels, covers));
}

Lattice question_lattice(const Lattice& statements, std::size_t max_elements) {
  if (statements.size() > 16)
    throw SizeLimitError("question builder limited to 16 statements, got " +
                         std::to_string(statements.size()));
  // Nonempty downsets of a lattice all contain the bottom statement, so the
  // family keeps a bottom and certifies.
  return downset_lattice(statements.poset(), /*include_empty=*/false, max_elements);
}

Poset partition_poset(int n, std::size_t max_elements) {
  if (n < 1 || n > 8)
    throw SizeLimitError("partition builder limited to 1..8 elements, got " + std::to_string(n));

  // Enumerate restricted growth strings.
  std::vector<std::vector<int>> assignments;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      assignments.push_back(a);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  if (assignments.size() > max_elements)
    throw SizeLimitError("partition poset has " + std::to_string(assignments.size()) +
                         " elements, limit is " + std::to_string(max_elements));

  auto label_of = [n](const std::vector<int>& asg) {
    // Block ids may have gaps after a merge; only nonempty blocks print.
    std::vector<std::string> block(*std::max_element(asg.begin(), asg.end()) + 1);
    for (int i = 0; i < n; ++i) block[asg[i]] += static_cast<char>('a' + i);
    block.erase(std::remove(block.begin(), block.end(), std::string{}), block.end());
    std::sort(block.begin(), block.end());
    std::string out;
    for (size_t b = 0; b < block.size(); ++b) {
      if (b) out += '|';
      out += block[b];
    }
    return out;
  };

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& asg : assignments) {
    labels.push_back(label_of(asg));
    // A cover upward merges exactly two blocks.
    int blocks = *std::max_element(asg.begin(), asg.end()) + 1;
    for (int b1 = 0; b1 < blocks; ++b1) {
      for (int b2 = b1 + 1; b2 < blocks; ++b2) {
        std::vector<int> merged(asg);
        for (int i = 0; i < n; ++i)
          if (merged[i] == b2) merged[i] = b1;
        covers.emplace_back(label_of(asg), label_of(merged));
      }
    }
  }
  return Poset::from_covers(labels, covers);
}

ProductLattice lattice_product(const Lattice& x, const Lattice& y, std::size_t max_elements) {
  const size_t count = static_cast<size_t>(x.size()) * y.size();
  if (count > max_elements)
    throw SizeLimitError("lattice product has " + std::to_string(count) +
                         " elements, limit is " + std::to_string(max_elements));

  auto pair_label = [&](int i, int j) {
    return "(" + flat(x.label(i)) + "," + flat(y.label(j)) + ")";
  };

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::pair<int, int>> factor_of;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      std::string l = pair_label(i, j);
      labels.push_back(l);
      factor_of[l] = {i, j};
    }
  }
  for (const auto& [lo, hi] : x.poset().covers())
    for (int j = 0; j < y.size(); ++j) covers.emplace_back(pair_label(lo, j), pair_label(hi, j));
  for (const auto& [lo, hi] : y.poset().covers())
    for (int i = 0; i < x.size(); ++i) covers.emplace_back(pair_label(i, lo), pair_label(i, hi));

  ProductLattice out;
  out.lattice = std::make_shared<const Lattice>(
      certify_or_throw(Poset::from_covers(labels, covers)));
  out.factors.resize(count);
  for (int k = 0; k < out.lattice->size(); ++k)
    out.factors[k] = factor_of.at(out.lattice->label(k));
  out.left_labels = x.poset().elements();
  out.right_labels = y.poset().elements();
  return out;
}

}  // namespace latcal
