#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latcal/bitmatrix.hpp"
#include "latcal/errors.hpp"

namespace latcal {

enum class Shape { Chain, Antichain, Mixed };

std::string to_string(Shape s);

// A finite poset. Elements are opaque string labels kept in a canonical
// (lexicographic) order used only for deterministic iteration; the order
// relation comes solely from the cover pairs. Immutable after construction.
class Poset {
 public:
  // Builds the poset from a Hasse description. Redundant cover pairs are
  // silently replaced by the transitive reduction (reported via
  // had_redundant_covers). Throws CycleError, DuplicateElementError,
  // UnknownElementError, EmptyPosetError.
  static Poset from_covers(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& elements() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  // Cover pairs (lower, upper) of the transitive reduction, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<std::pair<std::string, std::string>> cover_labels() const;
  bool had_redundant_covers() const { return had_redundant_covers_; }

  bool leq(int x, int y) const { return up_.get(x, y); }
  bool leq(const std::string& x, const std::string& y) const;

  // {k : x <= k} and {k : k <= x} as packed rows (width = up().words()).
  const detail::BitMatrix& up() const { return up_; }
  const detail::BitMatrix& down() const { return down_; }

  // Standard Moebius function of the order; requires x <= y
  // (NotComparableError otherwise).
  long long mobius(int x, int y) const;
  long long mobius(const std::string& x, const std::string& y) const;

  Shape classify() const;

 private:
  friend class Lattice;
  Poset() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  detail::BitMatrix up_;
  detail::BitMatrix down_;
  bool had_redundant_covers_ = false;
};

}  // namespace latcal
