#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latcal/poset.hpp"

namespace latcal {

// Witness for a pair without a unique least upper (or greatest lower) bound.
struct BoundFailure {
  std::string x, y;
  bool join_side = true;  // true: minimal upper bounds; false: maximal lower bounds
  std::vector<std::string> candidates;
};

struct LatticeDiagnostic {
  bool is_lattice = false;
  bool is_distributive = false;
  std::optional<BoundFailure> failure_witness;
  std::optional<std::array<std::string, 3>> distributivity_witness;
};

// A poset certified to have unique pairwise joins and meets, with cached
// join/meet tables. Immutable; queries are pure reads.
class Lattice {
 public:
  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& label(int i) const { return poset_.label(i); }
  int index_of(const std::string& l) const { return poset_.index_of(l); }

  int join(int x, int y) const { return join_[idx(x, y)]; }
  int meet(int x, int y) const { return meet_[idx(x, y)]; }
  std::string join(const std::string& x, const std::string& y) const;
  std::string meet(const std::string& x, const std::string& y) const;

  bool leq(int x, int y) const { return poset_.leq(x, y); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Elements covering exactly one element (bottom excluded).
  std::vector<int> join_irreducibles() const;

  bool is_distributive() const;
  // First (lexicographic by index) triple violating x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).
  std::optional<std::array<int, 3>> distributivity_violation() const;

  friend std::variant<Lattice, LatticeDiagnostic> certify_lattice(const Poset& p);

 private:
  Lattice() = default;
  size_t idx(int x, int y) const { return static_cast<size_t>(x) * poset_.size() + y; }

  Poset poset_;
  std::vector<int> join_, meet_;
  int bottom_ = 0, top_ = 0;
};

// Checks unique pairwise bounds. Failure is a value: the diagnostic names a
// lexicographically first witness pair with its minimal upper (or maximal
// lower) bounds.
std::variant<Lattice, LatticeDiagnostic> certify_lattice(const Poset& p);

// Convenience wrapper; throws NotLatticeError with the witness in the message.
Lattice certify_or_throw(const Poset& p);

}  // namespace latcal
