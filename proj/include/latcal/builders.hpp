#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latcal/lattice.hpp"

namespace latcal {

inline constexpr std::size_t kDefaultMaxElements = 4096;

// All downsets of p (optionally without the empty downset), ordered by set
// inclusion. Labels are "{a,b}" with members in canonical order. Base poset
// limited to 20 elements.
Poset downset_poset(const Poset& p, bool include_empty,
                    std::size_t max_elements = kDefaultMaxElements);

// Same family, certified. With include_empty=false a base poset with several
// minimal elements loses its bottom and this throws NotLatticeError; use
// downset_poset for the bare family.
Lattice downset_lattice(const Poset& p, bool include_empty,
                        std::size_t max_elements = kDefaultMaxElements);

// Boolean lattice of all subsets of the given states; bottom = {} (the
// absurdity), top = all states (the truism). At most 20 states.
Lattice powerset_lattice(const std::vector<std::string>& states,
                         std::size_t max_elements = kDefaultMaxElements);

// Lattice of all nonempty downsets of the statement lattice, ordered by
// inclusion. Statement lattice limited to 16 elements.
Lattice question_lattice(const Lattice& statements,
                         std::size_t max_elements = kDefaultMaxElements);

// All set partitions of {a, b, ...} (n letters, n <= 8) ordered by
// refinement; the one-block partition is the top. Labels like "a|bc".
Poset partition_poset(int n, std::size_t max_elements = kDefaultMaxElements);

struct ProductLattice {
  std::shared_ptr<const Lattice> lattice;
  // Per product element: indices into the left / right factor.
  std::vector<std::pair<int, int>> factors;
  std::vector<std::string> left_labels, right_labels;
};

// Componentwise-ordered product; labels flatten to tuples, so
// (X x Y) x Z prints elements as "(x,y,z)".
ProductLattice lattice_product(const Lattice& x, const Lattice& y,
                               std::size_t max_elements = kDefaultMaxElements);

}  // namespace latcal
