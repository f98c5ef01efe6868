#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "latcal/bivaluation.hpp"
#include "latcal/valuation.hpp"

namespace latcal {

// Lattice of all divisors of a modulus N, ordered by division: join = lcm,
// meet = gcd, bottom = 1, top = N. Join-irreducibles are exactly the prime
// powers dividing N.
struct DivisorLattice {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> divisors;  // sorted ascending
  std::shared_ptr<const Lattice> lattice;

  int index_of(std::int64_t d) const;  // lattice element index; UnknownElementError
  std::int64_t divisor_at_index(int lattice_index) const;
};

// 2 <= n <= 10^6, divisor count within max_elements (SizeLimitError).
DivisorLattice divisor_lattice(std::int64_t n,
                               std::size_t max_elements = kDefaultMaxElements);

// Extension of the seed v(p^k) = log p^k on the prime-power irreducibles;
// gives v(m) = log m for every divisor m.
Valuation log_valuation(const DivisorLattice& d);

// Degree to which n divides m under the log valuation:
// log gcd(m,n) / log n in general, log m / log n when m | n, 1 when n = 1.
double divisibility_degree(const DivisorLattice& d, std::int64_t m, std::int64_t n);

// Same degree computed through the Bayes quotient with context t = modulus.
double divisibility_bayes(const DivisorLattice& d, std::int64_t m, std::int64_t n);

}  // namespace latcal
