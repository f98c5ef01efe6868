#include "latcal/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace latcal {

int DivisorLattice::index_of(std::int64_t d) const {
  return lattice->index_of(std::to_string(d));
}

std::int64_t DivisorLattice::divisor_at_index(int lattice_index) const {
  return std::stoll(lattice->label(lattice_index));
}

DivisorLattice divisor_lattice(std::int64_t n, std::size_t max_elements) {
  if (n < 2 || n > 1000000)
    throw SizeLimitError("divisor lattice modulus must be in [2, 10^6], got " +
                         std::to_string(n));

  DivisorLattice d;
  d.modulus = n;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    d.divisors.push_back(i);
    if (i != n / i) d.divisors.push_back(n / i);
  }
  std::sort(d.divisors.begin(), d.divisors.end());
  if (d.divisors.size() > max_elements)
    throw SizeLimitError(std::to_string(n) + " has " + std::to_string(d.divisors.size()) +
                         " divisors, limit is " + std::to_string(max_elements));

  std::vector<std::int64_t> primes;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) primes.push_back(rest);

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::int64_t div : d.divisors) {
    labels.push_back(std::to_string(div));
    for (std::int64_t p : primes)
      if ((n / div) % p == 0) covers.emplace_back(std::to_string(div), std::to_string(div * p));
  }
  d.lattice = std::make_shared<const Lattice>(certify_or_throw(Poset::from_covers(labels, covers)));
  return d;
}

Valuation log_valuation(const DivisorLattice& d) {
  std::map<std::string, double> seed;
  for (int j : d.lattice->join_irreducibles()) {
    const std::string& label = d.lattice->label(j);
    seed[label] = std::log(static_cast<double>(std::stoll(label)));
  }
  return Valuation::extend_from_irreducibles(d.lattice, seed);
}

double divisibility_degree(const DivisorLattice& d, std::int64_t m, std::int64_t n) {
  BiValuation b(log_valuation(d));
  return b.at(std::to_string(m), std::to_string(n));
}

double divisibility_bayes(const DivisorLattice& d, std::int64_t m, std::int64_t n) {
  BiValuation b(log_valuation(d));
  return bayes(b, std::to_string(m), std::to_string(n), std::to_string(d.modulus));
}

}  // namespace latcal
