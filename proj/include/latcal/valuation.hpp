#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "latcal/builders.hpp"
#include "latcal/lattice.hpp"

namespace latcal {

inline constexpr double kDefaultTolerance = 1e-9;

// Result of checking one calculus rule over all applicable tuples.
struct RuleReport {
  std::string rule;
  long long tuples_checked = 0;
  double max_residual = 0.0;
  double tolerance = kDefaultTolerance;
  bool passed = true;
  std::vector<std::string> witness;  // tuple attaining max_residual
};

// Real-valued assignment on lattice elements. Either extended from seeds on
// the join-irreducibles (sum-rule consistent by construction on distributive
// lattices) or hand-assigned for probing.
class Valuation {
 public:
  // Unique sum-rule extension of the seed: Moebius inversion over the
  // join-irreducible subposet yields increments m(j), and
  // v(x) = sum of m(j) over irreducibles j <= x. v(bottom) = 0 exactly.
  // Throws NotDistributiveError, MissingSeedError.
  static Valuation extend_from_irreducibles(std::shared_ptr<const Lattice> l,
                                            const std::map<std::string, double>& seed);

  // Hand-assigned values; every element must be covered. No consistency is
  // enforced — the checkers are for probing such assignments.
  static Valuation from_values(std::shared_ptr<const Lattice> l,
                               const std::map<std::string, double>& values);

  const Lattice& lattice() const { return *lattice_; }
  std::shared_ptr<const Lattice> lattice_ptr() const { return lattice_; }

  double value(int i) const { return values_[i]; }
  double value(const std::string& label) const { return values_[lattice_->index_of(label)]; }
  const std::vector<double>& values() const { return values_; }

  // Moebius increments m(j) per join-irreducible label (empty when
  // hand-assigned).
  const std::map<std::string, double>& increments() const { return increments_; }

  bool monotone() const { return monotone_; }
  bool nonnegative_increments() const { return nonnegative_increments_; }

 private:
  Valuation() = default;
  void compute_flags();

  std::shared_ptr<const Lattice> lattice_;
  std::vector<double> values_;
  std::map<std::string, double> increments_;
  bool monotone_ = false;
  bool nonnegative_increments_ = false;
};

// |v(x∨y) + v(x∧y) − v(x) − v(y)| maximized over unordered pairs.
RuleReport check_sum_rule(const Valuation& v, double tol = kDefaultTolerance);

// max(0, v(x) − v(y)) maximized over comparable pairs x <= y.
RuleReport check_monotone(const Valuation& v, double tol = kDefaultTolerance);

// v((x,y)) = vx(x) · vy(y) on every product element. Throws
// LatticeMismatchError when the product was not built from these factors.
Valuation product_valuation(const Valuation& vx, const Valuation& vy,
                            const ProductLattice& product);

// Residual of v((x,y)) − vx(x)·vy(y) over all product elements.
RuleReport check_space_product_rule(const Valuation& vx, const Valuation& vy,
                                    const Valuation& vprod, const ProductLattice& product,
                                    double tol = kDefaultTolerance);

}  // namespace latcal
