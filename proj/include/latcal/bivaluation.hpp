#pragma once

#include <optional>

#include "latcal/valuation.hpp"

namespace latcal {

// Context-dependent query w(x | y) derived from a base valuation:
//   w(x | y) = 1 exactly whenever y <= x (certainty of implication,
//              including y = bottom),
//   w(x | y) = v(x ∧ y) / v(y) otherwise, defined only when v(y) > 0.
class BiValuation {
 public:
  explicit BiValuation(Valuation base) : base_(std::move(base)) {}

  const Valuation& base() const { return base_; }
  const Lattice& lattice() const { return base_.lattice(); }

  // Throws UndefinedContextError when v(y) = 0 and y is not below x.
  double at(int x, int y) const;
  double at(const std::string& x, const std::string& y) const;

  std::optional<double> try_at(int x, int y) const;

 private:
  Valuation base_;
};

// Bayes quotient w(m|t)·w(n|m∧t) / w(n|t); equals at(m, n∧t) wherever both
// are defined. Throws UndefinedContextError, DivisionByZeroError.
double bayes(const BiValuation& b, int m, int n, int t);
double bayes(const BiValuation& b, const std::string& m, const std::string& n,
             const std::string& t);

// |w(x|z) − w(x|y)·w(y|z)| over all chains x <= y <= z with defined terms.
RuleReport check_chain_rule(const BiValuation& b, double tol = kDefaultTolerance);

// |w(y∧z|x) − w(z|x∧y)·w(y|x)| over all triples with defined terms.
RuleReport check_context_product_rule(const BiValuation& b, double tol = kDefaultTolerance);

// |w(x∨y|t) + w(x∧y|t) − w(x|t) − w(y|t)| over triples with v(t) > 0.
// Requires a distributive lattice (NotDistributiveError otherwise).
RuleReport check_contextual_sum_rule(const BiValuation& b, double tol = kDefaultTolerance);

// Bayes quotient vs direct at(m, n∧t) over all triples with both defined.
RuleReport check_bayes(const BiValuation& b, double tol = kDefaultTolerance);

// w((x,y)|(tx,ty)) = w(x|tx)·w(y|ty) over product elements and factor
// contexts, using the product valuation of the factor bases.
RuleReport check_product_space_rule(const BiValuation& bx, const BiValuation& by,
                                    const ProductLattice& product,
                                    double tol = kDefaultTolerance);

// All calculus rules at once: sum, space product (on the self product),
// contextual sum, product-space bi-rule, context product, chain.
std::vector<RuleReport> consolidated_report(const Valuation& v, double tol = kDefaultTolerance);

}  // namespace latcal
