#include "latcal/valuation.hpp"

#include <cmath>

namespace latcal {

namespace {
// Slack for flag computation only; rule checks use the caller's tolerance.
constexpr double kFlagSlack = 1e-12;
}  // namespace

Valuation Valuation::extend_from_irreducibles(std::shared_ptr<const Lattice> l,
                                              const std::map<std::string, double>& seed) {
  if (!l->is_distributive())
    throw NotDistributiveError("extension requires a distributive lattice");

  const auto irr = l->join_irreducibles();
  for (int j : irr)
    if (!seed.count(l->label(j)))
      throw MissingSeedError("seed missing join-irreducible '" + l->label(j) + "'");

  // Moebius inversion of the seed over the join-irreducible subposet turns
  // seed values into additive increments m(j).
  Valuation v;
  v.lattice_ = std::move(l);
  const Lattice& lat = *v.lattice_;
  if (!irr.empty()) {
    std::vector<std::string> sub_labels;
    std::vector<std::pair<std::string, std::string>> sub_covers;
    for (int j : irr) sub_labels.push_back(lat.label(j));
    for (int a : irr)
      for (int b : irr)
        if (a != b && lat.leq(a, b)) sub_covers.emplace_back(lat.label(a), lat.label(b));
    Poset sub = Poset::from_covers(sub_labels, sub_covers);
    for (int j : irr) {
      double m = 0.0;
      for (int i : irr)
        if (lat.leq(i, j))
          m += static_cast<double>(sub.mobius(lat.label(i), lat.label(j))) *
               seed.at(lat.label(i));
      v.increments_[lat.label(j)] = m;
    }
  }

  v.values_.assign(lat.size(), 0.0);
  for (int x = 0; x < lat.size(); ++x) {
    double s = 0.0;
    for (int j : irr)
      if (lat.leq(j, x)) s += v.increments_.at(lat.label(j));
    v.values_[x] = s;  // empty sum at bottom: exact zero
  }
  v.compute_flags();
  return v;
}

Valuation Valuation::from_values(std::shared_ptr<const Lattice> l,
                                 const std::map<std::string, double>& values) {
  Valuation v;
  v.lattice_ = std::move(l);
  v.values_.assign(v.lattice_->size(), 0.0);
  for (const auto& [label, val] : values)
    v.values_[v.lattice_->index_of(label)] = val;
  for (int i = 0; i < v.lattice_->size(); ++i)
    if (!values.count(v.lattice_->label(i)))
      throw MissingSeedError("value missing for element '" + v.lattice_->label(i) + "'");
  v.compute_flags();
  return v;
}

void Valuation::compute_flags() {
  monotone_ = true;
  for (const auto& [lo, hi] : lattice_->poset().covers())
    if (values_[lo] > values_[hi] + kFlagSlack) monotone_ = false;
  nonnegative_increments_ = true;
  for (const auto& [label, m] : increments_)
    if (m < 0.0) nonnegative_increments_ = false;
}

RuleReport check_sum_rule(const Valuation& v, double tol) {
  const Lattice& l = v.lattice();
  RuleReport r;
  r.rule = "sum";
  r.tolerance = tol;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = x; y < l.size(); ++y) {
      double res = std::fabs(v.value(l.join(x, y)) + v.value(l.meet(x, y)) - v.value(x) -
                             v.value(y));
      ++r.tuples_checked;
      if (r.witness.empty() || res > r.max_residual) {
        r.max_residual = res;
        r.witness = {l.label(x), l.label(y)};
      }
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

RuleReport check_monotone(const Valuation& v, double tol) {
  const Lattice& l = v.lattice();
  RuleReport r;
  r.rule = "monotone";
  r.tolerance = tol;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y)) continue;
      double res = std::max(0.0, v.value(x) - v.value(y));
      ++r.tuples_checked;
      if (r.witness.empty() || res > r.max_residual) {
        r.max_residual = res;
        r.witness = {l.label(x), l.label(y)};
      }
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

namespace {

void require_factors(const Valuation& vx, const Valuation& vy, const ProductLattice& product) {
  if (product.left_labels != vx.lattice().poset().elements() ||
      product.right_labels != vy.lattice().poset().elements())
    throw LatticeMismatchError("product lattice was not built from these factor lattices");
}

}  // namespace

Valuation product_valuation(const Valuation& vx, const Valuation& vy,
                            const ProductLattice& product) {
  require_factors(vx, vy, product);
  std::map<std::string, double> values;
  for (int k = 0; k < product.lattice->size(); ++k) {
    auto [i, j] = product.factors[k];
    values[product.lattice->label(k)] = vx.value(i) * vy.value(j);
  }
  return Valuation::from_values(product.lattice, values);
}

RuleReport check_space_product_rule(const Valuation& vx, const Valuation& vy,
                                    const Valuation& vprod, const ProductLattice& product,
                                    double tol) {
  require_factors(vx, vy, product);
  if (vprod.lattice().poset().elements() != product.lattice->poset().elements())
    throw LatticeMismatchError("valuation does not live on the product lattice");
  RuleReport r;
  r.rule = "space-product";
  r.tolerance = tol;
  for (int k = 0; k < product.lattice->size(); ++k) {
    auto [i, j] = product.factors[k];
    double res = std::fabs(vprod.value(k) - vx.value(i) * vy.value(j));
    ++r.tuples_checked;
    if (r.witness.empty() || res > r.max_residual) {
      r.max_residual = res;
      r.witness = {product.lattice->label(k)};
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

}  // namespace latcal
