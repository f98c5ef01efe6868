#include "latcal/bivaluation.hpp"

#include <cmath>

namespace latcal {

double BiValuation::at(int x, int y) const {
  const Lattice& l = lattice();
  if (l.leq(y, x)) return 1.0;  // certainty of implication, exactly
  double vy = base_.value(y);
  if (!(vy > 0.0))
    throw UndefinedContextError("w(" + l.label(x) + " | " + l.label(y) +
                                ") is undefined: context has valuation zero");
  return base_.value(l.meet(x, y)) / vy;
}

double BiValuation::at(const std::string& x, const std::string& y) const {
  return at(lattice().index_of(x), lattice().index_of(y));
}

std::optional<double> BiValuation::try_at(int x, int y) const {
  const Lattice& l = lattice();
  if (l.leq(y, x)) return 1.0;
  double vy = base_.value(y);
  if (!(vy > 0.0)) return std::nullopt;
  return base_.value(l.meet(x, y)) / vy;
}

double bayes(const BiValuation& b, int m, int n, int t) {
  const Lattice& l = b.lattice();
  double w_m_t = b.at(m, t);
  double w_n_mt = b.at(n, l.meet(m, t));
  double w_n_t = b.at(n, t);
  if (w_n_t == 0.0)
    throw DivisionByZeroError("bayes: w(" + l.label(n) + " | " + l.label(t) + ") is zero");
  return w_m_t * w_n_mt / w_n_t;
}

double bayes(const BiValuation& b, const std::string& m, const std::string& n,
             const std::string& t) {
  const Lattice& l = b.lattice();
  return bayes(b, l.index_of(m), l.index_of(n), l.index_of(t));
}

namespace {

void observe(RuleReport& r, double res, std::initializer_list<int> tuple, const Lattice& l) {
  ++r.tuples_checked;
  if (r.witness.empty() || res > r.max_residual) {
    r.max_residual = res;
    r.witness.clear();
    for (int e : tuple) r.witness.push_back(l.label(e));
  }
}

}  // namespace

RuleReport check_chain_rule(const BiValuation& b, double tol) {
  const Lattice& l = b.lattice();
  RuleReport r;
  r.rule = "chain";
  r.tolerance = tol;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y)) continue;
      for (int z = 0; z < l.size(); ++z) {
        if (!l.leq(y, z)) continue;
        auto w_xz = b.try_at(x, z);
        auto w_xy = b.try_at(x, y);
        auto w_yz = b.try_at(y, z);
        if (!w_xz || !w_xy || !w_yz) continue;
        observe(r, std::fabs(*w_xz - *w_xy * *w_yz), {x, y, z}, l);
      }
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

RuleReport check_context_product_rule(const BiValuation& b, double tol) {
  const Lattice& l = b.lattice();
  RuleReport r;
  r.rule = "context-product";
  r.tolerance = tol;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      for (int z = 0; z < l.size(); ++z) {
        auto lhs = b.try_at(l.meet(y, z), x);
        auto w_z = b.try_at(z, l.meet(x, y));
        auto w_y = b.try_at(y, x);
        if (!lhs || !w_z || !w_y) continue;
        observe(r, std::fabs(*lhs - *w_z * *w_y), {x, y, z}, l);
      }
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

RuleReport check_contextual_sum_rule(const BiValuation& b, double tol) {
  const Lattice& l = b.lattice();
  if (!l.is_distributive())
    throw NotDistributiveError("contextual sum rule requires a distributive lattice");
  RuleReport r;
  r.rule = "contextual-sum";
  r.tolerance = tol;
  for (int t = 0; t < l.size(); ++t) {
    if (!(b.base().value(t) > 0.0)) continue;
    for (int x = 0; x < l.size(); ++x) {
      for (int y = x; y < l.size(); ++y) {
        double res = std::fabs(b.at(l.join(x, y), t) + b.at(l.meet(x, y), t) - b.at(x, t) -
                               b.at(y, t));
        observe(r, res, {x, y, t}, l);
      }
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

RuleReport check_bayes(const BiValuation& b, double tol) {
  const Lattice& l = b.lattice();
  RuleReport r;
  r.rule = "bayes";
  r.tolerance = tol;
  for (int m = 0; m < l.size(); ++m) {
    for (int n = 0; n < l.size(); ++n) {
      for (int t = 0; t < l.size(); ++t) {
        auto direct = b.try_at(m, l.meet(n, t));
        auto w_m_t = b.try_at(m, t);
        auto w_n_mt = b.try_at(n, l.meet(m, t));
        auto w_n_t = b.try_at(n, t);
        if (!direct || !w_m_t || !w_n_mt || !w_n_t || *w_n_t == 0.0) continue;
        observe(r, std::fabs(*w_m_t * *w_n_mt / *w_n_t - *direct), {m, n, t}, l);
      }
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

RuleReport check_product_space_rule(const BiValuation& bx, const BiValuation& by,
                                    const ProductLattice& product, double tol) {
  Valuation vprod = product_valuation(bx.base(), by.base(), product);
  BiValuation bprod(vprod);
  const Lattice& l = *product.lattice;
  RuleReport r;
  r.rule = "product-space";
  r.tolerance = tol;
  for (int e = 0; e < l.size(); ++e) {
    auto [x, y] = product.factors[e];
    for (int c = 0; c < l.size(); ++c) {
      auto [tx, ty] = product.factors[c];
      auto lhs = bprod.try_at(e, c);
      auto wx = bx.try_at(x, tx);
      auto wy = by.try_at(y, ty);
      if (!lhs || !wx || !wy) continue;
      observe(r, std::fabs(*lhs - *wx * *wy), {e, c}, l);
    }
  }
  r.passed = r.max_residual <= tol;
  return r;
}

std::vector<RuleReport> consolidated_report(const Valuation& v, double tol) {
  std::vector<RuleReport> out;
  out.push_back(check_sum_rule(v, tol));
  BiValuation b(v);
  out.push_back(check_chain_rule(b, tol));
  out.push_back(check_context_product_rule(b, tol));
  if (v.lattice().is_distributive()) out.push_back(check_contextual_sum_rule(b, tol));
  out.push_back(check_bayes(b, tol));

  // Space product rules on the self product.
  auto prod = lattice_product(v.lattice(), v.lattice());
  Valuation vprod = product_valuation(v, v, prod);
  out.push_back(check_space_product_rule(v, v, vprod, prod, tol));
  out.push_back(check_product_space_rule(b, b, prod, tol));
  return out;
}

}  // namespace latcal
