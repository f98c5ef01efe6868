// latcal: construct finite posets and lattices, assign valuations, and
// verify the calculus rules (sum, chain, product, Bayes) from the command
// line. Exit codes: 0 success, 1 structural finding, 2 parse error,
// 3 size limit, 4 precondition failure, 5 rule failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcal/bivaluation.hpp"
#include "latcal/builders.hpp"
#include "latcal/document.hpp"
#include "latcal/number_theory.hpp"
#include "latcal/valuation.hpp"

using json = nlohmann::json;
using namespace latcal;

namespace {

constexpr const char* kVersion = "1";

struct Options {
  double tolerance = kDefaultTolerance;
  std::size_t max_elements = kDefaultMaxElements;
  std::string dot_path;
};

json lattice_json(const Lattice& l) {
  return json{{"elementCount", l.size()},
              {"bottom", l.label(l.bottom())},
              {"top", l.label(l.top())},
              {"isLattice", true},
              {"isDistributive", l.is_distributive()},
              {"classification", to_string(l.poset().classify())}};
}

json report_json(const RuleReport& r) {
  return json{{"rule", r.rule},
              {"tuplesChecked", r.tuples_checked},
              {"maxResidual", r.max_residual},
              {"tolerance", r.tolerance},
              {"passed", r.passed},
              {"witness", r.witness}};
}

json valuation_json(const Valuation& v) {
  json values = json::object();
  for (int i = 0; i < v.lattice().size(); ++i) values[v.lattice().label(i)] = v.value(i);
  json increments = json::object();
  for (const auto& [k, m] : v.increments()) increments[k] = m;
  return json{{"values", values},
              {"increments", increments},
              {"flags",
               {{"monotone", v.monotone()},
                {"nonnegativeIncrements", v.nonnegative_increments()}}}};
}

void emit(json doc) {
  doc["version"] = kVersion;
  std::cout << doc.dump(2) << '\n';
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  return poset_from_document(parse_poset_document(in));
}

void maybe_dot(const Options& opt, const Poset& p) {
  if (opt.dot_path.empty()) return;
  std::ofstream out(opt.dot_path);
  out << to_dot(p);
}

int run_check(const Options& opt, const std::string& input) {
  Poset p = load_poset(input);
  maybe_dot(opt, p);
  json doc{{"command", "check"}, {"input", input}};
  auto r = certify_lattice(p);
  if (auto* l = std::get_if<Lattice>(&r)) {
    doc["lattice"] = lattice_json(*l);
    if (!l->is_distributive()) {
      auto w = l->distributivity_violation();
      doc["lattice"]["distributivityWitness"] = {l->label((*w)[0]), l->label((*w)[1]),
                                                 l->label((*w)[2])};
    }
    emit(doc);
    return 0;
  }
  const auto& d = std::get<LatticeDiagnostic>(r);
  doc["lattice"] = {{"elementCount", p.size()},
                    {"isLattice", false},
                    {"classification", to_string(p.classify())}};
  doc["diagnostic"] = {
      {"message", std::string("the pair does not have a unique ") +
                      (d.failure_witness->join_side ? "least upper bound"
                                                    : "greatest lower bound")},
      {"witnessPair", {d.failure_witness->x, d.failure_witness->y}},
      {"candidates", d.failure_witness->candidates}};
  emit(doc);
  return 1;
}

int emit_built(const Options& opt, const std::string& command, const std::string& input,
               const Lattice& l) {
  maybe_dot(opt, l.poset());
  json doc{{"command", command}, {"input", input}, {"lattice", lattice_json(l)}};
  emit(doc);
  return 0;
}

std::map<std::string, double> load_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("seed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "seed JSON must be a flat object");
  std::map<std::string, double> seed;
  for (auto& [k, v] : j.items()) {
    if (!v.is_number()) throw ParseError(0, "seed value for '" + k + "' is not a number");
    seed[k] = v.get<double>();
  }
  return seed;
}

int run_valuate(const Options& opt, const std::string& input, const std::string& seed_path,
                const std::string& checks_csv) {
  Poset p = load_poset(input);
  auto lattice = std::make_shared<const Lattice>(certify_or_throw(p));
  maybe_dot(opt, lattice->poset());
  auto seed = load_seed(seed_path);

  // A seed covering every element is a hand-assigned valuation; otherwise it
  // must cover the join-irreducibles and is extended.
  bool hand = seed.size() == static_cast<size_t>(lattice->size());
  if (hand)
    for (const auto& [k, v] : seed)
      if (!lattice->poset().contains(k)) hand = false;
  Valuation v = hand ? Valuation::from_values(lattice, seed)
                     : Valuation::extend_from_irreducibles(lattice, seed);

  std::vector<RuleReport> reports;
  std::stringstream cs(checks_csv);
  std::string name;
  BiValuation b(v);
  while (std::getline(cs, name, ',')) {
    if (name.empty()) continue;
    if (name == "sum") {
      reports.push_back(check_sum_rule(v, opt.tolerance));
    } else if (name == "monotone") {
      reports.push_back(check_monotone(v, opt.tolerance));
    } else if (name == "chain") {
      reports.push_back(check_chain_rule(b, opt.tolerance));
    } else if (name == "context-product") {
      reports.push_back(check_context_product_rule(b, opt.tolerance));
    } else if (name == "contextual-sum") {
      reports.push_back(check_contextual_sum_rule(b, opt.tolerance));
    } else if (name == "bayes") {
      reports.push_back(check_bayes(b, opt.tolerance));
    } else if (name == "product-spaces") {
      auto prod = lattice_product(*lattice, *lattice, opt.max_elements);
      Valuation vprod = product_valuation(v, v, prod);
      reports.push_back(check_space_product_rule(v, v, vprod, prod, opt.tolerance));
      reports.push_back(check_product_space_rule(b, b, prod, opt.tolerance));
    } else if (name == "all") {
      for (auto& r : consolidated_report(v, opt.tolerance)) reports.push_back(std::move(r));
    } else {
      throw CLI::ValidationError("--check", "unknown check '" + name + "'");
    }
  }

  json doc{{"command", "valuate"},
           {"input", input},
           {"lattice", lattice_json(*lattice)},
           {"valuation", valuation_json(v)}};
  doc["reports"] = json::array();
  bool all_passed = true;
  for (const auto& r : reports) {
    doc["reports"].push_back(report_json(r));
    all_passed = all_passed && r.passed;
  }
  emit(doc);
  return all_passed ? 0 : 5;
}

int run_demo(const Options& opt, const std::string& name) {
  if (name == "bridge") {
    Poset bridge = Poset::from_covers({"L", "R", "S"}, {{"L", "S"}, {"R", "S"}});
    Poset states = downset_poset(bridge, /*include_empty=*/false, opt.max_elements);
    Lattice statements = powerset_lattice(states.elements(), opt.max_elements);
    Lattice questions = question_lattice(statements, opt.max_elements);
    std::cerr << "bridge: " << states.size() << " states, " << statements.size()
              << " statements, " << questions.size() << " questions\n";
    json doc{{"command", "demo"},
             {"input", "bridge"},
             {"states", states.elements()},
             {"statementCount", statements.size()},
             {"questionCount", questions.size()},
             {"lattice", lattice_json(questions)}};
    emit(doc);
    return 0;
  }
  if (name == "divisor") {
    DivisorLattice d = divisor_lattice(360, opt.max_elements);
    Valuation v = log_valuation(d);
    double d24 = divisibility_degree(d, 2, 4);
    std::cerr.precision(6);
    std::cerr << "divisor 360: v(12) = " << v.value("12") << " (log 12 = " << std::log(12.0)
              << "), d(2|4) = " << d24 << '\n';
    json doc{{"command", "demo"},
             {"input", "divisor"},
             {"lattice", lattice_json(*d.lattice)},
             {"valuation", valuation_json(v)},
             {"degrees", {{"d(2|4)", d24}, {"d(12|360)", divisibility_degree(d, 12, 360)}}},
             {"reports", json::array({report_json(check_sum_rule(v, opt.tolerance))})}};
    emit(doc);
    return 0;
  }
  if (name == "partition") {
    Poset p = partition_poset(3, opt.max_elements);
    Lattice l = certify_or_throw(p);
    std::cerr << "partition 3: " << l.size() << " partitions, distributive = "
              << (l.is_distributive() ? "yes" : "no") << '\n';
    return emit_built(opt, "demo", "partition", l);
  }
  throw UnknownDemoError("unknown demo '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valuation calculus on finite lattices"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("LATCAL_TOLERANCE")) opt.tolerance = std::atof(env);
  app.add_option("--tolerance", opt.tolerance, "absolute tolerance for rule checks");
  app.add_option("--max-elements", opt.max_elements, "lattice size cap for builders");

  auto* check = app.add_subcommand("check", "certify a poset document as a lattice");
  std::string check_input;
  check->add_option("input", check_input, "poset document")->required();
  check->add_option("--dot", opt.dot_path, "write a Hasse diagram in DOT format");

  auto* build = app.add_subcommand("build", "construct a derived lattice");
  build->require_subcommand(1);
  std::string build_file, build_file2;
  int build_n = 0;
  bool include_empty = false;
  auto* b_down = build->add_subcommand("downsets", "downset lattice of a poset document");
  b_down->add_option("input", build_file)->required();
  b_down->add_flag("--include-empty", include_empty, "keep the empty downset");
  b_down->add_option("--dot", opt.dot_path);
  auto* b_pow = build->add_subcommand("powerset", "Boolean lattice of n states");
  b_pow->add_option("n", build_n)->required();
  b_pow->add_option("--dot", opt.dot_path);
  auto* b_q = build->add_subcommand("questions", "question lattice");
  int q_states = 0;
  b_q->add_option("--states", q_states, "number of mutually exclusive states");
  b_q->add_option("input", build_file, "state poset document (states = nonempty downsets)");
  b_q->add_option("--dot", opt.dot_path);
  auto* b_part = build->add_subcommand("partition", "partitions of n elements");
  b_part->add_option("n", build_n)->required();
  b_part->add_option("--dot", opt.dot_path);
  auto* b_prod = build->add_subcommand("product", "lattice product of two poset documents");
  b_prod->add_option("left", build_file)->required();
  b_prod->add_option("right", build_file2)->required();
  b_prod->add_option("--dot", opt.dot_path);
  auto* b_div = build->add_subcommand("divisor", "divisor lattice of n");
  b_div->add_option("n", build_n)->required();
  b_div->add_option("--dot", opt.dot_path);

  auto* valuate = app.add_subcommand("valuate", "extend a seed and run rule checks");
  std::string val_input, val_seed, val_checks = "sum";
  valuate->add_option("input", val_input, "poset document")->required();
  valuate->add_option("seed", val_seed, "JSON seed: join-irreducible id -> number")->required();
  valuate->add_option("--check", val_checks,
                      "comma list: sum,monotone,chain,context-product,contextual-sum,bayes,"
                      "product-spaces,all");
  valuate->add_option("--dot", opt.dot_path);

  auto* demo = app.add_subcommand("demo", "run a named worked example");
  std::string demo_name;
  demo->add_option("name", demo_name, "bridge | divisor | partition")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(opt, check_input);
    if (build->parsed()) {
      if (b_down->parsed())
        return emit_built(opt, "build downsets", build_file,
                          downset_lattice(load_poset(build_file), include_empty,
                                          opt.max_elements));
      if (b_pow->parsed()) {
        std::vector<std::string> states;
        for (int i = 0; i < build_n; ++i) states.push_back("s" + std::to_string(i + 1));
        return emit_built(opt, "build powerset", std::to_string(build_n),
                          powerset_lattice(states, opt.max_elements));
      }
      if (b_q->parsed()) {
        std::vector<std::string> states;
        if (!build_file.empty()) {
          Poset base = load_poset(build_file);
          states = downset_poset(base, false, opt.max_elements).elements();
        } else if (q_states > 0) {
          for (int i = 0; i < q_states; ++i) states.push_back("s" + std::to_string(i + 1));
        } else {
          throw CLI::ValidationError("questions", "need --states N or a state poset document");
        }
        Lattice statements = powerset_lattice(states, opt.max_elements);
        return emit_built(opt, "build questions", build_file.empty() ? "--states" : build_file,
                          question_lattice(statements, opt.max_elements));
      }
      if (b_part->parsed())
        return emit_built(opt, "build partition", std::to_string(build_n),
                          certify_or_throw(partition_poset(build_n, opt.max_elements)));
      if (b_prod->parsed()) {
        Lattice left = certify_or_throw(load_poset(build_file));
        Lattice right = certify_or_throw(load_poset(build_file2));
        auto prod = lattice_product(left, right, opt.max_elements);
        return emit_built(opt, "build product", build_file + " x " + build_file2,
                          *prod.lattice);
      }
      if (b_div->parsed()) {
        DivisorLattice d = divisor_lattice(build_n, opt.max_elements);
        return emit_built(opt, "build divisor", std::to_string(build_n), *d.lattice);
      }
    }
    if (valuate->parsed()) return run_valuate(opt, val_input, val_seed, val_checks);
    if (demo->parsed()) return run_demo(opt, demo_name);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return 3;
  } catch (const NotDistributiveError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 4;
  } catch (const MissingSeedError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 4;
  } catch (const LatticeMismatchError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 4;
  } catch (const UndefinedContextError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 4;
  } catch (const NotLatticeError& e) {
    std::cerr << "structural: " << e.what() << '\n';
    return 1;
  } catch (const UnknownDemoError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
