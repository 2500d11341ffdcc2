// eulerk: exact generalized Euler characteristics on spaces built from
// classifying-space leaves by homotopy pushouts.
//
// Subcommands:
//   eval <expr>      evaluate a characteristic on an expression
//   class <expr>     decompose an expression in the basis
//   mobius <group>   dump the surjection poset and its Mobius matrix
//   group <group>    inspect a catalog group
//   verify <suite>   run a verification suite
//
// Exit codes: 0 success, 1 input error, 2 verification failure.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerk/basis.hpp"
#include "eulerk/canonical.hpp"
#include "eulerk/catalog.hpp"
#include "eulerk/charfn.hpp"
#include "eulerk/error.hpp"
#include "eulerk/hom.hpp"
#include "eulerk/k0.hpp"
#include "eulerk/parse.hpp"
#include "eulerk/poset.hpp"
#include "eulerk/verify.hpp"

namespace {

using nlohmann::json;
using namespace eulerk;

json rat_json(const Rat& value) {
  return json{{"num", value.num().to_string()},
              {"den", value.den().to_string()}};
}

struct Options {
  std::string format = "plain";
  int max_order = 36;
  std::string values_path;

  Limits limits() const {
    Limits l;
    l.max_order = max_order;
    return l;
  }
  bool json_output() const { return format == "json"; }
};

BasisAssignment load_values_file(const std::string& path,
                                 const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open values file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInputError("values file '" + path + "': " + e.what());
  }
  if (!doc.is_array()) {
    throw InvalidInputError("values file must be a JSON list of "
                            "{basis, value} objects");
  }
  std::vector<std::pair<BasisElement, Rat>> values;
  for (const auto& item : doc) {
    const std::string spec = item.at("basis").get<std::string>();
    const Rat value = Rat::parse(item.at("value").get<std::string>());
    if (spec == "*") {
      values.emplace_back(BasisElement::star(), value);
    } else {
      values.emplace_back(
          BasisElement::p_group(build_catalog_group(spec, limits)), value);
    }
  }
  return BasisAssignment::from_values(std::move(values));
}

// --char selector: baez-dolan | euler-rational | chi-K=<groupspec> |
// file=<path> (or plain "file" with --values)
CharFunction make_characteristic(const std::string& selector,
                                 const Options& opts) {
  const Limits limits = opts.limits();
  if (selector == "baez-dolan") {
    return CharFunction::assembled(BasisAssignment::baez_dolan(), limits);
  }
  if (selector == "euler-rational") {
    return CharFunction::euler_rational();
  }
  if (selector.rfind("chi-K=", 0) == 0) {
    return CharFunction::chi(build_catalog_group(selector.substr(6), limits),
                             limits);
  }
  if (selector == "file" || selector.rfind("file=", 0) == 0) {
    std::string path = selector == "file" ? opts.values_path
                                          : selector.substr(5);
    if (path.empty()) path = opts.values_path;
    if (path.empty()) {
      throw InvalidInputError(
          "selector 'file' needs file=<path> or --values <path>");
    }
    return CharFunction::assembled(load_values_file(path, limits), limits);
  }
  throw InvalidInputError(
      "unknown characteristic '" + selector +
      "' (expected baez-dolan, euler-rational, chi-K=<group>, file=<path>)");
}

const char* strategy_name(EvalStrategy s) {
  switch (s) {
    case EvalStrategy::DirectStructural:
      return "direct-structural";
    case EvalStrategy::DeltaCombination:
      return "delta-combination";
    case EvalStrategy::Assembly:
      return "assembly";
  }
  return "?";
}

int cmd_eval(const std::string& expr_text, const std::string& selector,
             const Options& opts) {
  const Limits limits = opts.limits();
  const SpaceExpr expr = parse_space(expr_text, limits);
  const CharFunction f = make_characteristic(selector, opts);
  const Rat value = f(expr);
  if (!opts.json_output()) {
    std::cout << value.to_string() << "\n";
    return 0;
  }
  json out{{"expression", expr_text},
           {"strategy", strategy_name(f.strategy())},
           {"value", rat_json(value)},
           {"per_prime", json::object()}};
  if (f.strategy() == EvalStrategy::Assembly) {
    for (int p : torsion_support(expr, limits)) {
      out["per_prime"][std::to_string(p)] =
          rat_json(project_prime(f, p, expr, limits));
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_class(const std::string& expr_text, const Options& opts) {
  const Limits limits = opts.limits();
  const K0Class cls = k0_class(parse_space(expr_text, limits), limits);
  if (!opts.json_output()) {
    std::cout << cls.render() << "\n";
    return 0;
  }
  json groups = json::array();
  long long star = 0;
  for (const auto& [elem, coef] : cls.terms()) {
    if (elem.is_star()) {
      star = coef;
    } else {
      groups.push_back(json{{"prime", elem.prime()},
                            {"spec", elem.display_name()},
                            {"coef", coef}});
    }
  }
  std::cout << json{{"star", star}, {"groups", groups}}.dump(2) << "\n";
  return 0;
}

int cmd_mobius(const std::string& spec, const Options& opts) {
  const Limits limits = opts.limits();
  const FiniteGroup g = build_catalog_group(spec, limits);
  const QuotientPoset poset = quotient_poset(g);
  const MobiusData data = mobius(poset);
  json nodes = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    const int kernel_order = static_cast<int>(poset.kernel(i).elements.size());
    nodes.push_back(json{{"index", i},
                         {"kernel", poset.kernel(i).elements},
                         {"kernel_order", kernel_order},
                         {"quotient_order", g.order() / kernel_order}});
  }
  json out{{"group", g.name()},
           {"order", g.order()},
           {"top", poset.top()},
           {"bottom", poset.bottom()},
           {"nodes", nodes},
           {"mu", data.mu}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_group(const std::string& spec, const Options& opts) {
  const Limits limits = opts.limits();
  const FiniteGroup g = build_catalog_group(spec, limits);
  const SylowDecomposition syl = sylow_decomposition(g);
  const auto normals = normal_subgroups(g);
  if (!opts.json_output()) {
    std::cout << "group " << g.name() << "\n"
              << "order " << g.order() << "\n"
              << "abelian " << (g.is_abelian() ? "yes" : "no") << "\n"
              << "nilpotent " << (syl.nilpotent ? "yes" : "no") << "\n"
              << "normal subgroups " << normals.size() << "\n"
              << "canonical " << canonical_name(g) << "\n";
    for (const auto& [p, sub] : syl.sylow) {
      std::cout << "sylow " << p << " " << canonical_name(sub) << "\n";
    }
    return 0;
  }
  json sylows = json::object();
  for (const auto& [p, sub] : syl.sylow) {
    sylows[std::to_string(p)] = canonical_name(sub);
  }
  json out{{"name", g.name()},
           {"order", g.order()},
           {"abelian", g.is_abelian()},
           {"nilpotent", syl.nilpotent},
           {"element_orders", g.element_orders()},
           {"normal_subgroups", normals.size()},
           {"canonical", canonical_name(g)},
           {"sylow", sylows}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const Options& opts) {
  bool known = false;
  for (const auto& name : verify_suite_names()) {
    if (name == suite) known = true;
  }
  if (!known) {
    throw InvalidInputError("unknown verification suite '" + suite + "'");
  }
  const VerifyReport report = run_verify_suite(suite, opts.limits());
  if (opts.json_output()) {
    json out{{"suite", report.suite},
             {"pass", report.pass},
             {"checks", report.checks},
             {"seconds", report.seconds},
             {"summary", report.summary}};
    if (!report.counterexample.empty()) {
      out["counterexample"] = report.counterexample;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "suite " << report.suite << "\n"
              << "checks " << report.checks << "\n"
              << report.summary;
    if (!report.counterexample.empty()) {
      std::cout << "counterexample: " << report.counterexample << "\n";
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized Euler characteristics on pushout "
               "expressions over classifying-space leaves"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();
  app.add_option("--max-order", opts.max_order,
                 "maximum constructible group order")
      ->envname("EULERK_MAX_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--values", opts.values_path,
                 "basis-values JSON file for --char file");

  std::string expr_text, selector = "baez-dolan", group_spec, suite;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a characteristic");
  eval->add_option("expr", expr_text, "space expression")->required();
  eval->add_option("--char", selector,
                   "baez-dolan | euler-rational | chi-K=<group> | "
                   "file=<path>")
      ->capture_default_str();

  CLI::App* cls = app.add_subcommand("class", "basis decomposition");
  cls->add_option("expr", expr_text, "space expression")->required();

  CLI::App* mob = app.add_subcommand("mobius", "surjection poset dump");
  mob->add_option("group", group_spec, "group spec")->required();

  CLI::App* grp = app.add_subcommand("group", "group inspection");
  grp->add_option("group", group_spec, "group spec")->required();

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite,
                  "delta-oracle | reconstruction | assembly | "
                  "fibration-failure | wall")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (eval->parsed()) return cmd_eval(expr_text, selector, opts);
    if (cls->parsed()) return cmd_class(expr_text, opts);
    if (mob->parsed()) return cmd_mobius(group_spec, opts);
    if (grp->parsed()) return cmd_group(group_spec, opts);
    if (ver->parsed()) return cmd_verify(suite, opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
