// Command-line front end: build curves, close generator sets, classify,
// test smoothness, evaluate bounds and run the verification suites.
//
// Exit status: 0 success, 1 verification failure, 2 input error, 3 cap
// exceeded.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planeaut/classify.hpp"
#include "planeaut/errors.hpp"
#include "planeaut/io.hpp"
#include "planeaut/suites.hpp"

using namespace planeaut;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kCap = 3 };

struct Config {
  std::string format = "text";
  long cap = 0;
  long zeta = 1;

  std::string family;
  int degree = 0;
  std::string lambda;
  std::string gens_out;

  std::string gens_path;
  std::string curve_path;

  long genus = 0;
  long oikawa_k = 0;
  std::vector<long> arakawa_k;
  bool hurwitz = false;
  std::string case_label;

  std::string suite;
};

bool as_json(const Config& c) { return c.format == "json"; }

void emit(const Config& c, const json& j, const std::string& text) {
  if (as_json(c))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_curve(const Config& c) {
  auto family = parse_family(c.family);
  if (!family) throw ParseError("unknown family '" + c.family + "'");
  std::optional<CycloElem> lambda;
  if (!c.lambda.empty()) lambda = parse_scalar(c.lambda, c.zeta);
  auto inst = make_family(*family, c.degree, lambda);
  if (!c.gens_out.empty()) {
    std::ofstream out(c.gens_out);
    if (!out) throw ParseError("cannot write " + c.gens_out);
    out << format_generators(inst.standard_generators);
  }
  json gens = json::array();
  for (const auto& g : inst.standard_generators) gens.push_back(to_json(g));
  json j = {{"family", family_name(inst.label)},
            {"degree", inst.degree},
            {"lambda", lambda ? json(lambda->to_string()) : json(nullptr)},
            {"form", to_json(inst.form)},
            {"generators", gens},
            {"expected_order", inst.expected_order ? json(*inst.expected_order) : json(nullptr)},
            {"generated_order", inst.generated_order},
            {"partial", inst.partial},
            {"notes", inst.notes}};
  emit(c, j, format_poly(inst.form));
  return kOk;
}

int cmd_closure(const Config& c) {
  auto gens = read_generators_file(c.gens_path);
  auto g = closure(gens, c.cap);
  auto fp = fingerprint(g);
  json orders = json::object();
  std::string text = "order: " + std::to_string(g.order()) + "\nfingerprint: " + fp.label() + "\nelement orders:";
  for (const auto& [k, n] : fp.element_orders) {
    orders[std::to_string(k)] = n;
    text += " " + std::to_string(k) + ":" + std::to_string(n);
  }
  emit(c, {{"order", g.order()}, {"fingerprint", fp.label()}, {"element_orders", orders}}, text + "\n");
  return kOk;
}

int cmd_classify(const Config& c) {
  auto f = read_poly_file(c.curve_path);
  auto gens = read_generators_file(c.gens_path);
  auto v = verify_action(f, gens, c.cap);
  auto rep = classify(f, v.group);
  emit(c, rep, format_text(rep));
  return rep.consistent ? kOk : kFailed;
}

int cmd_smooth(const Config& c) {
  auto f = read_poly_file(c.curve_path);
  if (f.degree() < 2) throw DomainError("smoothness needs degree >= 2");
  auto v = is_smooth(f);
  json j = {{"smooth", v.smooth},
            {"witness", v.witness ? json(v.witness->to_string()) : json(nullptr)},
            {"non_constructive", v.non_constructive}};
  std::string text = v.smooth ? "smooth\n" : "singular";
  if (!v.smooth) text += v.witness ? " at " + v.witness->to_string() + "\n" : " (no explicit singular point)\n";
  emit(c, j, text);
  return kOk;
}

int cmd_bounds(const Config& c) {
  std::vector<BoundReport> reports;
  if (!c.case_label.empty()) {
    auto label = parse_case(c.case_label);
    if (!label) throw ParseError("unknown case '" + c.case_label + "'");
    reports.push_back(case_bound_report(*label, c.degree));
  }
  if (c.genus) {
    if (c.oikawa_k) reports.push_back(oikawa_report(c.genus, c.oikawa_k));
    if (!c.arakawa_k.empty()) reports.push_back(arakawa_report(c.genus, c.arakawa_k[0], c.arakawa_k[1], c.arakawa_k[2]));
    if (c.hurwitz || (!c.oikawa_k && c.arakawa_k.empty())) reports.push_back(hurwitz(c.genus));
  }
  if (reports.empty()) throw ParseError("bounds needs --genus or --case");
  std::string text;
  for (const auto& r : reports) text += format_text(r);
  emit(c, reports.size() == 1 ? json(reports.front()) : json(reports), text);
  return kOk;
}

int cmd_verify(const Config& c) {
  auto results = run_suite(c.suite);
  json j = json::array();
  std::string text;
  long passed = 0;
  for (const auto& r : results) {
    j.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.suite + ": " + r.name + " (" + r.detail + ")\n";
    passed += r.passed;
  }
  text += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
  emit(c, {{"suite", c.suite}, {"checks", j}, {"passed", passed == static_cast<long>(results.size())}}, text);
  return passed == static_cast<long>(results.size()) ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of smooth plane curves over cyclotomic fields"};
  app.require_subcommand(1);
  Config cfg;
  cfg.cap = default_closure_cap();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cfg.cap, "Closure cap (default from PLANEAUT_CLOSURE_CAP or 25000)")
      ->check(CLI::PositiveNumber);

  auto* curve = app.add_subcommand("curve", "Emit the polynomial file of a named family");
  curve->add_option("family", cfg.family, "Fermat, Klein, fdd1, dcurve, fprime, fdoubleprime, wiman, hessian, kleinquartic")
      ->required();
  curve->add_option("--d", cfg.degree, "Degree")->required();
  curve->add_option("--lambda", cfg.lambda, "Parameter for fprime and fdoubleprime");
  curve->add_option("--zeta", cfg.zeta, "Conductor for z in --lambda")->check(CLI::PositiveNumber);
  curve->add_option("--gens-out", cfg.gens_out, "Also write the standard generators to this file");

  auto* clos = app.add_subcommand("closure", "Order and element orders of a generated group");
  clos->add_option("--gens", cfg.gens_path, "Generator file")->required();

  auto* cls = app.add_subcommand("classify", "Classify a group acting on a curve");
  cls->add_option("--curve", cfg.curve_path, "Polynomial file")->required();
  cls->add_option("--gens", cfg.gens_path, "Generator file")->required();

  auto* smooth = app.add_subcommand("smooth", "Smoothness verdict with a singular point when found");
  smooth->add_option("--curve", cfg.curve_path, "Polynomial file")->required();

  auto* bounds = app.add_subcommand("bounds", "Hurwitz, Oikawa, Arakawa and case bounds");
  bounds->add_option("--genus", cfg.genus, "Genus g >= 2");
  auto* oik = bounds->add_option("--oikawa", cfg.oikawa_k, "Size k of an invariant set");
  auto* ara = bounds->add_option("--arakawa", cfg.arakawa_k, "Sizes k1 k2 k3 of three invariant sets")->expected(3);
  bounds->add_flag("--hurwitz", cfg.hurwitz, "Hurwitz bound with the admissible ratios");
  bounds->add_option("--case", cfg.case_label, "Case label a-i, a-ii, b-i, b-ii or c");
  bounds->add_option("--d", cfg.degree, "Degree for --case");
  oik->excludes(ara);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "fermat, klein, fdd1, dcurve, fprime, fdoubleprime, hessian, galois, "
                                         "theorem2, theorem3 or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*curve) return cmd_curve(cfg);
    if (*clos) return cmd_closure(cfg);
    if (*cls) return cmd_classify(cfg);
    if (*smooth) return cmd_smooth(cfg);
    if (*bounds) return cmd_bounds(cfg);
    if (*verify) {
      if (cfg.suite != "all" &&
          std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
        throw ParseError("unknown suite '" + cfg.suite + "'");
      return cmd_verify(cfg);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
