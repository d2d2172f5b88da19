#include "planeaut/curves.hpp"

#include <algorithm>
#include <cctype>

#include "planeaut/errors.hpp"

namespace planeaut {

namespace {

TernaryForm term(int i, int j, int k, const CycloElem& c = CycloElem(1)) { return TernaryForm::monomial({i, j, k}, c); }

ProjTransform diag(const CycloElem& a, const CycloElem& b, const CycloElem& c) { return ProjTransform(diag3(a, b, c)); }

ProjTransform perm(int p0, int p1, int p2) { return ProjTransform(permutation3(p0, p1, p2)); }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void bad_degree(Family f, int d, const std::string& rule) {
  throw DomainError(family_name(f) + ": degree " + std::to_string(d) + " out of range (" + rule + ")");
}

void check_degree(Family f, int d) {
  switch (f) {
    case Family::Fermat:
    case Family::Klein:
    case Family::Fdd1:
    case Family::Dcurve:
      if (d < 4) bad_degree(f, d, "d >= 4");
      break;
    case Family::Fprime:
      if (d < 6 || d % 3 != 0) bad_degree(f, d, "d = 3m >= 6");
      break;
    case Family::Fdoubleprime:
      if (d < 8 || d % 2 != 0) bad_degree(f, d, "d = 2m >= 8");
      break;
    case Family::Wiman6:
    case Family::Hessian6:
      if (d != 6) bad_degree(f, d, "d = 6");
      break;
    case Family::KleinQuartic:
      if (d != 4) bad_degree(f, d, "d = 4");
      break;
  }
}

// The exclusion list of lambda; returns the violated condition.
std::optional<std::string> lambda_violation(Family f, const CycloElem& l) {
  if (l.is_zero()) return "lambda != 0";
  if (f == Family::Fprime && l.pow(3).is_one()) return "lambda^3 != 1";
  if (f == Family::Fdoubleprime) {
    if (l == CycloElem(-1)) return "lambda != -1";
    if (l == CycloElem(2) || l == CycloElem(-2)) return "lambda != 2, -2";
  }
  return std::nullopt;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Fermat: return "Fermat";
    case Family::Klein: return "Klein";
    case Family::Fdd1: return "F_dd1";
    case Family::Dcurve: return "Dcurve";
    case Family::Fprime: return "Fprime";
    case Family::Fdoubleprime: return "Fdoubleprime";
    case Family::Wiman6: return "Wiman6";
    case Family::Hessian6: return "Hessian6";
    case Family::KleinQuartic: return "KleinQuartic";
  }
  return "";
}

std::optional<Family> parse_family(const std::string& name) {
  const std::string n = lower(name);
  for (Family f : {Family::Fermat, Family::Klein, Family::Fdd1, Family::Dcurve, Family::Fprime, Family::Fdoubleprime,
                   Family::Wiman6, Family::Hessian6, Family::KleinQuartic})
    if (lower(family_name(f)) == n) return f;
  if (n == "fdd1") return Family::Fdd1;
  if (n == "wiman") return Family::Wiman6;
  if (n == "hessian") return Family::Hessian6;
  return std::nullopt;
}

bool family_takes_lambda(Family f) { return f == Family::Fprime || f == Family::Fdoubleprime; }

TernaryForm family_form(Family f, int d, const std::optional<CycloElem>& lambda) {
  check_degree(f, d);
  if (family_takes_lambda(f) && !lambda) throw DomainError(family_name(f) + " requires a parameter lambda");
  if (!family_takes_lambda(f) && lambda) throw DomainError(family_name(f) + " takes no parameter");
  switch (f) {
    case Family::Fermat:
      return term(d, 0, 0) + term(0, d, 0) + term(0, 0, d);
    case Family::Klein:
    case Family::KleinQuartic:
      return term(1, d - 1, 0) + term(0, 1, d - 1) + term(d - 1, 0, 1);
    case Family::Fdd1:
      return term(0, 1, d - 1) + term(d, 0, 0) + term(0, d, 0);
    case Family::Dcurve:
      return term(0, 0, d) + term(d - 1, 1, 0) + term(1, d - 1, 0);
    case Family::Fprime: {
      const int m = d / 3;
      return term(d, 0, 0) + term(0, d, 0) + term(0, 0, d) + term(m, m, m, CycloElem(-3) * *lambda);
    }
    case Family::Fdoubleprime: {
      const int m = d / 2;
      return term(d, 0, 0) + term(0, d, 0) + term(0, 0, d) + term(m, m, 0, *lambda) + term(0, m, m, *lambda) +
             term(m, 0, m, *lambda);
    }
    case Family::Wiman6:
      return term(3, 3, 0, 10) + term(5, 0, 1, 9) + term(0, 5, 1, 9) + term(2, 2, 2, -45) + term(1, 1, 4, -135) +
             term(0, 0, 6, 27);
    case Family::Hessian6:
      return term(6, 0, 0) + term(0, 6, 0) + term(0, 0, 6) + term(3, 3, 0, -10) + term(0, 3, 3, -10) +
             term(3, 0, 3, -10);
  }
  return TernaryForm(d);
}

std::vector<ProjTransform> family_generators(Family f, int d) {
  check_degree(f, d);
  const CycloElem one(1);
  switch (f) {
    case Family::Fermat: {
      const CycloElem z = CycloElem::zeta(d);
      return {diag(z, one, one), diag(one, z, one), perm(1, 2, 0), perm(0, 2, 1)};
    }
    case Family::Klein:
    case Family::KleinQuartic: {
      const long q = static_cast<long>(d) * d - 3 * d + 3;
      const CycloElem xi = CycloElem::zeta(q);
      return {diag(xi.pow(-(d - 2)), xi, one), perm(1, 2, 0)};
    }
    case Family::Fdd1:
      return {diag(CycloElem::zeta(d), one, one), diag(one, one, CycloElem::zeta(d - 1))};
    case Family::Dcurve: {
      const CycloElem xi = CycloElem::zeta(static_cast<long>(d) * (d - 2));
      return {diag(xi, xi.pow(-(d - 1)), one), perm(1, 0, 2), diag(one, one, CycloElem::zeta(d))};
    }
    case Family::Fprime: {
      const CycloElem z = CycloElem::zeta(d);
      return {diag(z.pow(3), one, one), diag(one, z.pow(3), one), diag(z, z.pow(-1), one), perm(1, 2, 0),
              perm(0, 2, 1)};
    }
    case Family::Fdoubleprime: {
      const CycloElem z2 = CycloElem::zeta(d, 2);
      return {diag(z2, one, one), diag(one, z2, one), perm(1, 2, 0), perm(0, 2, 1)};
    }
    case Family::Wiman6:
      return {};
    case Family::Hessian6: {
      auto h = hessian_generators();
      return {h.begin(), h.end()};
    }
  }
  return {};
}

CurveFamilyInstance make_family(Family f, int d, const std::optional<CycloElem>& lambda) {
  CurveFamilyInstance inst;
  inst.label = f;
  inst.degree = d;
  inst.lambda = lambda;
  inst.form = family_form(f, d, lambda);
  if (lambda) {
    if (auto v = lambda_violation(f, *lambda)) {
      std::string msg = family_name(f) + ": lambda = " + lambda->to_string() + " violates the smoothness condition " + *v;
      auto verdict = is_smooth(inst.form);
      if (verdict.witness) msg += "; singular point " + verdict.witness->to_string();
      throw DomainError(msg);
    }
  }
  auto verdict = is_smooth(inst.form);
  if (!verdict.smooth) {
    std::string msg = family_name(f) + ": the curve is singular";
    if (verdict.witness) msg += " at " + verdict.witness->to_string();
    throw DomainError(msg);
  }
  inst.standard_generators = family_generators(f, d);
  for (std::size_t i = 0; i < inst.standard_generators.size(); ++i)
    if (!preserves_up_to_scalar(inst.form, inst.standard_generators[i]))
      throw VerificationError(family_name(f) + ": generator " + std::to_string(i + 1) + " does not preserve the form");

  const long dd = d;
  switch (f) {
    case Family::Fermat:
      inst.expected_order = inst.generated_order = 6 * dd * dd;
      break;
    case Family::Klein:
      inst.generated_order = 3 * (dd * dd - 3 * dd + 3);
      if (d == 4) {
        inst.expected_order = 168;
        inst.partial = true;
        inst.notes.push_back("d = 4: the two generators give a subgroup of PSL(2,7)");
      } else {
        inst.expected_order = inst.generated_order;
      }
      break;
    case Family::KleinQuartic:
      inst.generated_order = 21;
      inst.expected_order = 168;
      inst.partial = true;
      inst.notes.push_back("no generators for PSL(2,7) are given; the two Klein generators span a subgroup");
      break;
    case Family::Fdd1:
      inst.generated_order = dd * (dd - 1);
      if (d >= 5)
        inst.expected_order = inst.generated_order;
      else
        inst.notes.push_back("d = 4: the full group is not claimed");
      break;
    case Family::Dcurve:
      inst.generated_order = 2 * dd * (dd - 2);
      if (d == 4) {
        inst.expected_order = 96;
        inst.partial = true;
        inst.notes.push_back("d = 4: isomorphic to the Fermat quartic");
      } else if (d == 6) {
        inst.expected_order = 144;
        inst.partial = true;
        inst.notes.push_back("d = 6: the full group is a central extension of S4 by Z6");
      } else {
        inst.expected_order = inst.generated_order;
      }
      break;
    case Family::Fprime:
      inst.expected_order = inst.generated_order = 2 * dd * dd;
      break;
    case Family::Fdoubleprime:
      inst.expected_order = inst.generated_order = 6 * (dd / 2) * (dd / 2);
      inst.notes.push_back("the order 6m^2 is stated under the name F'_d; it belongs to F''_d");
      break;
    case Family::Wiman6:
      inst.expected_order = 360;
      inst.partial = true;
      inst.notes.push_back("no generators for A6 are given; property checks only");
      break;
    case Family::Hessian6:
      inst.expected_order = inst.generated_order = 216;
      break;
  }
  return inst;
}

std::string to_string(GaloisVerdict v) {
  switch (v) {
    case GaloisVerdict::Inner: return "inner";
    case GaloisVerdict::Outer: return "outer";
    case GaloisVerdict::None: break;
  }
  return "none";
}

GaloisReport galois_group_at(const TernaryForm& f, const MatrixGroup3& g, const ProjPoint& p) {
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    if (!preserves_up_to_scalar(f, g.generators()[i]))
      throw VerificationError("generator " + std::to_string(i + 1) + " does not preserve the curve");
  GaloisReport out;
  out.on_curve = lies_on(f, p);
  const ProjPoint q = p.embed_to(lcm_long(p.conductor(), g.conductor()));
  for (const auto& e : g.elements()) {
    if (e.is_identity()) {
      out.subgroup.push_back(e);
      continue;
    }
    if (!(e.apply(q) == q)) continue;
    HomologyData h = homology_data(e);
    if (h.is_homology && *h.center == p) out.subgroup.push_back(e);
  }
  out.order = static_cast<long>(out.subgroup.size());
  const long d = f.degree();
  if (out.on_curve && out.order == d - 1) out.verdict = GaloisVerdict::Inner;
  if (!out.on_curve && out.order == d) out.verdict = GaloisVerdict::Outer;
  return out;
}

DescendantCertificate descendant_check(const TernaryForm& f, const MatrixGroup3& g, Ancestor ancestor) {
  DescendantCertificate cert;
  const int d = f.degree();
  const std::string name = ancestor == Ancestor::Fermat ? "Fermat" : "Klein";
  if (d < 4) {
    cert.reason = "degree below 4";
    return cert;
  }
  const TernaryForm anc = ancestor == Ancestor::Fermat ? family_form(Family::Fermat, d) : family_form(Family::Klein, d);
  const TernaryForm core = core_decomposition(f).core;
  cert.core_scalar = proportional(core, anc);
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  bool all = true;
  for (const auto& s : gens) {
    cert.generator_scalars.push_back(preserves_up_to_scalar(anc, s));
    all = all && cert.generator_scalars.back().has_value();
  }
  if (!cert.core_scalar)
    cert.reason = "core " + core.to_string() + " is not a multiple of the " + name + " polynomial";
  else if (!all)
    cert.reason = "the group does not act on the " + name + " curve";
  else
    cert.reason = "core is " + cert.core_scalar->to_string() + " times the " + name + " polynomial";
  cert.descendant = cert.core_scalar && all;
  return cert;
}

}  // namespace planeaut
