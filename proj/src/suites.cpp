#include "planeaut/suites.hpp"

#include <functional>

#include "planeaut/classify.hpp"
#include "planeaut/errors.hpp"

namespace planeaut {

namespace {

using Checks = std::vector<CheckResult>;

class Runner {
 public:
  explicit Runner(std::string suite) : suite_(std::move(suite)) {}

  // body returns the detail text and sets ok.
  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{suite_, name, false, ""};
    try {
      bool ok = false;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

  Checks take() { return std::move(out_); }

 private:
  std::string suite_;
  Checks out_;
};

MatrixGroup3 group_of(const CurveFamilyInstance& inst) { return closure(inst.standard_generators); }

std::string n(long v) { return std::to_string(v); }

Checks fermat() {
  Runner r("fermat");
  for (int d = 4; d <= 8; ++d)
    r.check("F_" + n(d), [d](bool& ok) {
      auto inst = make_family(Family::Fermat, d);
      auto g = group_of(inst);
      auto fp = fingerprint(g);
      auto rep = classify(inst.form, g);
      ok = g.order() == 6L * d * d && fp.kind == GroupKind::FermatSemidirect && fp.parameter == d &&
           rep.primary == "b-i" && rep.consistent;
      return "order " + n(g.order()) + ", " + fp.label() + ", case " + rep.primary;
    });
  return r.take();
}

Checks klein() {
  Runner r("klein");
  for (int d = 4; d <= 7; ++d)
    r.check("K_" + n(d), [d](bool& ok) {
      auto inst = make_family(d == 4 ? Family::KleinQuartic : Family::Klein, d);
      auto g = group_of(inst);
      auto orders = g.order_multiset();
      const long expected = d == 4 ? 21 : 3L * (d * d - 3 * d + 3);
      auto rep = classify(inst.form, g);
      ok = g.order() == expected && !orders.count(2) && rep.primary == "b-ii" && rep.consistent;
      return "order " + n(g.order()) + (orders.count(2) ? ", has involutions" : ", no involution") + ", case " +
             rep.primary;
    });
  return r.take();
}

Checks fdd1() {
  Runner r("fdd1");
  for (int d = 5; d <= 7; ++d)
    r.check("F_{" + n(d) + "," + n(d - 1) + "}", [d](bool& ok) {
      auto inst = make_family(Family::Fdd1, d);
      auto g = group_of(inst);
      auto fp = fingerprint(g);
      auto rep = classify(inst.form, g);
      auto gal = galois_group_at(inst.form, g, point_P3());
      ok = g.order() == static_cast<long>(d) * (d - 1) && fp.kind == GroupKind::Cyclic && rep.primary == "a-i" &&
           rep.witnesses["a-i.fixed_point"] == point_P3().to_string() && gal.verdict == GaloisVerdict::Inner &&
           gal.order == d - 1;
      return "order " + n(g.order()) + ", " + fp.label() + ", case " + rep.primary + " at " +
             rep.witnesses["a-i.fixed_point"] + ", Galois " + to_string(gal.verdict) + " of order " + n(gal.order);
    });
  return r.take();
}

Checks dcurve() {
  Runner r("dcurve");
  for (int d : {5, 7, 8})
    r.check("D_" + n(d), [d](bool& ok) {
      auto inst = make_family(Family::Dcurve, d);
      auto g = group_of(inst);
      auto split = pbd_split(g);
      auto gal = galois_group_at(inst.form, g, point_P3());
      ok = g.order() == 2L * d * (d - 2) && split.member && split.kernel.order() == d &&
           split.image_fingerprint.kind == GroupKind::Dihedral && split.image.order() == 2 * (d - 2) &&
           gal.verdict == GaloisVerdict::Outer && gal.order == d;
      return "order " + n(g.order()) + ", |N| = " + n(split.kernel.order()) + ", G' " +
             split.image_fingerprint.label() + ", Galois " + to_string(gal.verdict) + " of order " + n(gal.order);
    });
  r.check("D_4 substitution", [](bool& ok) {
    const CycloElem i = CycloElem::zeta(4);
    const TernaryForm f = family_form(Family::Dcurve, 4);
    const TernaryForm x = TernaryForm::linear(1, 0, 0), y = TernaryForm::linear(0, 1, 0), z = TernaryForm::linear(0, 0, 1);
    const TernaryForm g = f.substitute({x + i * y, x - i * y, z});
    const TernaryForm want = TernaryForm::monomial({0, 0, 4}) + TernaryForm::monomial({4, 0, 0}, 2) +
                             TernaryForm::monomial({0, 4, 0}, -2);
    ok = g == want;
    return g.to_string();
  });
  return r.take();
}

Checks fprime() {
  Runner r("fprime");
  r.check("F'_6, lambda = 2", [](bool& ok) {
    auto inst = make_family(Family::Fprime, 6, CycloElem(2));
    auto g = group_of(inst);
    auto cert = descendant_check(inst.form, g, Ancestor::Fermat);
    ok = g.order() == 72 && cert.descendant;
    return "order " + n(g.order()) + ", descendant of Fermat: " + (cert.descendant ? "yes" : "no");
  });
  r.check("F'_6, lambda = 1 rejected", [](bool& ok) {
    auto v = is_smooth(family_form(Family::Fprime, 6, CycloElem(1)));
    bool rejected = false;
    try {
      make_family(Family::Fprime, 6, CycloElem(1));
    } catch (const DomainError&) {
      rejected = true;
    }
    const ProjPoint one({CycloElem(1), CycloElem(1), CycloElem(1)});
    ok = rejected && !v.smooth && v.witness && *v.witness == one;
    return std::string("singular") + (v.witness ? " at " + v.witness->to_string() : "");
  });
  return r.take();
}

Checks fdoubleprime() {
  Runner r("fdoubleprime");
  r.check("F''_8, lambda = 1", [](bool& ok) {
    auto inst = make_family(Family::Fdoubleprime, 8, CycloElem(1));
    auto g = group_of(inst);
    auto cert = descendant_check(inst.form, g, Ancestor::Fermat);
    ok = g.order() == 96 && cert.descendant;
    return "order " + n(g.order()) + ", descendant of Fermat: " + (cert.descendant ? "yes" : "no");
  });
  r.check("F''_8, lambda = -1 rejected", [](bool& ok) {
    auto v = is_smooth(family_form(Family::Fdoubleprime, 8, CycloElem(-1)));
    bool rejected = false;
    try {
      make_family(Family::Fdoubleprime, 8, CycloElem(-1));
    } catch (const DomainError&) {
      rejected = true;
    }
    const ProjPoint one({CycloElem(1), CycloElem(1), CycloElem(1)});
    ok = rejected && !v.smooth && v.witness && *v.witness == one;
    return std::string("singular") + (v.witness ? " at " + v.witness->to_string() : "");
  });
  return r.take();
}

Checks hessian() {
  Runner r("hessian");
  const auto h = hessian_generators();
  const TernaryForm sextic = family_form(Family::Hessian6, 6);
  auto orders = [&](const std::vector<ProjTransform>& gens, long want, const std::string& label) {
    return [=](bool& ok) {
      auto g = closure(gens);
      bool preserved = true;
      for (const auto& s : gens) preserved = preserved && preserves_up_to_scalar(sextic, s).has_value();
      auto fp = fingerprint(g);
      ok = g.order() == want && preserved && fp.label() == label;
      return "order " + n(g.order()) + ", " + fp.label() + (preserved ? ", preserves the sextic" : ", does not preserve the sextic");
    };
  };
  r.check("<h1,h2,h3,h4>", orders({h[0], h[1], h[2], h[3]}, 216, "Hessian216"));
  r.check("<h1,h2,h3>", orders({h[0], h[1], h[2]}, 36, "Hessian36"));
  r.check("<h1,h2,h3,u>, u = h4^-1 h3 h4", orders({h[0], h[1], h[2], hessian72_generator()}, 72, "Hessian72"));
  r.check("u = h1^-1 h4^2 h1 as printed", [h](bool& ok) {
    const ProjTransform u = h[0].inverse() * h[3] * h[3] * h[0];
    auto g = closure<3>({h[0], h[1], h[2], u});
    ok = g.order() == 216;
    return "generates order " + n(g.order()) + " (the full group, not the subgroup of order 72)";
  });
  r.check("classify", [&](bool& ok) {
    auto g = closure<3>({h[0], h[1], h[2], h[3]});
    auto rep = classify(sextic, g);
    auto cert = descendant_check(sextic, g, Ancestor::Fermat);
    ok = rep.primary == "c" && rep.cases.size() == 1 && rep.witnesses["c.fingerprint"] == "Hessian216" && !cert.descendant;
    return "case " + rep.primary + ", descendant of Fermat: " + (cert.descendant ? "yes" : "no");
  });
  return r.take();
}

Checks galois() {
  Runner r("galois");
  r.check("F_{5,4} at (0:0:1)", [](bool& ok) {
    auto inst = make_family(Family::Fdd1, 5);
    auto rep = galois_group_at(inst.form, group_of(inst), point_P3());
    ok = rep.verdict == GaloisVerdict::Inner && rep.order == 4;
    return to_string(rep.verdict) + ", order " + n(rep.order);
  });
  r.check("D_8 at (0:0:1)", [](bool& ok) {
    auto inst = make_family(Family::Dcurve, 8);
    auto rep = galois_group_at(inst.form, group_of(inst), point_P3());
    ok = rep.verdict == GaloisVerdict::Outer && rep.order == 8;
    return to_string(rep.verdict) + ", order " + n(rep.order);
  });
  r.check("F_5 at (1:1:1)", [](bool& ok) {
    auto inst = make_family(Family::Fermat, 5);
    auto rep = galois_group_at(inst.form, group_of(inst), ProjPoint({CycloElem(1), CycloElem(1), CycloElem(1)}));
    ok = rep.verdict == GaloisVerdict::None && rep.order == 1;
    return to_string(rep.verdict) + ", order " + n(rep.order);
  });
  return r.take();
}

Checks theorem2() {
  Runner r("theorem2");
  for (int d = 4; d <= 8; ++d)
    r.check("d = " + n(d), [d](bool& ok) {
      auto rep = theorem2_audit(d, theorem2_instances(d));
      ok = rep.passed();
      long best = 0;
      std::string who;
      for (const auto& e : rep.entries)
        if (e.recorded_order > best) best = e.recorded_order, who = e.family;
      return "largest order " + n(best) + " (" + who + "), " + n(static_cast<long>(rep.failures.size())) + " failures";
    });
  return r.take();
}

Checks theorem3() {
  Runner r("theorem3");
  for (long d : {8L, 60L, 61L})
    r.check("d = " + n(d), [d](bool& ok) {
      auto rep = theorem3_audit(d);
      ok = rep.passed();
      std::string values;
      for (const auto& e : rep.entries)
        if (e.recorded_order) values += (values.empty() ? "" : ", ") + n(e.recorded_order);
      return "orders " + values + " against " + n(rep.threshold);
    });
  return r.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fermat", "klein",   "fdd1",   "dcurve",   "fprime",
                                                 "fdoubleprime", "hessian", "galois", "theorem2", "theorem3"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "fermat") return fermat();
  if (name == "klein") return klein();
  if (name == "fdd1") return fdd1();
  if (name == "dcurve") return dcurve();
  if (name == "fprime") return fprime();
  if (name == "fdoubleprime") return fdoubleprime();
  if (name == "hessian") return hessian();
  if (name == "galois") return galois();
  if (name == "theorem2") return theorem2();
  if (name == "theorem3") return theorem3();
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace planeaut
