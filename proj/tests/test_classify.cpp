#include <algorithm>

#include "doctest.h"
#include "planeaut/classify.hpp"
#include "planeaut/errors.hpp"

using namespace planeaut;

namespace {

TernaryForm mono(int i, int j, int k, const CycloElem& c = CycloElem(1)) { return TernaryForm::monomial({i, j, k}, c); }
ProjTransform pm(const Matrix3& m) { return ProjTransform(m); }

bool has_case(const ClassificationReport& r, const std::string& c) {
  return std::find(r.cases.begin(), r.cases.end(), c) != r.cases.end();
}

ClassificationReport run(const CurveFamilyInstance& inst) { return classify(inst.form, closure(inst.standard_generators)); }

// X^m Y^m + Z^2m + Z (X^(2m-1) + Y^(2m-1)) with the group generated by
// [zeta X, zeta^-1 Y, Z] (zeta of order 2m-1) and the swap of X and Y. The
// line Z = 0 meets the curve only at P1 and P2.
std::pair<TernaryForm, std::vector<ProjTransform>> two_point_curve(int m) {
  const int d = 2 * m;
  const TernaryForm f = mono(m, m, 0) + mono(0, 0, d) + mono(d - 1, 0, 1) + mono(0, d - 1, 1);
  const CycloElem z = CycloElem::zeta(d - 1);
  return {f, {pm(diag3(z, z.inverse(), 1)), pm(permutation3(1, 0, 2))}};
}

}  // namespace

TEST_CASE("verify_action") {
  auto f4 = make_family(Family::Fermat, 4);
  auto v = verify_action(f4.form, f4.standard_generators);
  CHECK(v.group.order() == 96);
  REQUIRE(v.scalars.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(transform_action(f4.form, f4.standard_generators[i]) == v.scalars[i] * f4.form);

  auto hs = make_family(Family::Hessian6, 6);
  CHECK(verify_action(hs.form, hs.standard_generators).group.order() == 216);

  Matrix3 shear = Matrix3::identity();
  shear(0, 1) = CycloElem(1);
  try {
    verify_action(f4.form, {f4.standard_generators[0], pm(shear)});
    FAIL("shear accepted");
  } catch (const VerificationError& e) {
    CHECK(std::string(e.what()).find("generator 2") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_action(family_form(Family::Fprime, 6, CycloElem(1)), {}), DomainError);
  CHECK_THROWS_AS(verify_action(mono(3, 0, 0) + mono(0, 3, 0) + mono(0, 0, 3), {}), DomainError);
  CHECK_THROWS_AS(verify_action(hs.form, hs.standard_generators, 50), CapExceeded);
}

TEST_CASE("named families") {
  auto f54 = run(make_family(Family::Fdd1, 5));
  CHECK(f54.primary == "a-i");
  CHECK(f54.witnesses["a-i.fixed_point"] == point_P3().to_string());
  CHECK(f54.order == 20);
  CHECK(f54.consistent);

  auto d8 = run(make_family(Family::Dcurve, 8));
  CHECK(d8.primary == "a-ii");
  CHECK(d8.witnesses["a-ii.N_order"] == "8");
  CHECK(d8.witnesses["a-ii.Gprime"] == "dihedral 12");
  CHECK(d8.witnesses["a-ii.m"] == "6");
  CHECK(std::find(d8.flags.begin(), d8.flags.end(), "a-ii.m_divides_d-2_or_N_trivial: ok") != d8.flags.end());
  CHECK(d8.consistent);

  auto hs = run(make_family(Family::Hessian6, 6));
  CHECK(hs.primary == "c");
  CHECK(hs.cases == std::vector<std::string>{"c"});
  CHECK(hs.witnesses["c.fingerprint"] == "Hessian216");

  auto f5 = run(make_family(Family::Fermat, 5));
  CHECK(f5.cases == std::vector<std::string>{"b-i"});
  CHECK(f5.witnesses["b-i.core_equals_ancestor"] == "true");

  auto k5 = run(make_family(Family::Klein, 5));
  CHECK(k5.cases == std::vector<std::string>{"b-ii"});
  CHECK(k5.witnesses["b-ii.core_equals_ancestor"] == "true");

  for (const auto* r : {&f54, &d8, &hs, &f5, &k5}) {
    CHECK(r->consistent);
    for (const auto& b : r->bounds) CHECK(b.order <= b.bound);
  }
}

TEST_CASE("classification totality") {
  struct Row {
    CurveFamilyInstance inst;
    std::string primary;
  };
  std::vector<Row> rows;
  for (int d = 4; d <= 8; ++d) rows.push_back({make_family(Family::Fermat, d), "b-i"});
  rows.push_back({make_family(Family::KleinQuartic, 4), "b-ii"});
  for (int d = 5; d <= 8; ++d) rows.push_back({make_family(Family::Klein, d), "b-ii"});
  for (int d = 5; d <= 8; ++d) rows.push_back({make_family(Family::Fdd1, d), "a-i"});
  for (int d = 5; d <= 8; ++d) rows.push_back({make_family(Family::Dcurve, d), "a-ii"});
  rows.push_back({make_family(Family::Fprime, 6, CycloElem(2)), "b-i"});
  rows.push_back({make_family(Family::Fdoubleprime, 8, CycloElem(1)), "b-i"});
  for (const auto& r : rows) {
    CAPTURE(family_name(r.inst.label));
    CAPTURE(r.inst.degree);
    auto rep = run(r.inst);
    CHECK(rep.primary == r.primary);
    CHECK_FALSE(rep.cases.empty());
    CHECK(rep.consistent);
  }
  // Fermat triangles are the coordinate triangle.
  auto f6 = run(make_family(Family::Fermat, 6));
  CHECK(f6.witnesses["b-i.triangle"].find("(1 : 0 : 0)") != std::string::npos);

  // F' with the subgroup generated by [X, Y, zeta_m Z].
  auto fp = make_family(Family::Fprime, 6, CycloElem(2));
  auto eta = classify(fp.form, closure<3>({pm(diag3(1, 1, CycloElem::zeta(2)))}));
  CHECK(has_case(eta, "a-ii"));
  CHECK(eta.witnesses["a-ii.N_order"] == "2");
  CHECK(eta.consistent);

  // Hessian subgroups stay primitive.
  const auto h = hessian_generators();
  const TernaryForm sextic = family_form(Family::Hessian6, 6);
  auto h36 = classify(sextic, closure<3>({h[0], h[1], h[2]}));
  CHECK(h36.cases == std::vector<std::string>{"c"});
  CHECK(h36.witnesses["c.fingerprint"] == "Hessian36");
  auto h72 = classify(sextic, closure<3>({h[0], h[1], h[2], hessian72_generator()}));
  CHECK(h72.cases == std::vector<std::string>{"c"});
  CHECK(h72.witnesses["c.fingerprint"] == "Hessian72");
}

TEST_CASE("overlapping cases") {
  // A diagonal cyclic group on the Fermat quartic fixes the coordinate
  // points and the coordinate triangle.
  auto f4 = make_family(Family::Fermat, 4);
  auto rep = classify(f4.form, closure<3>({pm(diag3(CycloElem::zeta(4), 1, 1))}));
  CHECK(rep.cases.size() >= 2);
  CHECK(rep.primary == rep.cases.front());
  CHECK(rep.consistent);

  // Z5 x Z5 on the Fermat quintic fixes P1 off the curve with m = d, so the
  // a-ii conclusion fails while b-i holds.
  auto f5 = make_family(Family::Fermat, 5);
  auto diag = classify(f5.form, closure<3>({f5.standard_generators[0], f5.standard_generators[1]}));
  CHECK(diag.cases == std::vector<std::string>{"b-i"});
  CHECK(std::find(diag.flags.begin(), diag.flags.end(), "a-ii.m_at_most_d-1: not satisfied (b-i applies)") !=
        diag.flags.end());
  CHECK(diag.consistent);

  // Z^d + X^(d-1) Y + Y^(d-1) Z has a cyclic group of order (d-1)^2 fixing P1
  // on the curve and P3 off it. a-i applies; the a-ii conclusion m <= d-1
  // fails and is recorded without making the report inconsistent.
  for (int d : {4, 5}) {
    const TernaryForm f = mono(0, 0, d) + mono(d - 1, 1, 0) + mono(0, d - 1, 1);
    const long q = static_cast<long>(d - 1) * (d - 1);
    const CycloElem a = CycloElem::zeta(q);
    auto g = verify_action(f, {pm(diag3(a.inverse(), a.pow(d - 1), 1))}).group;
    CHECK(g.order() == q);
    auto r = classify(f, g);
    CHECK(r.primary == "a-i");
    CHECK_FALSE(has_case(r, "a-ii"));
    CHECK(r.consistent);
    CHECK(std::any_of(r.flags.begin(), r.flags.end(),
                      [](const std::string& s) { return s.find("not satisfied (a-i applies)") != std::string::npos; }));
  }
}

TEST_CASE("claims on the PBD(2,1) case") {
  // Claim A: N is cyclic of order dividing d. Claim B: when N is nontrivial
  // the fixed line meets the curve transversally at P1 and P2.
  std::vector<std::pair<TernaryForm, MatrixGroup3>> groups;
  for (int d : {5, 6, 7, 8}) {
    auto inst = make_family(Family::Dcurve, d);
    groups.emplace_back(inst.form, closure(inst.standard_generators));
  }
  auto fp = make_family(Family::Fprime, 6, CycloElem(2));
  groups.emplace_back(fp.form, closure<3>({pm(diag3(1, 1, CycloElem::zeta(2)))}));
  for (int m : {2, 3}) {
    auto [f, gens] = two_point_curve(m);
    groups.emplace_back(f, verify_action(f, gens).group);
  }
  const ProjLine z0({CycloElem(0), CycloElem(0), CycloElem(1)});
  for (const auto& [f, g] : groups) {
    CAPTURE(f.to_string());
    auto s = pbd_split(g);
    REQUIRE(s.member);
    CHECK(fingerprint(s.kernel).kind == GroupKind::Cyclic);
    CHECK(f.degree() % s.kernel.order() == 0);
    if (s.kernel.order() > 1) {
      CHECK(intersection_multiplicity(f, z0, point_P1()) <= 1);
      CHECK(intersection_multiplicity(f, z0, point_P2()) <= 1);
    }
  }
}

TEST_CASE("claim D on curves meeting the fixed line at P1 and P2 only") {
  for (int m : {2, 3, 4}) {
    auto [f, gens] = two_point_curve(m);
    const int d = 2 * m;
    CAPTURE(d);
    REQUIRE(is_smooth(f).smooth);
    auto g = verify_action(f, gens).group;
    const ProjLine z0({CycloElem(0), CycloElem(0), CycloElem(1)});
    CHECK(line_meet_count(f, z0) == 2);
    CHECK(lies_on(f, point_P1()));
    CHECK(lies_on(f, point_P2()));
    auto r = classify(f, g);
    CHECK(r.primary == "a-ii");
    CHECK(r.consistent);
    const long mm = std::stol(r.witnesses["a-ii.m"]);
    CHECK((d - 1) % mm == 0);
    CHECK(mm == d - 1);
  }
}

TEST_CASE("subgroup monotonicity") {
  auto check_subgroups = [](const CurveFamilyInstance& inst) {
    const auto& gens = inst.standard_generators;
    const std::size_t n = gens.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<ProjTransform> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(gens[i]);
      auto r = classify(inst.form, closure(sub));
      CAPTURE(mask);
      CHECK(r.consistent);
      for (const auto& b : r.bounds) CHECK(b.passed);
    }
  };
  check_subgroups(make_family(Family::Fermat, 5));
  check_subgroups(make_family(Family::Dcurve, 6));
  check_subgroups(make_family(Family::Fprime, 6, CycloElem(2)));
  check_subgroups(make_family(Family::Klein, 5));
}

TEST_CASE("errors") {
  auto f4 = make_family(Family::Fermat, 4);
  auto k5 = make_family(Family::Klein, 5);
  CHECK_THROWS_AS(classify(f4.form, closure(k5.standard_generators)), VerificationError);
}

TEST_CASE("audits") {
  for (int d = 4; d <= 6; ++d) {
    auto rep = theorem2_audit(d, theorem2_instances(d));
    CHECK(rep.passed());
  }
  auto t5 = theorem2_audit(5, theorem2_instances(5));
  long best = 0;
  std::string who;
  for (const auto& e : t5.entries)
    if (e.recorded_order > best) best = e.recorded_order, who = e.family;
  CHECK(best == 150);
  CHECK(who == "Fermat");

  auto t60 = theorem3_audit(60);
  CHECK(t60.passed());
  CHECK(t60.threshold == 3600);
  std::vector<long> exceptional;
  for (const auto& e : t60.entries)
    if (e.exceeds) exceptional.push_back(e.recorded_order);
  CHECK(exceptional == std::vector<long>{21600, 10269, 6960, 7200, 5400});

  auto t61 = theorem3_audit(61);
  long applicable = 0;
  for (const auto& e : t61.entries) applicable += e.exceeds;
  CHECK(applicable == 3);

  // A doctored instance with an order above 6d^2 is reported.
  auto bogus = theorem2_instances(5);
  bogus.front().expected_order = 1000;
  bogus.front().generated_order = 1000;
  CHECK_FALSE(theorem2_audit(5, bogus).passed());
}
