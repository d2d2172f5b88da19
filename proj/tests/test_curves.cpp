#include <functional>

#include "doctest.h"
#include "planeaut/curves.hpp"
#include "planeaut/errors.hpp"

using namespace planeaut;

namespace {

TernaryForm mono(int i, int j, int k, const CycloElem& c = CycloElem(1)) { return TernaryForm::monomial({i, j, k}, c); }

bool throws_domain_with(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const DomainError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("family names") {
  for (Family f : {Family::Fermat, Family::Klein, Family::Fdd1, Family::Dcurve, Family::Fprime, Family::Fdoubleprime,
                   Family::Wiman6, Family::Hessian6, Family::KleinQuartic})
    CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("fermat") == Family::Fermat);
  CHECK(parse_family("FDD1") == Family::Fdd1);
  CHECK(parse_family("wiman") == Family::Wiman6);
  CHECK(parse_family("hessian") == Family::Hessian6);
  CHECK_FALSE(parse_family("trott").has_value());
  CHECK(family_takes_lambda(Family::Fprime));
  CHECK(family_takes_lambda(Family::Fdoubleprime));
  CHECK_FALSE(family_takes_lambda(Family::Klein));
}

TEST_CASE("forms") {
  CHECK(family_form(Family::Fdd1, 5) == mono(0, 1, 4) + mono(5, 0, 0) + mono(0, 5, 0));
  CHECK(family_form(Family::Klein, 5) == mono(1, 4, 0) + mono(0, 1, 4) + mono(4, 0, 1));
  CHECK(family_form(Family::Dcurve, 6) == mono(0, 0, 6) + mono(5, 1, 0) + mono(1, 5, 0));
  CHECK(family_form(Family::Fprime, 6, CycloElem(2)) ==
        mono(6, 0, 0) + mono(0, 6, 0) + mono(0, 0, 6) + mono(2, 2, 2, -6));
  CHECK(family_form(Family::Hessian6, 6).terms().size() == 6);
}

TEST_CASE("instances and orders") {
  struct Row {
    Family f;
    int d;
    std::optional<CycloElem> lambda;
    long expected;
  };
  const std::vector<Row> rows = {
      {Family::Fermat, 5, std::nullopt, 150},     {Family::Fprime, 6, CycloElem(2), 72},
      {Family::Fdoubleprime, 8, CycloElem(1), 96}, {Family::Klein, 6, std::nullopt, 63},
      {Family::Fdd1, 6, std::nullopt, 30},        {Family::Dcurve, 7, std::nullopt, 70},
      {Family::Hessian6, 6, std::nullopt, 216},
  };
  for (const auto& r : rows) {
    auto inst = make_family(r.f, r.d, r.lambda);
    CAPTURE(family_name(r.f));
    REQUIRE(inst.expected_order);
    CHECK(*inst.expected_order == r.expected);
    CHECK_FALSE(inst.partial);
    CHECK(closure(inst.standard_generators).order() == r.expected);
    CHECK(inst.generated_order == r.expected);
  }
  auto kq = make_family(Family::KleinQuartic, 4);
  CHECK(kq.expected_order == 168);
  CHECK(kq.partial);
  CHECK(closure(kq.standard_generators).order() == kq.generated_order);
  CHECK(kq.generated_order == 21);

  auto w = make_family(Family::Wiman6, 6);
  CHECK(w.expected_order == 360);
  CHECK(w.standard_generators.empty());
  CHECK(w.partial);
}

TEST_CASE("parameter gates") {
  CHECK_THROWS_AS(make_family(Family::Fermat, 3), DomainError);
  CHECK_THROWS_AS(make_family(Family::Fprime, 7, CycloElem(2)), DomainError);
  CHECK_THROWS_AS(make_family(Family::Fdoubleprime, 6, CycloElem(1)), DomainError);
  CHECK_THROWS_AS(make_family(Family::Wiman6, 7), DomainError);
  CHECK(throws_domain_with([] { make_family(Family::Fprime, 6, CycloElem(1)); }, "(1 : 1 : 1)"));
  CHECK(throws_domain_with([] { make_family(Family::Fprime, 6, CycloElem::zeta(3)); }, "lambda"));
  CHECK_THROWS_AS(make_family(Family::Fprime, 6, CycloElem(0)), DomainError);
  CHECK(throws_domain_with([] { make_family(Family::Fdoubleprime, 8, CycloElem(-1)); }, "(1 : 1 : 1)"));
  for (long bad : {0L, 2L, -2L}) CHECK_THROWS_AS(make_family(Family::Fdoubleprime, 8, CycloElem(bad)), DomainError);
  // Allowed parameters pass the smoothness check.
  CHECK(is_smooth(make_family(Family::Fprime, 9, CycloElem(-1)).form).smooth);
  CHECK(is_smooth(make_family(Family::Fdoubleprime, 10, CycloElem(3)).form).smooth);
}

TEST_CASE("D-curve of degree 4 is a Fermat-type quartic") {
  const CycloElem i = CycloElem::zeta(4);
  const TernaryForm x = TernaryForm::linear(1, 0, 0), y = TernaryForm::linear(0, 1, 0), z = TernaryForm::linear(0, 0, 1);
  const TernaryForm g = family_form(Family::Dcurve, 4).substitute({x + i * y, x - i * y, z});
  CHECK(g == mono(0, 0, 4) + mono(4, 0, 0, 2) + mono(0, 4, 0, -2));
}

TEST_CASE("Galois points") {
  auto f54 = make_family(Family::Fdd1, 5);
  auto r = galois_group_at(f54.form, closure(f54.standard_generators), point_P3());
  CHECK(r.verdict == GaloisVerdict::Inner);
  CHECK(r.order == 4);
  CHECK(r.on_curve);
  CHECK(static_cast<long>(r.subgroup.size()) == r.order);

  auto d8 = make_family(Family::Dcurve, 8);
  auto o = galois_group_at(d8.form, closure(d8.standard_generators), point_P3());
  CHECK(o.verdict == GaloisVerdict::Outer);
  CHECK(o.order == 8);
  CHECK_FALSE(o.on_curve);

  auto f5 = make_family(Family::Fermat, 5);
  auto n = galois_group_at(f5.form, closure(f5.standard_generators), ProjPoint({CycloElem(1), CycloElem(1), CycloElem(1)}));
  CHECK(n.verdict == GaloisVerdict::None);
  CHECK(n.order == 1);
  CHECK(to_string(GaloisVerdict::Outer) == "outer");

  // The Fermat group does not act on F_{5,4}.
  CHECK_THROWS_AS(galois_group_at(f54.form, closure(f5.standard_generators), point_P3()), VerificationError);
}

TEST_CASE("descendants") {
  auto fp = make_family(Family::Fprime, 6, CycloElem(2));
  auto c1 = descendant_check(fp.form, closure(fp.standard_generators), Ancestor::Fermat);
  CHECK(c1.descendant);
  CHECK(c1.core_scalar == CycloElem(1));
  for (const auto& s : c1.generator_scalars) CHECK(s.has_value());

  auto fpp = make_family(Family::Fdoubleprime, 8, CycloElem(1));
  CHECK(descendant_check(fpp.form, closure(fpp.standard_generators), Ancestor::Fermat).descendant);

  auto hs = make_family(Family::Hessian6, 6);
  auto c3 = descendant_check(hs.form, closure(hs.standard_generators), Ancestor::Fermat);
  CHECK_FALSE(c3.descendant);
  CHECK_FALSE(c3.reason.empty());

  auto k5 = make_family(Family::Klein, 5);
  CHECK(descendant_check(k5.form, closure(k5.standard_generators), Ancestor::Klein).descendant);
  CHECK_FALSE(descendant_check(k5.form, closure(k5.standard_generators), Ancestor::Fermat).descendant);
}

TEST_CASE("Fermat rigidity") {
  // A term X^i Y^j Z^k survives eta_t = [.., zeta_d x_t, ..] iff d | (t-th
  // exponent). Solving the invariance constraints of any two of the three
  // eta's over all monomials of degree d leaves only X^d, Y^d, Z^d, so a form
  // with Fermat core preserved by both is the Fermat polynomial.
  for (int d = 4; d <= 8; ++d) {
    const CycloElem z = CycloElem::zeta(d);
    const std::array<Matrix3, 3> eta = {diag3(z, 1, 1), diag3(1, z, 1), diag3(1, 1, z)};
    for (int s = 0; s < 3; ++s)
      for (int t = s + 1; t < 3; ++t) {
        std::vector<Exponent> survivors;
        for (int i = 0; i <= d; ++i)
          for (int j = 0; i + j <= d; ++j) {
            const Exponent e = {i, j, d - i - j};
            const TernaryForm m = mono(e[0], e[1], e[2]);
            const bool lib = transform_action(m, eta[static_cast<std::size_t>(s)]) == m &&
                             transform_action(m, eta[static_cast<std::size_t>(t)]) == m;
            const bool arith = e[static_cast<std::size_t>(s)] % d == 0 && e[static_cast<std::size_t>(t)] % d == 0;
            CHECK(lib == arith);
            if (lib) survivors.push_back(e);
          }
        CHECK(survivors == std::vector<Exponent>{{0, 0, d}, {0, d, 0}, {d, 0, 0}});
        // The remaining eta then preserves the form as well.
        TernaryForm f(d);
        for (const auto& e : survivors) f += mono(e[0], e[1], e[2]);
        CHECK(preserves_up_to_scalar(f, eta[static_cast<std::size_t>(3 - s - t)]) == CycloElem(1));
      }
  }
}
