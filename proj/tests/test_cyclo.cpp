#include <complex>
#include <random>

#include "doctest.h"
#include "planeaut/cyclo.hpp"
#include "planeaut/errors.hpp"

using namespace planeaut;

namespace {

// Numeric image of x under zeta_n -> exp(2 pi i / n), computed from the
// stored coordinates only.
std::complex<double> numeric(const CycloElem& x) {
  const double pi = std::acos(-1.0);
  std::complex<double> s = 0;
  const auto c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    s += c[i].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(i) / static_cast<double>(x.conductor()));
  return s;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

// Dense polynomials over Q, constant term first.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    QPoly t(shift, Rational(0));
    for (const auto& x : b) t.push_back(c * x);
    a = sub(a, t);
  }
  trim(q);
  return {q, a};
}

// Inverse of a modulo m by the extended Euclidean algorithm.
QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = r1, r1 = r, s0 = s1, s1 = s;
  }
  for (auto& c : s1) c /= r1[0];
  return divmod(s1, m).second;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(13) == 12);
  const auto& p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(p12.size() == 5);
  CHECK(p12[0] == 1);
  CHECK(p12[2] == -1);
  CHECK(p12[4] == 1);
  CHECK(cyclotomic_polynomial(5) == std::vector<Integer>(5, Integer(1)));
}

TEST_CASE("basic identities") {
  CHECK(CycloElem::zeta(3) + CycloElem::zeta(3, 2) == CycloElem(-1));
  CHECK(CycloElem::zeta(4) * CycloElem::zeta(4) == CycloElem(-1));
  CHECK(CycloElem::zeta(6, 3) == CycloElem(-1));
  CHECK(CycloElem::zeta(7, 8) == CycloElem::zeta(7, 1));
  CHECK(CycloElem::zeta(7, -1) == CycloElem::zeta(7, 6));
  CHECK(CycloElem::zeta(3).coeffs().size() == 2);
  CHECK(CycloElem::zeta(3).coeffs()[1] == 1);
}

TEST_CASE("inverse of 1 + zeta_5 against extended Euclid") {
  const CycloElem a = CycloElem(1) + CycloElem::zeta(5);
  const CycloElem v = a.inverse();
  CHECK((a * v).is_one());
  QPoly phi5(5, Rational(1));
  const QPoly want = inverse_mod({Rational(1), Rational(1)}, phi5);
  const CycloElem v5 = v.embed_to(5);
  const auto got = v5.coeffs();
  REQUIRE(got.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational expected = i < want.size() ? want[i] : Rational(0);
    CHECK(got[i] == expected);
  }
}

TEST_CASE("embedding") {
  CHECK(CycloElem::zeta(3).embed_to(6) == CycloElem::zeta(6, 2));
  CHECK(CycloElem::zeta(6, 2).conductor() == 6);
  CHECK(CycloElem::rational(-1, 2).embed_to(8) == CycloElem(-1));
  CHECK((CycloElem::zeta(5) + 1).embed_to(10) == CycloElem::zeta(10, 2) + 1);
  CHECK_THROWS_AS(CycloElem::zeta(3).embed_to(4), DomainError);
  // Mixed conductors meet in the lcm field.
  const CycloElem s = CycloElem::zeta(3) * CycloElem::zeta(4);
  CHECK(s == CycloElem::zeta(12, 7));
  CHECK(close(numeric(s), numeric(CycloElem::zeta(12, 7))));
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity_order(CycloElem::zeta(12, 3)) == 4);
  CHECK_FALSE(root_of_unity_order(CycloElem(2)).has_value());
  CHECK_FALSE(root_of_unity_order(CycloElem(0)).has_value());
  CHECK(root_of_unity_order(CycloElem(1)) == 1);
  CHECK(root_of_unity_order(CycloElem(-1)) == 2);
  // Brute-force oracle for -zeta_5.
  const CycloElem x = -CycloElem::zeta(5);
  long k = 1;
  for (CycloElem p = x; !p.is_one(); p *= x) ++k;
  CHECK(k == 10);
  CHECK(root_of_unity_order(x) == k);

  auto e = root_of_unity_exponent(x);
  REQUIRE(e.has_value());
  CHECK(CycloElem::zeta(e->second, e->first) == x);

  auto s = split_root_of_unity(CycloElem(3) * CycloElem::zeta(7, 2));
  REQUIRE(s.has_value());
  CHECK(s->first == 3);
  CHECK(CycloElem(s->first) * CycloElem::zeta(14, s->second) == CycloElem(3) * CycloElem::zeta(7, 2));
  CHECK_FALSE(split_root_of_unity(CycloElem(1) + CycloElem::zeta(5)).has_value());
}

TEST_CASE("square roots of rationals") {
  for (long q : {2L, 3L, 5L, 7L, -1L, -3L, 12L, -20L}) {
    const CycloElem r = sqrt_rational(q);
    CHECK(r * r == CycloElem(q));
  }
  CHECK(sqrt_rational(Rational(9, 4)) * sqrt_rational(Rational(9, 4)) == CycloElem(Rational(9, 4)));
  // Square factors split between numerator and denominator.
  CHECK(sqrt_rational(Rational(1, 4)) == CycloElem(Rational(1, 2)));
  for (const Rational& q : {Rational(1, 8), Rational(3, 16), Rational(-5, 36), Rational(2, 9)}) {
    const CycloElem r = sqrt_rational(q);
    CHECK(r * r == CycloElem(q));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(CycloElem(0).inverse(), DomainError);
  CHECK_THROWS_AS(CycloElem::zeta(5) / CycloElem(0), DomainError);
  CHECK_THROWS_AS(CycloElem(0).pow(-1), DomainError);
  CHECK_THROWS_AS(CycloElem::zeta(0), DomainError);
}

TEST_CASE("scalar syntax") {
  CHECK(parse_scalar("z^3 + 1", 12) == CycloElem::zeta(12, 3) + 1);
  CHECK(parse_scalar("-3/2*(z - 1)", 5) == CycloElem(Rational(-3, 2)) * (CycloElem::zeta(5) - 1));
  CHECK(parse_scalar("2", 1) == CycloElem(2));
  CHECK_THROWS_AS(parse_scalar("z +", 3), ParseError);
  CHECK_THROWS_AS(parse_scalar("(z", 3), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", 3), Error);
  for (const CycloElem& x : {CycloElem::zeta(12, 5) * Rational(2, 3) - 1, CycloElem(Rational(-7, 3)), CycloElem::zeta(9, 4)})
    CHECK(parse_scalar(x.to_string(), x.conductor()) == x);
}

TEST_CASE("field axioms against the numeric oracle") {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> pick(0, 6);
  const long conductors[] = {1, 3, 4, 5, 7, 8, 12};
  auto random_elem = [&]() {
    const long n = conductors[pick(rng)];
    std::vector<Rational> c;
    for (long i = 0; i < n; ++i) c.emplace_back(coef(rng), 1 + (coef(rng) + 4) % 3);
    return CycloElem::from_powers(n, c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const CycloElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
    CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(close(numeric(a.inverse()), 1.0 / numeric(a)));
    }
    CHECK(a.hash() == CycloElem::from_powers(a.conductor(), std::vector<Rational>(a.coeffs().begin(), a.coeffs().end())).hash());
  }
}
