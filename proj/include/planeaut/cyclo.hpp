#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of Q(zeta_n) is stored as its coordinate vector in the power
// basis 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic
// polynomial. Binary operations on elements of different conductors embed
// both operands into Q(zeta_lcm) first.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace planeaut {

using Rational = mpq_class;
using Integer = mpz_class;

long euler_phi(long n);
long lcm_long(long a, long b);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);

class CycloElem {
 public:
  /// Zero of Q.
  CycloElem();
  CycloElem(long value);  // NOLINT(google-explicit-constructor)
  CycloElem(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// q viewed as an element of Q(zeta_n).
  static CycloElem rational(const Rational& q, long n = 1);
  /// zeta_n^k, with k taken modulo n.
  static CycloElem zeta(long n, long k = 1);
  /// Builds sum coeffs[i] * zeta_n^i; coeffs may be longer than phi(n).
  static CycloElem from_powers(long n, std::span<const Rational> coeffs);

  long conductor() const noexcept { return n_; }
  /// Coordinates in the reduced power basis, length phi(conductor).
  std::span<const Rational> coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// Image under Q(zeta_n) -> Q(zeta_N), zeta_n -> zeta_N^(N/n).
  CycloElem embed_to(long N) const;

  CycloElem inverse() const;
  CycloElem pow(long e) const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator/=(const CycloElem& o);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b);
  CycloElem operator-() const;

  /// Equality in the common field Q(zeta_lcm).
  friend bool operator==(const CycloElem& a, const CycloElem& b);

  /// Consistent with == only between elements of the same conductor.
  std::size_t hash() const;

  /// Scalar syntax, e.g. "1/2*z^3 - z + 2" (z denotes zeta_conductor).
  std::string to_string() const;

  /// Complex approximation, for diagnostics only.
  double real_approx() const;
  double imag_approx() const;

 private:
  CycloElem(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  friend class CycloField;

  long n_;
  std::vector<Rational> c_;
};

/// Smallest k in [1, 2n] with x^k = 1, n the conductor of x; empty if none.
std::optional<long> root_of_unity_order(const CycloElem& x);

/// Exponent e with x = zeta_W^e, W the number of roots of unity in
/// Q(zeta_conductor) (W = n for even n, 2n for odd n). Empty if x is not a
/// root of unity.
std::optional<std::pair<long, long>> root_of_unity_exponent(const CycloElem& x);

/// (q, e) with x = q * zeta_W^e, q rational and W as above; empty if x is not
/// of that form (or zero).
std::optional<std::pair<Rational, long>> split_root_of_unity(const CycloElem& x);

/// Square root of a rational inside a cyclotomic field, built from quadratic
/// Gauss sums. For q < 0 the result is i times the root of -q.
CycloElem sqrt_rational(const Rational& q);

/// Parses the scalar syntax (`3/2`, `z`, `^`, `+ - *`, parentheses) with z
/// standing for zeta_conductor. Throws ParseError.
CycloElem parse_scalar(std::string_view text, long conductor);

struct CycloElemHash {
  std::size_t operator()(const CycloElem& x) const { return x.hash(); }
};

}  // namespace planeaut
