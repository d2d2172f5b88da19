#pragma once

// Univariate polynomials with cyclotomic coefficients.

#include <vector>

#include "planeaut/cyclo.hpp"

namespace planeaut {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<CycloElem> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycloElem>& coeffs() const { return c_; }
  const CycloElem& operator[](std::size_t i) const { return c_[i]; }
  const CycloElem& leading() const { return c_.back(); }

  CycloElem operator()(const CycloElem& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const CycloElem& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);

  /// a = q b + r with deg r < deg b. Throws DomainError if b is zero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd (zero if both inputs are zero).
  static UPoly gcd(const UPoly& a, const UPoly& b);

  /// Largest m with (x - root)^m dividing this polynomial. Throws on zero.
  int root_multiplicity(const CycloElem& root) const;
  /// Degree of the squarefree part p / gcd(p, p').
  int squarefree_degree() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<CycloElem> c_;
};

/// Roots of p of the form r * zeta_N^j with r rational (0 included). The
/// search is exact; it may miss roots whose rational parts are too large for
/// the rational root theorem enumeration. p must be nonzero.
std::vector<CycloElem> cyclotomic_roots(const UPoly& p, long N);

}  // namespace planeaut
