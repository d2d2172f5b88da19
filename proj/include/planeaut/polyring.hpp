#pragma once

// Homogeneous ternary forms over cyclotomic fields and the geometry of the
// plane curves they define.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeaut/cyclo.hpp"
#include "planeaut/projective.hpp"
#include "planeaut/upoly.hpp"

namespace planeaut {

/// Exponent triple (i, j, k) of X^i Y^j Z^k.
using Exponent = std::array<int, 3>;

/// exponent(cX^iY^jZ^k) = max{i, j, k}.
inline int monomial_exponent(const Exponent& e) { return std::max({e[0], e[1], e[2]}); }

class TernaryForm {
 public:
  /// Zero form of degree d.
  explicit TernaryForm(int degree = 0);

  /// Sums the given terms; throws DomainError if a triple does not sum to degree.
  static TernaryForm from_terms(int degree, const std::vector<std::pair<Exponent, CycloElem>>& terms);
  static TernaryForm monomial(const Exponent& e, const CycloElem& c = CycloElem(1));
  /// aX + bY + cZ.
  static TernaryForm linear(const CycloElem& a, const CycloElem& b, const CycloElem& c);

  int degree() const { return degree_; }
  /// lcm of the coefficient conductors (1 for the zero form).
  long conductor() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, CycloElem>& terms() const { return terms_; }
  CycloElem coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const CycloElem& c);

  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const CycloElem& s, const TernaryForm& a);
  /// Equality after embedding into a common field.
  friend bool operator==(const TernaryForm& a, const TernaryForm& b);

  TernaryForm pow(int e) const;
  /// Partial derivative with respect to variable 0 (X), 1 (Y) or 2 (Z).
  TernaryForm partial(int var) const;
  TernaryForm embed_to(long N) const;
  /// F(L0, L1, L2) for linear forms L0, L1, L2.
  TernaryForm substitute(const std::array<TernaryForm, 3>& images) const;

  CycloElem evaluate(const std::array<CycloElem, 3>& x) const;

  /// Human-readable, e.g. "X^4 + Y^4 + Z^4".
  std::string to_string() const;

 private:
  int degree_;
  std::map<Exponent, CycloElem> terms_;
};

/// Binary form sum_i c_i s^(d-i) t^i.
struct BinaryForm {
  int degree = 0;
  std::vector<CycloElem> coeffs;  // size degree + 1

  bool is_zero() const;
  /// Dehomogenization u = t / s.
  UPoly dehomogenize() const;
  std::string to_string() const;
};

CycloElem evaluate(const TernaryForm& f, const ProjPoint& p);
bool lies_on(const TernaryForm& f, const ProjPoint& p);

/// F^M = F composed with M^{-1}, computed for the given matrix representative.
/// Throws DomainError if M is singular.
TernaryForm transform_action(const TernaryForm& f, const Matrix3& m);
TernaryForm transform_action(const TernaryForm& f, const ProjTransform& m);

/// c with F^M = c F, if it exists (for the given representative of M).
std::optional<CycloElem> preserves_up_to_scalar(const TernaryForm& f, const Matrix3& m);
std::optional<CycloElem> preserves_up_to_scalar(const TernaryForm& f, const ProjTransform& m);

/// b with a = b * c, if it exists.
std::optional<CycloElem> proportional(const TernaryForm& a, const TernaryForm& b);

struct CoreSplit {
  TernaryForm core;
  TernaryForm low;
  int exponent = 0;  // exponent of the core terms
};

/// core = terms of maximal exponent, low = the rest. Throws on the zero form.
CoreSplit core_decomposition(const TernaryForm& f);

/// (d-1)(d-2)/2.
long genus(long d);

/// The two points spanning L used by restrict_to_line: with p the index of
/// the first nonzero dual coordinate (scaled to 1) and q < r the others,
/// B1 = e_q - L_q e_p and B2 = e_r - L_r e_p.
std::array<std::array<CycloElem, 3>, 2> line_basis(const ProjLine& line);
/// Parameter (s : t) of a point of L with respect to line_basis.
std::array<CycloElem, 2> line_parameter(const ProjLine& line, const ProjPoint& p);

/// F(s B1 + t B2). Zero exactly when L lies on the curve.
BinaryForm restrict_to_line(const TernaryForm& f, const ProjLine& line);

/// i_P(C, L). Throws DomainError if L lies on the curve or P is not on L.
int intersection_multiplicity(const TernaryForm& f, const ProjLine& line, const ProjPoint& p);

/// Throws DomainError if P is not on the curve or P is singular.
ProjLine tangent_line(const TernaryForm& f, const ProjPoint& p);

/// |C ∩ L|. Throws DomainError if L lies on the curve.
int line_meet_count(const TernaryForm& f, const ProjLine& line);

struct SmoothnessVerdict {
  bool smooth = true;
  /// Singular point, when the witness search found one.
  std::optional<ProjPoint> witness;
  /// Singular but no witness coordinates could be produced.
  bool non_constructive = false;
};

/// Decides whether the partial derivatives of F have a common projective
/// zero. Requires degree >= 2.
SmoothnessVerdict is_smooth(const TernaryForm& f);

/// Exhaustive check of the partials on a finite list of points; returns the
/// first common zero. Used as an independent oracle.
std::optional<ProjPoint> find_singular_point(const TernaryForm& f, const std::vector<ProjPoint>& candidates);

}  // namespace planeaut
