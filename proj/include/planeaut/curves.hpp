#pragma once

// Named curve families with their standard generator sets, Galois-point
// tests and descendant checks.

#include <optional>
#include <string>
#include <vector>

#include "planeaut/polyring.hpp"
#include "planeaut/projgroup.hpp"

namespace planeaut {

enum class Family {
  Fermat,        // X^d + Y^d + Z^d
  Klein,         // XY^(d-1) + YZ^(d-1) + ZX^(d-1)
  Fdd1,          // YZ^(d-1) + X^d + Y^d
  Dcurve,        // Z^d + XY(X^(d-2) + Y^(d-2))
  Fprime,        // X^3m + Y^3m + Z^3m - 3 l X^m Y^m Z^m
  Fdoubleprime,  // X^2m + Y^2m + Z^2m + l (X^m Y^m + Y^m Z^m + Z^m X^m)
  Wiman6,
  Hessian6,      // X^6 + Y^6 + Z^6 - 10 (X^3Y^3 + Y^3Z^3 + Z^3X^3)
  KleinQuartic,
};

/// "Fermat", "Klein", "F_dd1", "Dcurve", "Fprime", "Fdoubleprime", "Wiman6",
/// "Hessian6", "KleinQuartic".
std::string family_name(Family f);
/// Accepts the names above case-insensitively, plus the CLI spellings
/// fdd1, dcurve, fprime, fdoubleprime, wiman, hessian, kleinquartic.
std::optional<Family> parse_family(const std::string& name);
bool family_takes_lambda(Family f);

struct CurveFamilyInstance {
  Family label = Family::Fermat;
  int degree = 0;
  std::optional<CycloElem> lambda;
  TernaryForm form;
  std::vector<ProjTransform> standard_generators;
  /// |Aut(C)| as stated for the family.
  std::optional<long> expected_order;
  /// Order of the group the standard generators are known to generate; 0
  /// when there are no generators.
  long generated_order = 0;
  /// The generators span a proper subgroup of Aut(C), or none at all.
  bool partial = false;
  std::vector<std::string> notes;
};

/// Defining form, without any validity check beyond the degree pattern.
TernaryForm family_form(Family f, int d, const std::optional<CycloElem>& lambda = std::nullopt);
std::vector<ProjTransform> family_generators(Family f, int d);

/// Builds an instance: checks the parameter range and the exclusion list of
/// lambda, verifies smoothness and that every generator preserves the form.
/// Throws DomainError naming the violated condition (with a singular point
/// when one is known).
CurveFamilyInstance make_family(Family f, int d, const std::optional<CycloElem>& lambda = std::nullopt);

enum class GaloisVerdict { Inner, Outer, None };
std::string to_string(GaloisVerdict v);

struct GaloisReport {
  /// Identity plus the homologies of G centered at P.
  std::vector<ProjTransform> subgroup;
  long order = 1;
  bool on_curve = false;
  GaloisVerdict verdict = GaloisVerdict::None;
};

/// Throws VerificationError if a generator of G does not preserve F.
GaloisReport galois_group_at(const TernaryForm& f, const MatrixGroup3& g, const ProjPoint& p);

enum class Ancestor { Fermat, Klein };

struct DescendantCertificate {
  bool descendant = false;
  /// c with core = c * ancestor.
  std::optional<CycloElem> core_scalar;
  /// Scalar of each generator on the ancestor polynomial (empty when it
  /// does not preserve it).
  std::vector<std::optional<CycloElem>> generator_scalars;
  std::string reason;
};

/// True iff the core of F is the ancestor polynomial up to one global scalar
/// and every generator of G preserves the ancestor polynomial up to scalar.
DescendantCertificate descendant_check(const TernaryForm& f, const MatrixGroup3& g, Ancestor ancestor);

}  // namespace planeaut
