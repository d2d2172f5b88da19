#pragma once

// The five-case classification of a finite group acting on a smooth plane
// curve, and the audits of the order bounds over the named families.

#include <map>
#include <string>
#include <vector>

#include "planeaut/bounds.hpp"
#include "planeaut/curves.hpp"
#include "planeaut/polyring.hpp"
#include "planeaut/projgroup.hpp"

namespace planeaut {

struct VerifiedGroup {
  MatrixGroup3 group;
  /// c_i with F^(g_i) = c_i F for the canonical representative of g_i.
  std::vector<CycloElem> scalars;
};

/// Checks that F is smooth of degree >= 4 and that every generator preserves
/// F up to scalar, then closes the generators. Throws DomainError for a
/// singular or low-degree curve and VerificationError naming the first
/// offending generator.
VerifiedGroup verify_action(const TernaryForm& f, const std::vector<ProjTransform>& gens,
                            long cap = default_closure_cap());

struct BoundAudit {
  std::string case_label;
  long degree = 0;
  long bound = 0;
  long order = 0;
  bool passed = false;

  friend bool operator==(const BoundAudit&, const BoundAudit&) = default;
};

/// Plain data, so that reports serialize and compare exactly.
struct ClassificationReport {
  long order = 0;
  long degree = 0;
  /// Applicable cases in the fixed order a-i, a-ii, b-i, b-ii, c.
  std::vector<std::string> cases;
  std::string primary;
  /// Keys are prefixed by the case, e.g. "a-ii.m" or "b-i.basis".
  std::map<std::string, std::string> witnesses;
  std::vector<BoundAudit> bounds;
  /// "<check>: ok" or "<check>: FAILED" for the reported cases, and
  /// "<check>: not satisfied (<case> applies)" for a case whose hypothesis
  /// holds but whose conclusions fail while another case holds.
  std::vector<std::string> flags;
  /// Some case holds: no failed flag and every bound audit passed.
  bool consistent = true;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Decides which cases apply to (F, G), with witnesses and bound audits.
/// Throws VerificationError if G does not act on F, or if no case applies or
/// the primitive branch meets a group outside the primitive list.
ClassificationReport classify(const TernaryForm& f, const MatrixGroup3& g);

struct AuditEntry {
  std::string family;
  std::string parameter;
  long degree = 0;
  /// Order of the closure of the standard generators (0 if not computed).
  long closure_order = 0;
  /// Order stated for the family, or the formula value.
  long recorded_order = 0;
  long threshold = 0;
  bool exceeds = false;
  bool passed = true;
  std::string note;

  friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

struct AuditReport {
  std::string name;
  long degree = 0;
  long threshold = 0;
  std::vector<AuditEntry> entries;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Every named family that exists in degree d (Fprime with lambda = 2,
/// Fdoubleprime with lambda = 1).
std::vector<CurveFamilyInstance> theorem2_instances(int d);

/// |Aut(C)| <= 6d^2 except the Klein quartic (168) and the Wiman sextic
/// (360); equality only for Fermat, and at d = 6 also the Hessian sextic.
AuditReport theorem2_audit(int d, const std::vector<CurveFamilyInstance>& instances, long cap = default_closure_cap());

/// The exceptional orders 6d^2, 3(d^2-3d+3), 2d(d-2), 2d^2 (3 | d) and
/// (3/2)d^2 (2 | d) against d^2; for d <= 8 the orders are also checked by
/// closure.
AuditReport theorem3_audit(long d, long cap = default_closure_cap());

}  // namespace planeaut
