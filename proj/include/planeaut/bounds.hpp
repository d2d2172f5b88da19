#pragma once

// Genus bounds on automorphism groups and the per-case bounds of the
// classification.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeaut/cyclo.hpp"

namespace planeaut {

struct BoundReport {
  std::string name;  // "hurwitz", "oikawa", "arakawa" or "case"
  std::vector<std::pair<std::string, std::string>> inputs;
  Rational value;
  /// Hurwitz only: admissible values of |G|/(g-1) above 24, followed by 24
  /// itself, which stands for every ratio at most 24.
  std::vector<Rational> allowed_ratios;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// 84(g-1) and the ratio list 84, 48, 40, 36, 30, 132/5, 24. Requires g >= 2.
BoundReport hurwitz(long g);
/// Group orders n with n/(g-1) in the Hurwitz ratio list (ratios at most
/// 24 are not enumerated).
std::vector<long> hurwitz_admissible_orders(long g);
/// Whether the ratio n/(g-1) is one of the listed values or at most 24.
bool hurwitz_admits(long g, long order);

/// 12(g-1) + 6k for a G-invariant set of k points. Requires g >= 2, k >= 1.
long oikawa(long g, long k);
/// 2(g-1) + k1 + k2 + k3 for three disjoint invariant sets.
long arakawa(long g, long k1, long k2, long k3);
BoundReport oikawa_report(long g, long k);
BoundReport arakawa_report(long g, long k1, long k2, long k3);

enum class CaseLabel { AI, AII, BI, BII, C };

/// "a-i", "a-ii", "b-i", "b-ii", "c".
std::string to_string(CaseLabel c);
std::optional<CaseLabel> parse_case(const std::string& s);

/// a-i: d(d-1); a-ii: max{2d(d-2), 60d}; b-i: 6d^2; b-ii: 3(d^2-3d+3), or
/// 168 at d = 4; c: 360. Requires d >= 4.
long case_bound(CaseLabel c, long d);
BoundReport case_bound_report(CaseLabel c, long d);

}  // namespace planeaut
