#include "planeaut/bounds.hpp"

#include <algorithm>

#include "planeaut/errors.hpp"

namespace planeaut {

namespace {

const std::vector<Rational>& ratio_list() {
  static const std::vector<Rational> r = {Rational(84), Rational(48), Rational(40), Rational(36),
                                          Rational(30), Rational(132, 5), Rational(24)};
  return r;
}

void require_genus(long g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + std::to_string(g));
}

void require_positive(const char* name, long k) {
  if (k < 1) throw DomainError(std::string(name) + " must be at least 1, got " + std::to_string(k));
}

}  // namespace

BoundReport hurwitz(long g) {
  require_genus(g);
  BoundReport r;
  r.name = "hurwitz";
  r.inputs = {{"g", std::to_string(g)}};
  r.value = Rational(84 * (g - 1));
  r.allowed_ratios = ratio_list();
  return r;
}

std::vector<long> hurwitz_admissible_orders(long g) {
  require_genus(g);
  std::vector<long> out;
  for (const auto& q : ratio_list()) {
    if (q == 24) break;
    Rational n = q * (g - 1);
    if (n.get_den() == 1) out.push_back(n.get_num().get_si());
  }
  return out;
}

bool hurwitz_admits(long g, long order) {
  require_genus(g);
  Rational q(order, g - 1);
  q.canonicalize();
  if (q <= 24) return true;
  const auto& r = ratio_list();
  return std::find(r.begin(), r.end(), q) != r.end();
}

long oikawa(long g, long k) {
  require_genus(g);
  require_positive("k", k);
  return 12 * (g - 1) + 6 * k;
}

long arakawa(long g, long k1, long k2, long k3) {
  require_genus(g);
  require_positive("k1", k1);
  require_positive("k2", k2);
  require_positive("k3", k3);
  return 2 * (g - 1) + k1 + k2 + k3;
}

BoundReport oikawa_report(long g, long k) {
  BoundReport r;
  r.name = "oikawa";
  r.value = Rational(oikawa(g, k));
  r.inputs = {{"g", std::to_string(g)}, {"k", std::to_string(k)}};
  return r;
}

BoundReport arakawa_report(long g, long k1, long k2, long k3) {
  BoundReport r;
  r.name = "arakawa";
  r.value = Rational(arakawa(g, k1, k2, k3));
  r.inputs = {{"g", std::to_string(g)}, {"k1", std::to_string(k1)}, {"k2", std::to_string(k2)},
              {"k3", std::to_string(k3)}};
  return r;
}

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::AI: return "a-i";
    case CaseLabel::AII: return "a-ii";
    case CaseLabel::BI: return "b-i";
    case CaseLabel::BII: return "b-ii";
    case CaseLabel::C: return "c";
  }
  return "";
}

std::optional<CaseLabel> parse_case(const std::string& s) {
  for (CaseLabel c : {CaseLabel::AI, CaseLabel::AII, CaseLabel::BI, CaseLabel::BII, CaseLabel::C})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

long case_bound(CaseLabel c, long d) {
  if (d < 4) throw DomainError("case bounds need d >= 4, got " + std::to_string(d));
  switch (c) {
    case CaseLabel::AI: return d * (d - 1);
    case CaseLabel::AII: return std::max(2 * d * (d - 2), 60 * d);
    case CaseLabel::BI: return 6 * d * d;
    case CaseLabel::BII: return d == 4 ? 168 : 3 * (d * d - 3 * d + 3);
    case CaseLabel::C: return 360;
  }
  throw DomainError("unknown case label");
}

BoundReport case_bound_report(CaseLabel c, long d) {
  BoundReport r;
  r.name = "case";
  r.value = Rational(case_bound(c, d));
  r.inputs = {{"case", to_string(c)}, {"d", std::to_string(d)}};
  return r;
}

}  // namespace planeaut
