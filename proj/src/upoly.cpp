#include "planeaut/upoly.hpp"

#include <sstream>
#include <unordered_set>

#include "planeaut/errors.hpp"
#include "qpoly.hpp"

namespace planeaut {

UPoly::UPoly(std::vector<CycloElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloElem UPoly::operator()(const CycloElem& x) const {
  CycloElem s;
  for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
  return s;
}

UPoly UPoly::derivative() const {
  std::vector<CycloElem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * CycloElem(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<CycloElem> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<CycloElem> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CycloElem> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const CycloElem& s, const UPoly& a) {
  std::vector<CycloElem> r;
  r.reserve(a.c_.size());
  for (const auto& c : a.c_) r.push_back(s * c);
  return UPoly(std::move(r));
}

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<CycloElem> rem = a.c_;
  const int db = b.degree();
  const int da = a.degree();
  std::vector<CycloElem> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  CycloElem lead_inv = b.leading().inverse();
  for (int i = da; i >= db; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rem[ui].is_zero()) continue;
    CycloElem c = rem[ui] * lead_inv;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  if (db >= 0) rem.resize(std::min(rem.size(), static_cast<std::size_t>(db)));
  q = UPoly(std::move(quot));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

int UPoly::root_multiplicity(const CycloElem& root) const {
  if (is_zero()) throw DomainError("root multiplicity of the zero polynomial");
  UPoly p = *this;
  int m = 0;
  for (;;) {
    // synthetic division by (x - root)
    std::vector<CycloElem> q(p.c_.size() > 0 ? p.c_.size() - 1 : 0);
    CycloElem carry;
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      CycloElem v = p.c_[i] + carry * root;
      if (i == 0) {
        if (!v.is_zero()) return m;
      } else {
        q[i - 1] = v;
      }
      carry = v;
    }
    ++m;
    p = UPoly(std::move(q));
    if (p.is_zero()) return m;
  }
}

int UPoly::squarefree_degree() const {
  if (is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (degree() <= 0) return 0;
  return degree() - gcd(*this, derivative()).degree();
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[i].to_string() << ")";
    if (i > 0) out << "*" << var << "^" << i;
  }
  return out.str();
}

std::vector<CycloElem> cyclotomic_roots(const UPoly& p, long N) {
  if (p.is_zero()) throw DomainError("cyclotomic_roots of the zero polynomial");
  long L = N;
  for (const auto& c : p.coeffs()) L = lcm_long(L, c.conductor());
  std::vector<CycloElem> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(c.embed_to(L));

  std::vector<CycloElem> roots;
  std::unordered_set<CycloElem, CycloElemHash> seen;
  auto add = [&](CycloElem r) {
    r = r.embed_to(L);
    if (seen.insert(r).second) roots.push_back(r);
  };
  if (coeffs.front().is_zero()) add(CycloElem(0));

  const std::size_t phi = static_cast<std::size_t>(euler_phi(L));
  for (long j = 0; j < N; ++j) {
    CycloElem w = CycloElem::zeta(N, j).embed_to(L);
    // p(w t) = sum_i (p_i w^i) t^i, split by the power basis of Q(zeta_L)
    std::vector<qpoly::Poly> parts(phi, qpoly::Poly(coeffs.size(), 0));
    CycloElem wi = CycloElem::rational(1, L);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      CycloElem term = coeffs[i] * wi;
      auto cs = term.coeffs();
      for (std::size_t k = 0; k < phi; ++k) parts[k][i] = cs[k];
      wi *= w;
    }
    qpoly::Poly g;
    for (auto& part : parts) {
      qpoly::trim(part);
      g = qpoly::gcd(g, part);
      if (qpoly::degree(g) == 0) break;
    }
    if (qpoly::degree(g) <= 0) continue;
    auto rs = qpoly::rational_roots(g);
    if (!rs) continue;
    for (const auto& r : *rs) {
      if (r == 0) continue;
      add(CycloElem::rational(r, L) * w);
    }
  }
  return roots;
}

}  // namespace planeaut
