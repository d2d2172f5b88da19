#include "qpoly.hpp"

#include <algorithm>
#include <set>

#include "planeaut/errors.hpp"

namespace planeaut::qpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  int db = degree(b);
  if (db < 0) throw DomainError("polynomial division by zero");
  r = a;
  trim(r);
  int da = degree(r);
  q.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
  mpq_class lead_inv = 1 / b[static_cast<std::size_t>(db)];
  for (int i = da; i >= db; --i) {
    mpq_class c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    c *= lead_inv;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(r);
  trim(q);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  mpq_class lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // invariant: r0 = s0 a mod m, r1 = s1 a mod m
  Poly r0 = m, r1 = a, s0, s1{1};
  trim(r1);
  {
    Poly q, r;
    divmod(r1, m, q, r);
    r1 = r;
  }
  while (degree(r1) > 0) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r1) != 0) throw DomainError("element is not invertible modulo the given polynomial");
  mpq_class c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  Poly q, r;
  divmod(s1, m, q, r);
  return r;
}

namespace {

// Positive divisors of |v|, or nullopt if v is too large for trial division.
std::optional<std::vector<mpz_class>> divisors(mpz_class v) {
  v = abs(v);
  if (v == 0) return std::nullopt;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 48) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class m = v;
  for (mpz_class p = 2; p * p <= m; ++p) {
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k) factors.emplace_back(p, k);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, k] : factors) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

mpq_class eval(const Poly& p, const mpq_class& x) {
  mpq_class s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

}  // namespace

std::optional<std::vector<mpq_class>> rational_roots(Poly p) {
  trim(p);
  std::vector<mpq_class> roots;
  if (p.empty()) return std::nullopt;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  if (p.size() <= 1) return roots;
  // clear denominators
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p) z.push_back(mpz_class(c * l));
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : z) c /= g;
  auto num = divisors(z.front());
  auto den = divisors(z.back());
  if (!num || !den) return std::nullopt;
  std::set<mpq_class> found;
  for (const auto& a : *num) {
    for (const auto& b : *den) {
      for (int sign : {1, -1}) {
        mpq_class x(a * sign, b);
        x.canonicalize();
        if (found.count(x)) continue;
        if (eval(p, x) == 0) found.insert(x);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace planeaut::qpoly
