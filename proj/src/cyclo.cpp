#include "planeaut/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "planeaut/errors.hpp"
#include "qpoly.hpp"

namespace planeaut {

long euler_phi(long n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

std::mutex g_phi_mutex;
std::map<long, std::vector<Integer>> g_phi_cache;

std::vector<Integer> compute_cyclotomic(long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    // exact division by a monic integer polynomial
    std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Integer> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
      Integer q = num[i];
      quot[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  {
    std::lock_guard lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(g_phi_mutex);
  return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

// Per-conductor tables: reduction of z^m for phi <= m < 2 phi - 1 and the
// list of all roots of unity of the field.
class CycloField {
 public:
  static const CycloField& get(long n);

  long n = 1;
  long phi = 1;
  long roots_count = 2;  // W
  std::vector<std::vector<Integer>> reduce;
  std::vector<std::vector<Integer>> roots;  // roots[e] = zeta_W^e
  std::map<std::vector<long>, long> root_index;

  static CycloElem make(long n, std::vector<Rational> c) { return CycloElem(n, std::move(c)); }

 private:
  explicit CycloField(long conductor);
};

namespace {

std::shared_mutex g_field_mutex;
std::map<long, std::unique_ptr<CycloField>> g_fields;

std::optional<std::vector<long>> small_integer_key(std::span<const Rational> c) {
  std::vector<long> key;
  key.reserve(c.size());
  for (const auto& q : c) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    key.push_back(q.get_num().get_si());
  }
  return key;
}

}  // namespace

CycloField::CycloField(long conductor) : n(conductor), phi(euler_phi(conductor)) {
  const auto& cyc = cyclotomic_polynomial(n);
  // z^m mod Phi_n for m = phi .. 2 phi - 2, built by shifting.
  std::vector<Integer> cur(static_cast<std::size_t>(phi), 0);
  auto shift = [&](std::vector<Integer>& v) {
    Integer top = v.back();
    for (std::size_t i = v.size(); i-- > 1;) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= top * cyc[i];
    }
  };
  if (phi >= 1) {
    // cur = z^(phi-1)
    cur.back() = 1;
    for (long m = phi; m <= 2 * phi - 2; ++m) {
      shift(cur);
      reduce.push_back(cur);
    }
  }
  roots_count = (n % 2 == 0) ? n : 2 * n;
  std::vector<std::vector<Integer>> powers;  // zeta_n^j, j < n
  std::vector<Integer> p(static_cast<std::size_t>(phi), 0);
  p[0] = 1;
  for (long j = 0; j < n; ++j) {
    powers.push_back(p);
    shift(p);
  }
  roots.resize(static_cast<std::size_t>(roots_count));
  for (long e = 0; e < roots_count; ++e) {
    if (n % 2 == 0) {
      roots[e] = powers[e];
    } else if (e % 2 == 0) {
      roots[e] = powers[e / 2];
    } else {
      auto v = powers[((e + n) / 2) % n];
      for (auto& x : v) x = -x;
      roots[e] = v;
    }
    std::vector<long> key;
    for (const auto& x : roots[e]) key.push_back(x.get_si());
    root_index.emplace(std::move(key), e);
  }
}

const CycloField& CycloField::get(long n) {
  {
    std::shared_lock lock(g_field_mutex);
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return *it->second;
  }
  std::unique_ptr<CycloField> field(new CycloField(n));
  std::unique_lock lock(g_field_mutex);
  auto [it, inserted] = g_fields.emplace(n, std::move(field));
  return *it->second;
}

namespace {

std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  return {v.begin(), v.end()};
}

// Reduces a coefficient vector of arbitrary length modulo Phi_n.
std::vector<Rational> reduce_powers(long n, std::vector<Rational> c) {
  const auto& field = CycloField::get(n);
  const auto phi = static_cast<std::size_t>(field.phi);
  if (c.size() <= phi) {
    c.resize(phi, 0);
    return c;
  }
  if (c.size() <= 2 * phi - 1) {
    std::vector<Rational> out(c.begin(), c.begin() + static_cast<long>(phi));
    for (std::size_t m = phi; m < c.size(); ++m) {
      if (c[m] == 0) continue;
      const auto& r = field.reduce[m - phi];
      for (std::size_t i = 0; i < phi; ++i)
        if (r[i] != 0) out[i] += c[m] * r[i];
    }
    return out;
  }
  // long input: fold z^m = z^(m mod n) first
  std::vector<Rational> folded(static_cast<std::size_t>(n), 0);
  for (std::size_t m = 0; m < c.size(); ++m) folded[m % static_cast<std::size_t>(n)] += c[m];
  if (folded.size() <= 2 * phi - 1) return reduce_powers(n, std::move(folded));
  const auto& cyc = cyclotomic_polynomial(n);
  for (std::size_t i = folded.size(); i-- > phi;) {
    Rational top = folded[i];
    if (top == 0) continue;
    for (std::size_t j = 0; j <= phi; ++j) folded[i - phi + j] -= top * cyc[j];
  }
  folded.resize(phi);
  return folded;
}

void canonicalize_all(std::vector<Rational>& v) {
  for (auto& q : v) q.canonicalize();
}

}  // namespace

CycloElem::CycloElem() : n_(1), c_{Rational(0)} {}
CycloElem::CycloElem(long value) : n_(1), c_{Rational(value)} {}
CycloElem::CycloElem(const Rational& value) : n_(1), c_{value} { c_[0].canonicalize(); }

CycloElem CycloElem::rational(const Rational& q, long n) {
  if (n < 1) throw DomainError("conductor must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)), 0);
  c[0] = q;
  c[0].canonicalize();
  return CycloElem(n, std::move(c));
}

CycloElem CycloElem::zeta(long n, long k) {
  if (n < 1) throw DomainError("zeta: n must be positive");
  const auto& field = CycloField::get(n);
  long kk = ((k % n) + n) % n;
  long e = (n % 2 == 0) ? kk : 2 * kk;
  return CycloElem(n, to_rationals(field.roots[static_cast<std::size_t>(e)]));
}

CycloElem CycloElem::from_powers(long n, std::span<const Rational> coeffs) {
  if (n < 1) throw DomainError("conductor must be positive");
  auto c = reduce_powers(n, std::vector<Rational>(coeffs.begin(), coeffs.end()));
  canonicalize_all(c);
  return CycloElem(n, std::move(c));
}

bool CycloElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycloElem::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycloElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> CycloElem::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

CycloElem CycloElem::embed_to(long N) const {
  if (N < 1 || N % n_ != 0)
    throw DomainError("embed_to: conductor " + std::to_string(n_) + " does not divide " +
                      std::to_string(N));
  if (N == n_) return *this;
  const long step = N / n_;
  std::vector<Rational> powers(static_cast<std::size_t>(step * (static_cast<long>(c_.size()) - 1) + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) powers[i * static_cast<std::size_t>(step)] = c_[i];
  return from_powers(N, powers);
}

namespace {

// Brings two operands to a common conductor.
std::pair<CycloElem, CycloElem> common(const CycloElem& a, const CycloElem& b) {
  long N = lcm_long(a.conductor(), b.conductor());
  return {a.embed_to(N), b.embed_to(N)};
}

}  // namespace

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  auto [a, b] = common(*this, o);
  *this = a;
  return *this += b;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  if (o.n_ == 1) {
    c_[0] -= o.c_[0];
    return *this;
  }
  auto [a, b] = common(*this, o);
  *this = a;
  return *this -= b;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  if (b.n_ == 1 || a.n_ == 1) {
    const CycloElem& s = (b.n_ == 1) ? b : a;
    const CycloElem& v = (b.n_ == 1) ? a : b;
    const Rational& q = s.c_[0];
    std::vector<Rational> c(v.c_.size());
    if (q != 0)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = v.c_[i] * q;
    return CycloElem(v.n_, std::move(c));
  }
  if (a.n_ != b.n_) {
    auto [x, y] = common(a, b);
    return x * y;
  }
  const std::size_t phi = a.c_.size();
  std::vector<Rational> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloElem(a.n_, reduce_powers(a.n_, std::move(prod)));
}

CycloElem& CycloElem::operator*=(const CycloElem& o) { return *this = *this * o; }

CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

CycloElem& CycloElem::operator/=(const CycloElem& o) { return *this = *this / o; }

CycloElem CycloElem::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return CycloElem(n_, std::move(c));
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  auto [x, y] = common(a, b);
  return x.c_ == y.c_;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(n_) + ")");
  if (is_rational()) return rational(1 / c_[0], n_);
  const auto& field = CycloField::get(n_);
  if (auto key = small_integer_key(c_)) {
    auto it = field.root_index.find(*key);
    if (it != field.root_index.end()) {
      long W = field.roots_count;
      long e = (W - it->second) % W;
      return CycloElem(n_, to_rationals(field.roots[static_cast<std::size_t>(e)]));
    }
  }
  // extended Euclid against Phi_n
  qpoly::Poly a(c_.begin(), c_.end());
  const auto& cyc = cyclotomic_polynomial(n_);
  qpoly::Poly m(cyc.begin(), cyc.end());
  auto s = qpoly::inverse_mod(a, m);
  s.resize(static_cast<std::size_t>(field.phi), 0);
  return CycloElem(n_, std::move(s));
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem result = rational(1, n_);
  CycloElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::size_t CycloElem::hash() const {
  std::size_t h = std::hash<long>{}(n_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& q : c_) {
    const auto* num = q.get_num_mpz_t();
    const auto* den = q.get_den_mpz_t();
    mix(static_cast<std::size_t>(num->_mp_size));
    mix(num->_mp_size ? static_cast<std::size_t>(mpz_getlimbn(num, 0)) : 0);
    mix(static_cast<std::size_t>(mpz_getlimbn(den, 0)));
  }
  return h;
}

std::string CycloElem::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) out << "-";
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

double CycloElem::real_approx() const {
  double s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    s += c_[i].get_d() * std::cos(2 * M_PI * static_cast<double>(i) / static_cast<double>(n_));
  return s;
}

double CycloElem::imag_approx() const {
  double s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    s += c_[i].get_d() * std::sin(2 * M_PI * static_cast<double>(i) / static_cast<double>(n_));
  return s;
}

std::optional<std::pair<long, long>> root_of_unity_exponent(const CycloElem& x) {
  const auto& field = CycloField::get(x.conductor());
  auto key = small_integer_key(x.coeffs());
  if (!key) return std::nullopt;
  auto it = field.root_index.find(*key);
  if (it == field.root_index.end()) return std::nullopt;
  return std::make_pair(it->second, field.roots_count);
}

std::optional<std::pair<Rational, long>> split_root_of_unity(const CycloElem& x) {
  if (x.is_zero()) return std::nullopt;
  const auto& field = CycloField::get(x.conductor());
  auto c = x.coeffs();
  std::size_t k = 0;
  while (c[k] == 0) ++k;
  for (long e = 0; e < field.roots_count; ++e) {
    const auto& r = field.roots[static_cast<std::size_t>(e)];
    if (r[k] == 0) continue;
    Rational q = c[k] / Rational(r[k]);
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i) ok = c[i] == q * r[i];
    if (ok) return std::make_pair(q, e);
  }
  return std::nullopt;
}

std::optional<long> root_of_unity_order(const CycloElem& x) {
  auto e = root_of_unity_exponent(x);
  if (!e) return std::nullopt;
  auto [exp, W] = *e;
  return W / std::gcd(exp, W);
}

namespace {

// sqrt(p) for a prime p, as an element of a cyclotomic field.
CycloElem sqrt_prime(long p) {
  if (p == 2) return CycloElem::zeta(8, 1) + CycloElem::zeta(8, 7);
  // quadratic Gauss sum: sqrt((-1)^((p-1)/2) p)
  std::vector<Rational> c(static_cast<std::size_t>(p), 0);
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (long a = 1; a < p; ++a) square[static_cast<std::size_t>(a * a % p)] = true;
  for (long a = 1; a < p; ++a) c[static_cast<std::size_t>(a)] = square[static_cast<std::size_t>(a)] ? 1 : -1;
  CycloElem gauss = CycloElem::from_powers(p, c);
  if (p % 4 == 1) return gauss;
  // gauss = i sqrt(p)
  return -(CycloElem::zeta(4, 1) * gauss);
}

}  // namespace

CycloElem sqrt_rational(const Rational& q) {
  if (q < 0) return CycloElem::zeta(4, 1) * sqrt_rational(-q);
  if (q == 0) return CycloElem(0);
  Integer prod = q.get_num() * q.get_den();
  Integer outside = 1;
  Integer squarefree = 1;
  Integer m = prod;
  for (long p = 2; Integer(p) * p <= m; ++p) {
    if (p > 1000000) throw DomainError("sqrt_rational: argument too large to factor");
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    for (int i = 0; i < k / 2; ++i) outside *= p;
    if (k % 2) squarefree *= p;
  }
  if (m > 1) squarefree *= m;
  Rational scale(outside, q.get_den());
  scale.canonicalize();
  CycloElem root = scale;
  Integer s = squarefree;
  for (long p = 2; s > 1; ++p) {
    if (s % p == 0) {
      if (!s.fits_slong_p()) throw DomainError("sqrt_rational: argument too large");
      root *= sqrt_prime(p);
      s /= p;
    }
    if (Integer(p) * p > s && s > 1) {
      root *= sqrt_prime(s.get_si());
      break;
    }
  }
  return root;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, long n) : text_(text), n_(n) {}

  CycloElem parse() {
    CycloElem v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad scalar expression '" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  CycloElem expr() {
    CycloElem v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  CycloElem term() {
    CycloElem v = factor();
    while (accept('*')) v *= factor();
    return v;
  }

  CycloElem factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    CycloElem base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      Integer e = integer();
      if (!e.fits_slong_p()) fail("exponent too large");
      long k = e.get_si();
      base = base.pow(neg ? -k : k);
    }
    return base;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  CycloElem primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      CycloElem v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (ch == 'z') {
      ++pos_;
      return CycloElem::zeta(n_, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = integer();
      Integer den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return CycloElem::rational(q, n_);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  long n_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloElem parse_scalar(std::string_view text, long conductor) {
  if (conductor < 1) throw ParseError("conductor must be positive");
  CycloElem v = ScalarParser(text, conductor).parse();
  return v.embed_to(lcm_long(v.conductor(), conductor));
}

}  // namespace planeaut
