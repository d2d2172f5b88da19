// Smoothness test for plane curves.
//
// Three forms of degree e = d - 1 in three variables have no common
// projective zero exactly when their ideal contains every form of degree
// 3e - 2 = 3d - 5. We test that by the rank of the multiplication map
// S_{2d-4}^3 -> S_{3d-5}. Full rank modulo a prime certifies full rank in
// characteristic zero; otherwise the witness search below runs, and if it
// finds nothing the rank is recomputed exactly.

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "planeaut/errors.hpp"
#include "planeaut/polyring.hpp"

namespace planeaut {

namespace {

using u64 = std::uint64_t;

std::vector<Exponent> monomials(int degree) {
  std::vector<Exponent> out;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

// index of X^i Y^j Z^k among monomials(i + j + k)
std::size_t monomial_index(const Exponent& e) {
  const int degree = e[0] + e[1] + e[2];
  const int a = degree - e[0];
  return static_cast<std::size_t>(a * (a + 1) / 2 + (a - e[1]));
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 p) {
  if (p < 2) return false;
  for (u64 q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

struct ModularImage {
  u64 p = 0;
  u64 zeta = 0;  // image of zeta_n
};

// Successive primes p = 1 mod n above 2^30 with a chosen primitive n-th root.
ModularImage next_prime(long n, u64 after) {
  u64 p = after + 1;
  const u64 un = static_cast<u64>(n);
  if (p % un != 1) p += (un + 1 - p % un) % un;
  while (!is_prime(p)) p += un;
  auto factors = prime_factors(n);
  for (u64 a = 2;; ++a) {
    u64 g = pow_mod(a, (p - 1) / un, p);
    bool primitive = g != 0;
    for (long q : factors)
      if (pow_mod(g, un / static_cast<u64>(q), p) == 1) primitive = false;
    if (primitive) return {p, g};
  }
}

std::optional<u64> reduce(const CycloElem& x, const ModularImage& img) {
  u64 s = 0, zk = 1;
  for (const auto& c : x.coeffs()) {
    if (c != 0) {
      u64 den = mpz_fdiv_ui(c.get_den().get_mpz_t(), img.p);
      if (den == 0) return std::nullopt;
      u64 num = mpz_fdiv_ui(c.get_num().get_mpz_t(), img.p);
      s = (s + num * pow_mod(den, img.p - 2, img.p) % img.p * zk) % img.p;
    }
    zk = zk * img.zeta % img.p;
  }
  return s;
}

struct Macaulay {
  std::size_t columns = 0;
  // one row per (multiplier, partial): sparse list of (column, coefficient)
  std::vector<std::vector<std::pair<std::size_t, CycloElem>>> rows;
};

Macaulay macaulay(const std::array<TernaryForm, 3>& partials, int d, long n) {
  Macaulay m;
  m.columns = static_cast<std::size_t>((3 * d - 3) * (3 * d - 4) / 2);
  for (const auto& mult : monomials(2 * d - 4)) {
    for (const auto& f : partials) {
      if (f.is_zero()) continue;
      std::vector<std::pair<std::size_t, CycloElem>> row;
      for (const auto& [e, c] : f.terms())
        row.emplace_back(monomial_index({e[0] + mult[0], e[1] + mult[1], e[2] + mult[2]}), c.embed_to(n));
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

std::optional<std::size_t> rank_mod_p(const Macaulay& m, const ModularImage& img) {
  const u64 p = img.p;
  std::vector<std::vector<u64>> a;
  a.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    std::vector<u64> dense(m.columns, 0);
    for (const auto& [col, c] : row) {
      auto v = reduce(c, img);
      if (!v) return std::nullopt;
      dense[col] = *v;
    }
    a.push_back(std::move(dense));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.columns && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    u64 inv = pow_mod(a[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      u64 f = a[r][col] * inv % p;
      for (std::size_t c = col; c < m.columns; ++c)
        if (a[rank][c]) a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const Macaulay& m) {
  std::vector<std::vector<CycloElem>> a;
  for (const auto& row : m.rows) {
    std::vector<CycloElem> dense(m.columns);
    for (const auto& [col, c] : row) dense[col] = c;
    a.push_back(std::move(dense));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.columns && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    CycloElem inv = a[rank][col].inverse();
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      CycloElem f = a[r][col] * inv;
      for (std::size_t c = col; c < m.columns; ++c)
        if (!a[rank][c].is_zero()) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

CycloElem determinant(std::vector<std::vector<CycloElem>> a) {
  const std::size_t n = a.size();
  CycloElem det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return CycloElem(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    CycloElem inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      CycloElem f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Chart Z = 1: f(x0, y, 1) as a polynomial in y.
UPoly y_slice(const TernaryForm& f, const CycloElem& x0) {
  std::vector<CycloElem> c(static_cast<std::size_t>(f.degree()) + 1);
  for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e[1])] += v * x0.pow(e[0]);
  return UPoly(std::move(c));
}

// Res_y(a, b) at x = x0, both taken with formal y-degree e.
CycloElem sylvester_resultant(const UPoly& a, const UPoly& b, int e) {
  const auto size = static_cast<std::size_t>(2 * e);
  std::vector<std::vector<CycloElem>> m(size, std::vector<CycloElem>(size));
  auto coeff = [e](const UPoly& p, int k) {  // coefficient of y^(e - k)
    int idx = e - k;
    return idx <= p.degree() ? p[static_cast<std::size_t>(idx)] : CycloElem(0);
  };
  for (int r = 0; r < e; ++r)
    for (int k = 0; k <= e; ++k) {
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = coeff(a, k);
      m[static_cast<std::size_t>(r + e)][static_cast<std::size_t>(r + k)] = coeff(b, k);
    }
  return determinant(std::move(m));
}

// Polynomial through (i, values[i]), i = 0..size-1, by Newton's scheme.
UPoly interpolate(std::vector<CycloElem> values) {
  const std::size_t n = values.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      values[i] = (values[i] - values[i - 1]) / CycloElem(static_cast<long>(level));
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - i) + values[i]
    UPoly shift({CycloElem(-static_cast<long>(i)), CycloElem(1)});
    result = result * shift + UPoly({values[i]});
  }
  return result;
}

bool is_common_zero(const std::array<TernaryForm, 3>& partials, const std::array<CycloElem, 3>& p) {
  for (const auto& f : partials)
    if (!f.evaluate(p).is_zero()) return false;
  return true;
}

// Prefer the most legible witness: rational coordinates, then coordinates 1.
auto witness_key(const ProjPoint& p) {
  int irrational = 0, non_one = 0;
  for (int i = 0; i < 3; ++i) {
    if (!p[i].is_rational()) ++irrational;
    if (!p[i].is_one()) ++non_one;
  }
  return std::make_tuple(irrational, non_one, p.to_string());
}

class WitnessSearch {
 public:
  WitnessSearch(const std::array<TernaryForm, 3>& partials, int d) : partials_(partials), e_(d - 1) {}

  void run(long N) {
    CycloElem zero(0), one(1);
    add_if_zero({one, zero, zero});
    // line Z = 0, chart Y = 1
    UPoly g;
    for (const auto& f : partials_) {
      std::vector<CycloElem> c(static_cast<std::size_t>(e_) + 1);
      for (const auto& [ex, v] : f.terms())
        if (ex[2] == 0) c[static_cast<std::size_t>(ex[0])] += v;
      g = UPoly::gcd(g, UPoly(std::move(c)));
    }
    if (g.is_zero())
      add_if_zero({zero, one, zero});
    else if (g.degree() > 0)
      for (const auto& u : cyclotomic_roots(g, N)) add_if_zero({u, one, zero});
    // chart Z = 1
    for (const auto& x0 : x_candidates(N)) {
      UPoly h;
      for (const auto& f : partials_) h = UPoly::gcd(h, y_slice(f, x0));
      if (h.is_zero()) {
        add_if_zero({x0, zero, one});
      } else if (h.degree() > 0) {
        for (const auto& y0 : cyclotomic_roots(h, N)) add_if_zero({x0, y0, one});
      }
    }
  }

  std::optional<ProjPoint> best() const {
    if (found_.empty()) return std::nullopt;
    return *std::min_element(found_.begin(), found_.end(),
                             [](const ProjPoint& a, const ProjPoint& b) { return witness_key(a) < witness_key(b); });
  }

 private:
  void add_if_zero(const std::array<CycloElem, 3>& p) {
    if (!is_common_zero(partials_, p)) return;
    ProjPoint q(p);
    if (std::find(found_.begin(), found_.end(), q) == found_.end()) found_.push_back(q);
  }

  std::vector<CycloElem> x_candidates(long N) {
    if (!resultant_done_) {
      resultant_done_ = true;
      const int samples = e_ * e_ + 1;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) {
          if (partials_[a].is_zero() || partials_[b].is_zero()) continue;
          std::vector<CycloElem> values;
          for (int x = 0; x < samples; ++x) {
            CycloElem x0(static_cast<long>(x));
            values.push_back(sylvester_resultant(y_slice(partials_[a], x0), y_slice(partials_[b], x0), e_));
          }
          resultant_gcd_ = UPoly::gcd(resultant_gcd_, interpolate(std::move(values)));
        }
    }
    if (!resultant_gcd_.is_zero()) {
      if (resultant_gcd_.degree() == 0) return {};
      return cyclotomic_roots(resultant_gcd_, N);
    }
    // every resultant vanished: the partials share a component, so sample
    std::vector<CycloElem> xs;
    for (long k = 0; k <= e_ + 1; ++k) xs.emplace_back(k);
    return xs;
  }

  const std::array<TernaryForm, 3>& partials_;
  int e_;
  bool resultant_done_ = false;
  UPoly resultant_gcd_;
  std::vector<ProjPoint> found_;
};

}  // namespace

SmoothnessVerdict is_smooth(const TernaryForm& f) {
  if (f.is_zero()) throw DomainError("is_smooth: zero form");
  const int d = f.degree();
  if (d < 2) throw DomainError("is_smooth: degree must be at least 2");
  const long n = f.conductor();
  std::array<TernaryForm, 3> partials{f.partial(0).embed_to(n), f.partial(1).embed_to(n), f.partial(2).embed_to(n)};
  Macaulay m = macaulay(partials, d, n);

  ModularImage img{static_cast<u64>(1) << 30, 0};
  for (int attempt = 0; attempt < 3; ++attempt) {
    img = next_prime(n, img.p);
    auto rank = rank_mod_p(m, img);
    if (!rank) continue;  // a denominator vanished mod p
    if (*rank == m.columns) return {};
    break;
  }

  SmoothnessVerdict verdict;
  verdict.smooth = false;
  WitnessSearch search(partials, d);
  const long n1 = lcm_long(2, n);
  search.run(n1);
  if (auto w = search.best()) {
    verdict.witness = w;
    return verdict;
  }
  const long n2 = lcm_long(lcm_long(n1, d), d - 1);
  if (n2 != n1) {
    search.run(n2);
    if (auto w = search.best()) {
      verdict.witness = w;
      return verdict;
    }
  }
  if (rank_exact(m) == m.columns) return {};
  verdict.non_constructive = true;
  return verdict;
}

}  // namespace planeaut
