// Isomorphism fingerprints from the order and the element-order multiset.

#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "planeaut/projgroup.hpp"

namespace planeaut {

namespace {

using Perm = std::vector<int>;

long perm_order(const Perm& p) {
  long order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::map<long, long> permutation_model(const std::vector<Perm>& gens) {
  const std::size_t n = gens.front().size();
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = g[static_cast<std::size_t>(queue[i][k])];
      if (seen.insert(c).second) queue.push_back(c);
    }
  std::map<long, long> out;
  for (const auto& p : queue) ++out[perm_order(p)];
  return out;
}

Perm cycle(int n, std::initializer_list<int> c) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> v(c);
  for (std::size_t i = 0; i < v.size(); ++i) p[static_cast<std::size_t>(v[i])] = v[(i + 1) % v.size()];
  return p;
}

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[static_cast<std::size_t>(b[k])];
  return c;
}

// PSL(2,7) on the projective line over F_7; point 7 is infinity.
std::map<long, long> psl27_model() {
  auto map = [](auto f) {
    Perm p(8);
    for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = f(i);
    return p;
  };
  auto inv7 = [](int x) {
    for (int y = 1; y < 7; ++y)
      if (x * y % 7 == 1) return y;
    return 0;
  };
  Perm shift = map([](int x) { return x == 7 ? 7 : (x + 1) % 7; });
  Perm dbl = map([](int x) { return x == 7 ? 7 : 2 * x % 7; });
  Perm neg_inv = map([&](int x) { return x == 7 ? 0 : x == 0 ? 7 : (7 - inv7(x)) % 7; });
  return permutation_model({shift, dbl, neg_inv});
}

// Monomial matrices with entries in mu_d modulo scalars: (perm, exponents).
std::map<long, long> fermat_model(long d) {
  struct Elem {
    Perm p;
    std::array<long, 3> e;
  };
  auto mul = [d](const Elem& a, const Elem& b) {
    // rows: (AB)(i, b.p[a.p[i]]) = a.e[i] + b.e[a.p[i]]
    Elem c;
    c.p.resize(3);
    for (std::size_t i = 0; i < 3; ++i) {
      auto j = static_cast<std::size_t>(a.p[i]);
      c.p[i] = b.p[j];
      c.e[i] = (a.e[i] + b.e[j]) % d;
    }
    return c;
  };
  auto is_identity = [](const Elem& a) {
    return a.p == Perm{0, 1, 2} && a.e[0] == a.e[1] && a.e[1] == a.e[2];
  };
  std::vector<Perm> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::map<long, long> out;
  for (const auto& p : perms)
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b) {
        Elem x{p, {0, a, b}};
        Elem y = x;
        long k = 1;
        while (!is_identity(y)) {
          y = mul(y, x);
          ++k;
        }
        ++out[k];
      }
  return out;
}

std::map<long, long> hessian_model(GroupKind kind) {
  auto h = hessian_generators();
  std::vector<ProjTransform> gens;
  if (kind == GroupKind::Hessian216) gens = {h[0], h[1], h[2], h[3]};
  if (kind == GroupKind::Hessian36) gens = {h[0], h[1], h[2]};
  if (kind == GroupKind::Hessian72) gens = {h[0], h[1], h[2], hessian72_generator()};
  return closure(gens).order_multiset();
}

std::map<long, long> compute_reference(GroupKind kind, long m) {
  std::map<long, long> out;
  switch (kind) {
    case GroupKind::Cyclic:
      for (long j = 0; j < m; ++j) ++out[m / std::gcd(j, m)];
      return out;
    case GroupKind::Dihedral:
      for (long j = 0; j < m; ++j) ++out[m / std::gcd(j, m)];
      out[2] += m;
      return out;
    case GroupKind::A4:
      return permutation_model({cycle(4, {0, 1, 2}), compose(cycle(4, {0, 1}), cycle(4, {2, 3}))});
    case GroupKind::S4:
      return permutation_model({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
    case GroupKind::A5:
      return permutation_model({cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})});
    case GroupKind::A6:
      return permutation_model({cycle(6, {0, 1, 2}), cycle(6, {1, 2, 3, 4, 5})});
    case GroupKind::PSL27:
      return psl27_model();
    case GroupKind::Hessian216:
    case GroupKind::Hessian72:
    case GroupKind::Hessian36:
      return hessian_model(kind);
    case GroupKind::FermatSemidirect:
      return fermat_model(m);
    case GroupKind::Other:
      break;
  }
  return out;
}

}  // namespace

std::map<long, long> reference_order_multiset(GroupKind kind, long parameter) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::map<long, long>> cache;
  const std::pair<int, long> key{static_cast<int>(kind), parameter};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = compute_reference(kind, parameter);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

std::string Fingerprint::label() const {
  switch (kind) {
    case GroupKind::Cyclic: return "cyclic " + std::to_string(parameter);
    case GroupKind::Dihedral: return "dihedral " + std::to_string(2 * parameter);
    case GroupKind::A4: return "A4";
    case GroupKind::S4: return "S4";
    case GroupKind::A5: return "A5";
    case GroupKind::A6: return "A6";
    case GroupKind::PSL27: return "PSL(2,7)";
    case GroupKind::Hessian216: return "Hessian216";
    case GroupKind::Hessian72: return "Hessian72";
    case GroupKind::Hessian36: return "Hessian36";
    case GroupKind::FermatSemidirect: return "Z" + std::to_string(parameter) + "^2:S3";
    case GroupKind::Other: break;
  }
  std::ostringstream out;
  out << "other(order=" << order << ";orders=";
  bool first = true;
  for (const auto& [k, c] : element_orders) {
    out << (first ? "" : ",") << k << ":" << c;
    first = false;
  }
  out << ")";
  return out.str();
}

bool Fingerprint::is_primitive_kind() const {
  switch (kind) {
    case GroupKind::A5:
    case GroupKind::A6:
    case GroupKind::PSL27:
    case GroupKind::Hessian216:
    case GroupKind::Hessian72:
    case GroupKind::Hessian36:
      return true;
    default:
      return false;
  }
}

template <int Dim>
Fingerprint fingerprint(const MatrixGroup<Dim>& g) {
  Fingerprint f;
  f.order = g.order();
  f.element_orders = g.order_multiset();
  const long n = f.order;
  if (g.is_abelian()) {
    if (f.element_orders.count(n)) {
      f.kind = GroupKind::Cyclic;
      f.parameter = n;
    } else if (n == 4) {
      f.kind = GroupKind::Dihedral;
      f.parameter = 2;
    }
    return f;
  }
  auto matches = [&](GroupKind kind, long param) { return reference_order_multiset(kind, param) == f.element_orders; };
  if (n % 2 == 0 && matches(GroupKind::Dihedral, n / 2)) {
    f.kind = GroupKind::Dihedral;
    f.parameter = n / 2;
    return f;
  }
  const std::pair<GroupKind, long> fixed[] = {
      {GroupKind::A4, 12},          {GroupKind::S4, 24},          {GroupKind::A5, 60},
      {GroupKind::PSL27, 168},      {GroupKind::A6, 360},         {GroupKind::Hessian216, 216},
      {GroupKind::Hessian72, 72},   {GroupKind::Hessian36, 36},
  };
  for (const auto& [kind, order] : fixed)
    if (n == order && matches(kind, 0)) {
      f.kind = kind;
      return f;
    }
  if (n % 6 == 0) {
    long d = std::lround(std::sqrt(static_cast<double>(n / 6)));
    if (d >= 1 && 6 * d * d == n && matches(GroupKind::FermatSemidirect, d)) {
      f.kind = GroupKind::FermatSemidirect;
      f.parameter = d;
    }
  }
  return f;
}

template Fingerprint fingerprint<2>(const MatrixGroup<2>&);
template Fingerprint fingerprint<3>(const MatrixGroup<3>&);

}  // namespace planeaut
