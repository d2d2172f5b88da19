#include "planeaut/projgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "planeaut/errors.hpp"

namespace planeaut {

template <int Dim>
long element_order(const ProjectiveMatrix<Dim>& m, long cap) {
  ProjectiveMatrix<Dim> p = m;
  long k = 1;
  while (!p.is_identity()) {
    if (++k > cap)
      throw CapExceeded("element order exceeds cap " + std::to_string(cap) + " (infinite order?)",
                        static_cast<std::size_t>(cap));
    p = p * m;
  }
  return k;
}

template <int Dim>
MatrixGroup<Dim>::MatrixGroup(std::vector<ProjectiveMatrix<Dim>> generators,
                              std::vector<ProjectiveMatrix<Dim>> elements)
    : gens_(std::move(generators)), elems_(std::move(elements)) {}

template <int Dim>
bool MatrixGroup<Dim>::contains(const ProjectiveMatrix<Dim>& m) const {
  return std::find(elems_.begin(), elems_.end(), m) != elems_.end();
}

template <int Dim>
bool MatrixGroup<Dim>::is_abelian() const {
  const auto& s = gens_.empty() ? elems_ : gens_;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!(s[i] * s[j] == s[j] * s[i])) return false;
  return true;
}

template <int Dim>
const std::vector<long>& MatrixGroup<Dim>::element_orders() const {
  if (orders_.size() != elems_.size()) {
    orders_.clear();
    for (const auto& e : elems_) orders_.push_back(element_order(e, order()));
  }
  return orders_;
}

template <int Dim>
std::map<long, long> MatrixGroup<Dim>::order_multiset() const {
  std::map<long, long> out;
  for (long k : element_orders()) ++out[k];
  return out;
}

template <int Dim>
MatrixGroup<Dim> closure(const std::vector<ProjectiveMatrix<Dim>>& gens, long cap) {
  if (cap < 1) throw DomainError("closure cap must be positive");
  long n = 1;
  for (const auto& g : gens) n = lcm_long(n, g.conductor());
  std::vector<ProjectiveMatrix<Dim>> g;
  for (const auto& x : gens) g.push_back(x.embed_to(n));

  std::vector<ProjectiveMatrix<Dim>> elems{ProjectiveMatrix<Dim>::identity().embed_to(n)};
  std::unordered_set<ProjectiveMatrix<Dim>, ProjectiveMatrixHash<Dim>> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : g) {
      ProjectiveMatrix<Dim> p = elems[i] * s;
      if (p.conductor() != n) p = p.embed_to(n);
      if (!seen.insert(p).second) continue;
      elems.push_back(std::move(p));
      if (static_cast<long>(elems.size()) > cap)
        throw CapExceeded("group closure exceeds cap " + std::to_string(cap) + " after " +
                              std::to_string(elems.size()) + " elements",
                          elems.size());
    }
  }
  return MatrixGroup<Dim>(std::move(g), std::move(elems));
}

long default_closure_cap() {
  if (const char* env = std::getenv("PLANEAUT_CLOSURE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultClosureCap;
}

ProjTransform conjugate(const ProjTransform& m, const Matrix3& basis) {
  return ProjTransform(basis.adjugate() * m.matrix() * basis);
}

MatrixGroup3 conjugate(const MatrixGroup3& g, const Matrix3& basis) {
  long n = lcm_long(g.conductor(), basis.conductor());
  for (const auto& x : g.generators()) n = lcm_long(n, x.conductor());
  Matrix3 b = basis.embed_to(n);
  auto conj = [&](const ProjTransform& x) {
    ProjTransform c = conjugate(x.embed_to(n), b);
    return c.conductor() == n ? c : c.embed_to(n);
  };
  std::vector<ProjTransform> gens, elems;
  for (const auto& x : g.generators()) gens.push_back(conj(x));
  for (const auto& x : g.elements()) elems.push_back(conj(x));
  return MatrixGroup3(std::move(gens), std::move(elems));
}

std::array<ProjTransform, 4> hessian_generators() {
  const CycloElem w = CycloElem::zeta(3, 1);
  const CycloElem w2 = CycloElem::zeta(3, 2);
  const CycloElem one = CycloElem::rational(1, 3);
  Matrix3 h3;
  h3(0, 0) = one, h3(0, 1) = one, h3(0, 2) = one;
  h3(1, 0) = one, h3(1, 1) = w, h3(1, 2) = w2;
  h3(2, 0) = one, h3(2, 1) = w2, h3(2, 2) = w;
  return {ProjTransform(permutation3(1, 2, 0).embed_to(3)), ProjTransform(diag3(one, w, w2)), ProjTransform(h3),
          ProjTransform(diag3(one, w, w))};
}

ProjTransform hessian72_generator() {
  auto h = hessian_generators();
  return h[3].inverse() * h[2] * h[3];
}

PbdSplit pbd_split(const MatrixGroup3& g) {
  PbdSplit out;
  for (const auto& e : g.elements())
    if (!e(0, 2).is_zero() || !e(1, 2).is_zero() || !e(2, 0).is_zero() || !e(2, 1).is_zero()) return out;
  out.member = true;

  std::vector<ProjTransform> kernel;
  for (const auto& e : g.elements())
    if (e(0, 1).is_zero() && e(1, 0).is_zero() && e(0, 0) == e(1, 1)) kernel.push_back(e);
  std::vector<ProjTransform> kernel_gens;
  long best = 0;
  for (const auto& k : kernel) {
    long o = element_order(k, g.order());
    if (o > best) {
      best = o;
      kernel_gens = {k};
    }
  }
  if (best <= 1) kernel_gens.clear();
  out.kernel = MatrixGroup3(std::move(kernel_gens), std::move(kernel));

  std::vector<ProjTransform2> image_gens;
  for (const auto& x : g.generators()) {
    Matrix2 a;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) = x(i, j);
    image_gens.emplace_back(a);
  }
  out.image = closure(image_gens, g.order());
  out.image_fingerprint = fingerprint(out.image);
  if (out.image_fingerprint.kind == GroupKind::Cyclic || out.image_fingerprint.kind == GroupKind::Dihedral)
    out.m = out.image_fingerprint.parameter;
  return out;
}

template long element_order<2>(const ProjectiveMatrix<2>&, long);
template long element_order<3>(const ProjectiveMatrix<3>&, long);
template class MatrixGroup<2>;
template class MatrixGroup<3>;
template MatrixGroup<2> closure<2>(const std::vector<ProjectiveMatrix<2>>&, long);
template MatrixGroup<3> closure<3>(const std::vector<ProjectiveMatrix<3>>&, long);

}  // namespace planeaut
