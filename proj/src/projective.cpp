#include "planeaut/projective.hpp"

#include <sstream>

#include "planeaut/errors.hpp"

namespace planeaut {

long common_conductor(std::initializer_list<long> conductors) {
  long n = 1;
  for (long c : conductors) n = lcm_long(n, c);
  return n;
}

template <int Dim>
SquareMatrix<Dim> SquareMatrix<Dim>::identity() {
  SquareMatrix r;
  for (int i = 0; i < Dim; ++i) r(i, i) = CycloElem(1);
  return r;
}

template <int Dim>
SquareMatrix<Dim> SquareMatrix<Dim>::diagonal(const std::array<CycloElem, Dim>& d) {
  SquareMatrix r;
  for (int i = 0; i < Dim; ++i) r(i, i) = d[static_cast<std::size_t>(i)];
  return r;
}

template <int Dim>
long SquareMatrix<Dim>::conductor() const {
  long n = 1;
  for (const auto& x : a) n = lcm_long(n, x.conductor());
  return n;
}

template <int Dim>
SquareMatrix<Dim> SquareMatrix<Dim>::embed_to(long N) const {
  SquareMatrix r;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i].embed_to(N);
  return r;
}

template <int Dim>
CycloElem SquareMatrix<Dim>::determinant() const {
  const auto& m = *this;
  if constexpr (Dim == 2) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  } else {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
}

template <int Dim>
SquareMatrix<Dim> SquareMatrix<Dim>::adjugate() const {
  const auto& m = *this;
  SquareMatrix r;
  if constexpr (Dim == 2) {
    r(0, 0) = m(1, 1);
    r(0, 1) = -m(0, 1);
    r(1, 0) = -m(1, 0);
    r(1, 1) = m(0, 0);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        // cofactor of (j, i)
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        r(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
  }
  return r;
}

template <int Dim>
SquareMatrix<Dim> SquareMatrix<Dim>::transpose() const {
  SquareMatrix r;
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) r(i, j) = (*this)(j, i);
  return r;
}

template <int Dim>
SquareMatrix<Dim> SquareMatrix<Dim>::inverse() const {
  CycloElem det = determinant();
  if (det.is_zero()) throw DomainError("singular matrix");
  return det.inverse() * adjugate();
}

template <int Dim>
bool SquareMatrix<Dim>::is_scalar() const {
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) {
      if (i == j) {
        if (!((*this)(i, i) == (*this)(0, 0))) return false;
      } else if (!(*this)(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

template <int Dim>
bool SquareMatrix<Dim>::is_diagonal() const {
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

template <int Dim>
std::string SquareMatrix<Dim>::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < Dim; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < Dim; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).to_string();
    }
  }
  out << "]";
  return out.str();
}

template struct SquareMatrix<2>;
template struct SquareMatrix<3>;

template <int Dim>
ProjVector<Dim>::ProjVector(std::array<CycloElem, Dim> coords) : v_(std::move(coords)) {
  long n = 1;
  for (const auto& x : v_) n = lcm_long(n, x.conductor());
  int first = -1;
  for (int i = 0; i < Dim; ++i)
    if (!v_[static_cast<std::size_t>(i)].is_zero()) {
      first = i;
      break;
    }
  if (first < 0) throw DomainError("zero vector has no projective class");
  CycloElem s = v_[static_cast<std::size_t>(first)].inverse();
  for (auto& x : v_) x = (x * s).embed_to(n);
}

template <int Dim>
long ProjVector<Dim>::conductor() const {
  return v_[0].conductor();
}

template <int Dim>
ProjVector<Dim> ProjVector<Dim>::embed_to(long N) const {
  ProjVector r = *this;
  for (auto& x : r.v_) x = x.embed_to(N);
  return r;
}

template <int Dim>
std::size_t ProjVector<Dim>::hash() const {
  std::size_t h = 0;
  for (const auto& x : v_) h = h * 1000003u ^ x.hash();
  return h;
}

template <int Dim>
std::string ProjVector<Dim>::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < Dim; ++i) {
    if (i) out << " : ";
    out << v_[static_cast<std::size_t>(i)].to_string();
  }
  out << ")";
  return out.str();
}

template class ProjVector<2>;
template class ProjVector<3>;

std::array<CycloElem, 3> cross(const std::array<CycloElem, 3>& u, const std::array<CycloElem, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  auto c = cross(p.coords(), q.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw DomainError("join of coincident points");
  return ProjLine(c);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  auto c = cross(l.coords(), m.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw DomainError("meet of coincident lines");
  return ProjPoint(c);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  Matrix3 m;
  for (int j = 0; j < 3; ++j) {
    m(0, j) = p[j];
    m(1, j) = q[j];
    m(2, j) = r[j];
  }
  return m.determinant().is_zero();
}

template <int Dim>
ProjectiveMatrix<Dim>::ProjectiveMatrix() : m_(SquareMatrix<Dim>::identity()) {
  normalize();
}

template <int Dim>
ProjectiveMatrix<Dim>::ProjectiveMatrix(const SquareMatrix<Dim>& m) : m_(m) {
  if (m_.determinant().is_zero()) throw DomainError("singular matrix is not a projective transformation");
  normalize();
}

template <int Dim>
ProjectiveMatrix<Dim>::ProjectiveMatrix(const SquareMatrix<Dim>& m, bool) : m_(m) {
  normalize();
}

template <int Dim>
void ProjectiveMatrix<Dim>::normalize() {
  long n = m_.conductor();
  conductor_ = n;
  std::size_t first = 0;
  while (first < m_.a.size() && m_.a[first].is_zero()) ++first;
  if (first == m_.a.size()) throw DomainError("zero matrix");
  if (!m_.a[first].is_one()) {
    CycloElem s = m_.a[first].inverse();
    for (auto& x : m_.a)
      if (!x.is_zero()) x *= s;
  }
  std::size_t h = static_cast<std::size_t>(n);
  for (auto& x : m_.a) {
    if (x.conductor() != n) x = x.embed_to(n);
    h = h * 1000003u ^ x.hash();
  }
  hash_ = h;
}

template <int Dim>
bool ProjectiveMatrix<Dim>::is_identity() const {
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) {
      const auto& x = m_(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

template <int Dim>
ProjectiveMatrix<Dim> ProjectiveMatrix<Dim>::embed_to(long N) const {
  return ProjectiveMatrix(m_.embed_to(N), true);
}

template <int Dim>
ProjectiveMatrix<Dim> ProjectiveMatrix<Dim>::inverse() const {
  return ProjectiveMatrix(m_.adjugate().embed_to(conductor_), true);
}

template <int Dim>
ProjectiveMatrix<Dim> ProjectiveMatrix<Dim>::transpose() const {
  return ProjectiveMatrix(m_.transpose(), true);
}

template <int Dim>
ProjVector<Dim> ProjectiveMatrix<Dim>::apply(const ProjVector<Dim>& p) const {
  std::array<CycloElem, Dim> out;
  for (int i = 0; i < Dim; ++i) {
    CycloElem s;
    for (int j = 0; j < Dim; ++j)
      if (!m_(i, j).is_zero()) s += m_(i, j) * p[j];
    out[static_cast<std::size_t>(i)] = s;
  }
  return ProjVector<Dim>(out);
}

template <int Dim>
std::string ProjectiveMatrix<Dim>::to_string() const {
  return m_.to_string();
}

template class ProjectiveMatrix<2>;
template class ProjectiveMatrix<3>;

Matrix3 diag3(const CycloElem& a, const CycloElem& b, const CycloElem& c) {
  return Matrix3::diagonal({a, b, c});
}

Matrix3 permutation3(int p0, int p1, int p2) {
  Matrix3 m;
  m(0, p0) = CycloElem(1);
  m(1, p1) = CycloElem(1);
  m(2, p2) = CycloElem(1);
  return m;
}

}  // namespace planeaut
