#pragma once

// Points, lines and matrices of the projective plane (and line) over
// cyclotomic fields.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "planeaut/cyclo.hpp"

namespace planeaut {

/// Plain square matrix; no projective normalization.
template <int Dim>
struct SquareMatrix {
  std::array<CycloElem, Dim * Dim> a{};

  CycloElem& operator()(int i, int j) { return a[static_cast<std::size_t>(i * Dim + j)]; }
  const CycloElem& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * Dim + j)]; }

  static SquareMatrix identity();
  static SquareMatrix diagonal(const std::array<CycloElem, Dim>& d);

  long conductor() const;
  SquareMatrix embed_to(long N) const;
  CycloElem determinant() const;
  SquareMatrix adjugate() const;
  SquareMatrix transpose() const;
  /// Throws DomainError if singular.
  SquareMatrix inverse() const;
  bool is_scalar() const;
  bool is_diagonal() const;

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix r;
    for (int i = 0; i < Dim; ++i)
      for (int j = 0; j < Dim; ++j) {
        CycloElem s;
        for (int k = 0; k < Dim; ++k)
          if (!x(i, k).is_zero() && !y(k, j).is_zero()) s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend SquareMatrix operator*(const CycloElem& s, const SquareMatrix& x) {
    SquareMatrix r;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
  }
  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) { return x.a == y.a; }

  std::string to_string() const;
};

using Matrix3 = SquareMatrix<3>;
using Matrix2 = SquareMatrix<2>;

/// Projective class of a vector: first nonzero coordinate scaled to 1.
template <int Dim>
class ProjVector {
 public:
  ProjVector() = default;
  /// Throws DomainError on the zero vector.
  explicit ProjVector(std::array<CycloElem, Dim> coords);

  const std::array<CycloElem, Dim>& coords() const { return v_; }
  const CycloElem& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  long conductor() const;
  ProjVector embed_to(long N) const;

  friend bool operator==(const ProjVector& p, const ProjVector& q) { return p.v_ == q.v_; }
  /// Consistent with == only between vectors of the same conductor.
  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<CycloElem, Dim> v_{};
};

/// Point (x:y:z) of P^2.
using ProjPoint = ProjVector<3>;
/// Line aX+bY+cZ=0 of P^2, stored by its dual coordinates (a:b:c).
using ProjLine = ProjVector<3>;

inline const ProjPoint& point_P1() {
  static const ProjPoint p({CycloElem(1), CycloElem(0), CycloElem(0)});
  return p;
}
inline const ProjPoint& point_P2() {
  static const ProjPoint p({CycloElem(0), CycloElem(1), CycloElem(0)});
  return p;
}
inline const ProjPoint& point_P3() {
  static const ProjPoint p({CycloElem(0), CycloElem(0), CycloElem(1)});
  return p;
}

bool incident(const ProjPoint& p, const ProjLine& l);
/// Line through two distinct points / intersection point of two distinct lines.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
std::array<CycloElem, 3> cross(const std::array<CycloElem, 3>& u, const std::array<CycloElem, 3>& v);

/// Invertible matrix modulo scalars, canonicalized so that the first nonzero
/// entry in row-major order is 1. Equality is entrywise comparison.
template <int Dim>
class ProjectiveMatrix {
 public:
  ProjectiveMatrix();  // identity
  /// Throws DomainError if m is singular.
  explicit ProjectiveMatrix(const SquareMatrix<Dim>& m);

  static ProjectiveMatrix identity() { return ProjectiveMatrix(); }

  const SquareMatrix<Dim>& matrix() const { return m_; }
  const CycloElem& operator()(int i, int j) const { return m_(i, j); }
  long conductor() const { return conductor_; }
  bool is_identity() const;

  ProjectiveMatrix embed_to(long N) const;
  ProjectiveMatrix inverse() const;
  ProjectiveMatrix transpose() const;

  friend ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return ProjectiveMatrix(x.m_ * y.m_, true);
  }
  friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) { return x.m_ == y.m_; }

  ProjVector<Dim> apply(const ProjVector<Dim>& p) const;

  /// Consistent with == only between matrices of the same conductor.
  std::size_t hash() const { return hash_; }
  std::string to_string() const;

 private:
  ProjectiveMatrix(const SquareMatrix<Dim>& m, bool checked_invertible);
  void normalize();

  SquareMatrix<Dim> m_;
  long conductor_ = 1;
  std::size_t hash_ = 0;
};

using ProjTransform = ProjectiveMatrix<3>;
using ProjTransform2 = ProjectiveMatrix<2>;

template <int Dim>
struct ProjectiveMatrixHash {
  std::size_t operator()(const ProjectiveMatrix<Dim>& m) const { return m.hash(); }
};

template <int Dim>
struct ProjVectorHash {
  std::size_t operator()(const ProjVector<Dim>& v) const { return v.hash(); }
};

/// [H1, H2, H3] notation: row i holds the coefficients of the linear form
/// giving the i-th image coordinate. The diagonal helper builds [aX, bY, cZ].
Matrix3 diag3(const CycloElem& a, const CycloElem& b, const CycloElem& c);
/// Permutation matrix sending (X:Y:Z) to (X_{p0} : X_{p1} : X_{p2}).
Matrix3 permutation3(int p0, int p1, int p2);

/// Common conductor of a collection of elements.
long common_conductor(std::initializer_list<long> conductors);

}  // namespace planeaut
