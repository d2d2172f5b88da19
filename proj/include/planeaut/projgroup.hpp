#pragma once

// Finite groups of projective transformations: closure, element orders,
// eigenstructure, homologies, invariant configurations, the PBD(2,1) split
// and isomorphism fingerprints.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeaut/projective.hpp"

namespace planeaut {

inline constexpr long kDefaultClosureCap = 25000;

/// Least k >= 1 with M^k = 1 projectively. Throws CapExceeded past cap.
template <int Dim>
long element_order(const ProjectiveMatrix<Dim>& m, long cap = kDefaultClosureCap);

template <int Dim>
class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(std::vector<ProjectiveMatrix<Dim>> generators, std::vector<ProjectiveMatrix<Dim>> elements);

  const std::vector<ProjectiveMatrix<Dim>>& generators() const { return gens_; }
  /// Identity first, then breadth-first order of discovery.
  const std::vector<ProjectiveMatrix<Dim>>& elements() const { return elems_; }
  long order() const { return static_cast<long>(elems_.size()); }
  long conductor() const { return elems_.empty() ? 1 : elems_.front().conductor(); }
  bool contains(const ProjectiveMatrix<Dim>& m) const;
  bool is_abelian() const;
  /// Projective orders of the elements, in element order (cached).
  const std::vector<long>& element_orders() const;
  /// order -> number of elements of that order.
  std::map<long, long> order_multiset() const;

 private:
  std::vector<ProjectiveMatrix<Dim>> gens_;
  std::vector<ProjectiveMatrix<Dim>> elems_;
  mutable std::vector<long> orders_;
};

using MatrixGroup3 = MatrixGroup<3>;
using MatrixGroup2 = MatrixGroup<2>;

/// Breadth-first closure over canonical forms. An empty generator list gives
/// the trivial group. Throws CapExceeded (with the partial count) when more
/// than cap elements appear.
template <int Dim>
MatrixGroup<Dim> closure(const std::vector<ProjectiveMatrix<Dim>>& gens, long cap = kDefaultClosureCap);

/// Default cap, overridable through the PLANEAUT_CLOSURE_CAP variable.
long default_closure_cap();

struct Eigenvalue {
  CycloElem value;
  int multiplicity = 1;
};

struct EigenStructure {
  bool identity = false;
  /// Eigenvalues of a fixed representative c*M; only ratios are meaningful.
  std::vector<Eigenvalue> eigenvalues;
  /// Isolated fixed points (eigenvectors of one-dimensional eigenspaces).
  std::vector<ProjPoint> fixed_points;
  /// Isolated invariant lines.
  std::vector<ProjLine> fixed_lines;
  /// Present when a two-dimensional eigenspace exists.
  std::optional<ProjLine> pointwise_fixed_line;
  /// Center of the pencil of invariant lines, dual to pointwise_fixed_line.
  std::optional<ProjPoint> invariant_pencil;
};

/// Throws DomainError if M has infinite order or its eigenvalues leave the
/// cyclotomic fields.
EigenStructure eigen_structure(const ProjTransform& m);

struct HomologyData {
  bool is_homology = false;
  std::optional<ProjPoint> center;
  std::optional<ProjLine> axis;
  long order = 1;
};

/// Throws DomainError on the identity.
HomologyData homology_data(const ProjTransform& m);

struct FixedConfiguration {
  bool trivial = false;
  std::vector<ProjPoint> fixed_points;
  std::vector<ProjLine> invariant_lines;
  /// A line fixed pointwise by every element.
  std::optional<ProjLine> pointwise_fixed_line;
  /// A point through which every line is invariant.
  std::optional<ProjPoint> invariant_pencil;
  /// Vertex triples of invariant triangles.
  std::vector<std::array<ProjPoint, 3>> invariant_triangles;
};

FixedConfiguration fixed_configuration(const MatrixGroup3& g);

enum class GroupKind {
  Cyclic,
  Dihedral,
  A4,
  S4,
  A5,
  A6,
  PSL27,
  Hessian216,
  Hessian72,
  Hessian36,
  FermatSemidirect,
  Other,
};

struct Fingerprint {
  GroupKind kind = GroupKind::Other;
  long order = 1;
  /// Cyclic: the order; dihedral of order 2m: m; semidirect Z_d^2 x| S3: d.
  long parameter = 0;
  std::map<long, long> element_orders;

  std::string label() const;
  bool is_primitive_kind() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

template <int Dim>
Fingerprint fingerprint(const MatrixGroup<Dim>& g);

/// Element orders of reference groups, computed from permutation or
/// abstract models (or the Hessian closures).
std::map<long, long> reference_order_multiset(GroupKind kind, long parameter = 0);

struct PbdSplit {
  bool member = false;
  MatrixGroup3 kernel;      // N, elements [X, Y, aZ]
  MatrixGroup2 image;       // G' = rho(G)
  Fingerprint image_fingerprint;
  long m = 0;               // parameter of a cyclic or dihedral image
};

/// Assumes the caller has moved the fixed point to P3 and the fixed line to Z=0.
PbdSplit pbd_split(const MatrixGroup3& g);

/// B^{-1} M B for the change of basis x = B x'.
ProjTransform conjugate(const ProjTransform& m, const Matrix3& basis);
MatrixGroup3 conjugate(const MatrixGroup3& g, const Matrix3& basis);

/// The Hessian generators h1..h4 over Q(zeta_3).
std::array<ProjTransform, 4> hessian_generators();
/// u = h4^-1 h3 h4, of order 4; <h1, h2, h3, u> is the subgroup of order 72.
ProjTransform hessian72_generator();

}  // namespace planeaut
