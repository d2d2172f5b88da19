// Eigenvalues and eigenvectors of finite-order projective transformations.
//
// If M has projective order k, the eigenvalues of M are l, l*e2, l*e3 with
// e2, e3 k-th roots of unity. For each candidate pair (e2, e3) the trace
// determines l, and the other two symmetric functions confirm it. When the
// trace vanishes for the right pair, {e2, e3} = {w, w^2} and l is a cube root
// of the determinant.

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "planeaut/errors.hpp"
#include "planeaut/projgroup.hpp"

namespace planeaut {

namespace {

// Rational cube root, when q is a perfect cube.
std::optional<Rational> rational_cube_root(const Rational& q) {
  Integer num, den;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_root(num.get_mpz_t(), n.get_mpz_t(), 3)) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), d.get_mpz_t(), 3)) return std::nullopt;
  return Rational(num, den);
}

// Some x with x^3 = c, where x is a rational times a root of unity, possibly
// times a square root of a rational. Throws otherwise.
CycloElem cube_root(const CycloElem& c) {
  const long n = c.conductor();
  const long w = n % 2 == 0 ? n : 2 * n;
  if (auto s = split_root_of_unity(c)) {
    if (auto r = rational_cube_root(s->first)) return CycloElem::rational(*r) * CycloElem::zeta(3 * w, s->second);
  }
  // x^2 = r * zeta_(3w)^(j + w t), so x = +-sqrt(r) * zeta_(6w)^(j + w t)
  if (auto s = split_root_of_unity(c * c)) {
    if (auto r = rational_cube_root(s->first)) {
      CycloElem root = sqrt_rational(*r);
      for (long t = 0; t < 3; ++t) {
        CycloElem x = root * CycloElem::zeta(6 * w, s->second + w * t);
        CycloElem cube = x * x * x;
        if (cube == c) return x;
        if (-cube == c) return -x;
      }
    }
  }
  throw DomainError("eigenvalues of the transformation do not lie in a cyclotomic field");
}

std::vector<Eigenvalue> group_values(const std::array<CycloElem, 3>& values) {
  std::vector<Eigenvalue> out;
  for (const auto& v : values) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Eigenvalue& e) { return e.value == v; });
    if (it == out.end())
      out.push_back({v, 1});
    else
      ++it->multiplicity;
  }
  return out;
}

std::vector<Eigenvalue> find_eigenvalues(const ProjTransform& m) {
  const Matrix3& a = m.matrix();
  if (a.is_diagonal()) return group_values({a(0, 0), a(1, 1), a(2, 2)});

  const long k = element_order(m, default_closure_cap());
  const long n = lcm_long(m.conductor(), k);
  Matrix3 b = a.embed_to(n);
  const CycloElem tr = b(0, 0) + b(1, 1) + b(2, 2);
  const CycloElem s2 = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0) + b(0, 0) * b(2, 2) - b(0, 2) * b(2, 0) +
                       b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1);
  const CycloElem det = b.determinant();

  std::vector<CycloElem> roots;
  for (long j = 0; j < k; ++j) roots.push_back(CycloElem::zeta(k, j).embed_to(n));
  const CycloElem one = CycloElem::rational(1, n);
  if (tr.is_zero()) {
    // eigenvalues l, l w, l w^2 with l^3 = det
    const CycloElem l = cube_root(det);
    const CycloElem w = CycloElem::zeta(3, 1);
    if (!s2.is_zero()) throw DomainError("no eigenvalue pattern found for " + m.to_string());
    return group_values({l, l * w, l * w * w});
  }
  // l = tr / (1 + e2 + e3); compare s2 and det without dividing
  const CycloElem tr2 = tr * tr;
  const CycloElem tr3 = tr2 * tr;
  for (long i = 0; i < k; ++i) {
    for (long j = i; j < k; ++j) {
      const CycloElem& e2 = roots[static_cast<std::size_t>(i)];
      const CycloElem& e3 = roots[static_cast<std::size_t>(j)];
      const CycloElem sum = one + e2 + e3;
      if (sum.is_zero()) continue;
      const CycloElem p = e2 * e3;
      const CycloElem sum2 = sum * sum;
      if (!(s2 * sum2 == tr2 * (e2 + e3 + p))) continue;
      if (!(det * sum2 * sum == tr3 * p)) continue;
      const CycloElem l = tr / sum;
      return group_values({l, l * e2, l * e3});
    }
  }
  throw DomainError("no eigenvalue pattern found for " + m.to_string());
}

struct EigenVectors {
  std::vector<ProjVector<3>> simple;
  std::optional<ProjVector<3>> plane;  // dual coordinates of a 2-dim eigenspace
};

EigenVectors eigenvectors(const Matrix3& a, const std::vector<Eigenvalue>& values) {
  EigenVectors out;
  for (const auto& ev : values) {
    long n = lcm_long(a.conductor(), ev.value.conductor());
    Matrix3 s = a.embed_to(n);
    for (int i = 0; i < 3; ++i) s(i, i) -= ev.value;
    std::array<std::array<CycloElem, 3>, 3> rows;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s(i, j);
    auto nonzero = [](const std::array<CycloElem, 3>& v) {
      return !(v[0].is_zero() && v[1].is_zero() && v[2].is_zero());
    };
    if (ev.multiplicity == 1) {
      bool done = false;
      for (int i = 0; i < 3 && !done; ++i)
        for (int j = i + 1; j < 3 && !done; ++j) {
          auto c = cross(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
          if (nonzero(c)) {
            out.simple.emplace_back(c);
            done = true;
          }
        }
      if (!done) throw DomainError("eigenspace of a simple eigenvalue is not a line");
    } else if (ev.multiplicity == 2) {
      for (const auto& r : rows)
        if (nonzero(r)) {
          out.plane = ProjVector<3>(r);
          break;
        }
      if (!out.plane) throw DomainError("degenerate eigenspace");
    }
  }
  return out;
}

}  // namespace

EigenStructure eigen_structure(const ProjTransform& m) {
  EigenStructure out;
  if (m.is_identity()) {
    out.identity = true;
    out.eigenvalues = {{CycloElem(1), 3}};
    return out;
  }
  out.eigenvalues = find_eigenvalues(m);
  auto points = eigenvectors(m.matrix(), out.eigenvalues);
  auto lines = eigenvectors(m.matrix().transpose(), out.eigenvalues);
  out.fixed_points = std::move(points.simple);
  out.pointwise_fixed_line = points.plane;
  out.fixed_lines = std::move(lines.simple);
  out.invariant_pencil = lines.plane;
  return out;
}

HomologyData homology_data(const ProjTransform& m) {
  if (m.is_identity()) throw DomainError("homology_data: identity transformation");
  EigenStructure es = eigen_structure(m);
  HomologyData h;
  h.order = element_order(m, default_closure_cap());
  if (es.pointwise_fixed_line) {
    h.is_homology = true;
    h.center = es.fixed_points.front();
    h.axis = es.pointwise_fixed_line;
  }
  return h;
}

namespace {

// Fixed locus of a set of transformations: finitely many points plus at most
// one line of fixed points. `whole` stands for the entire plane.
struct FixedLocus {
  bool whole = true;
  std::vector<ProjPoint> points;
  std::optional<ProjLine> line;

  bool contains(const ProjPoint& p) const {
    if (whole) return true;
    if (line && incident(p, *line)) return true;
    return std::find(points.begin(), points.end(), p) != points.end();
  }

  void intersect(const FixedLocus& o) {
    if (o.whole) return;
    if (whole) {
      *this = o;
      return;
    }
    std::vector<ProjPoint> pts;
    auto add = [&pts](const ProjPoint& p) {
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    };
    for (const auto& p : points)
      if (o.contains(p)) add(p);
    for (const auto& p : o.points)
      if (contains(p)) add(p);
    std::optional<ProjLine> common;
    if (line && o.line) {
      if (*line == *o.line)
        common = line;
      else
        add(meet(*line, *o.line));
    }
    if (common) std::erase_if(pts, [&](const ProjPoint& p) { return incident(p, *common); });
    points = std::move(pts);
    line = common;
  }
};

void add_unique(std::vector<ProjPoint>& v, const ProjPoint& p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

// Orbit of p under the generators, or nothing if it exceeds three points.
std::optional<std::vector<ProjPoint>> small_orbit(const ProjPoint& p, const std::vector<ProjTransform>& gens) {
  std::vector<ProjPoint> orbit{p};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens) {
      ProjPoint q = g.apply(orbit[i]);
      if (std::find(orbit.begin(), orbit.end(), q) != orbit.end()) continue;
      orbit.push_back(q);
      if (orbit.size() > 3) return std::nullopt;
    }
  return orbit;
}

std::array<ProjPoint, 3> sorted_triangle(std::array<ProjPoint, 3> t) {
  std::sort(t.begin(), t.end(), [](const ProjPoint& a, const ProjPoint& b) { return a.to_string() < b.to_string(); });
  return t;
}

}  // namespace

FixedConfiguration fixed_configuration(const MatrixGroup3& g) {
  FixedConfiguration out;
  if (g.order() == 1) {
    out.trivial = true;
    return out;
  }
  FixedLocus points, lines;
  for (const auto& s : g.generators()) {
    if (s.is_identity()) continue;
    EigenStructure es = eigen_structure(s);
    points.intersect({false, es.fixed_points, es.pointwise_fixed_line});
    lines.intersect({false, es.fixed_lines, es.invariant_pencil});
  }
  out.fixed_points = points.points;
  out.pointwise_fixed_line = points.line;
  out.invariant_lines = lines.points;
  out.invariant_pencil = lines.line;

  // candidate triangle vertices
  std::vector<ProjPoint> candidates;
  std::vector<ProjLine> axes;
  // generators of the same cyclic subgroup share their eigenvectors
  std::unordered_set<ProjTransform, ProjectiveMatrixHash<3>> done;
  const auto& orders = g.element_orders();
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    const auto& e = g.elements()[i];
    if (e.is_identity() || done.count(e)) continue;
    ProjTransform p = e;
    for (long j = 1; j < orders[i]; ++j, p = p * e)
      if (std::gcd(j, orders[i]) == 1) done.insert(p);
    EigenStructure es = eigen_structure(e);
    for (const auto& p : es.fixed_points) add_unique(candidates, p);
    if (es.pointwise_fixed_line) add_unique(axes, *es.pointwise_fixed_line);
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    for (std::size_t j = i + 1; j < axes.size(); ++j) add_unique(candidates, meet(axes[i], axes[j]));
    for (const auto& l : out.invariant_lines)
      if (!(l == axes[i])) add_unique(candidates, meet(axes[i], l));
  }

  std::vector<std::vector<ProjPoint>> orbits;
  std::vector<ProjPoint> covered;
  for (const auto& p : candidates) {
    if (std::find(covered.begin(), covered.end(), p) != covered.end()) continue;
    auto orbit = small_orbit(p, g.generators());
    if (!orbit) continue;
    for (const auto& q : *orbit) covered.push_back(q);
    orbits.push_back(std::move(*orbit));
  }

  std::vector<std::array<ProjPoint, 3>> triangles;
  auto consider = [&](const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    if (collinear(a, b, c)) return;
    auto t = sorted_triangle({a, b, c});
    if (std::find(triangles.begin(), triangles.end(), t) == triangles.end()) triangles.push_back(t);
  };
  std::vector<const std::vector<ProjPoint>*> singles, pairs;
  for (const auto& o : orbits) {
    if (o.size() == 3) consider(o[0], o[1], o[2]);
    if (o.size() == 2) pairs.push_back(&o);
    if (o.size() == 1) singles.push_back(&o);
  }
  for (const auto* pr : pairs)
    for (const auto* s : singles) consider((*pr)[0], (*pr)[1], (*s)[0]);
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      for (std::size_t k = j + 1; k < singles.size(); ++k) consider((*singles[i])[0], (*singles[j])[0], (*singles[k])[0]);
  out.invariant_triangles = std::move(triangles);
  return out;
}

}  // namespace planeaut
