#include "planeaut/polyring.hpp"

#include <sstream>

#include "planeaut/errors.hpp"

namespace planeaut {

TernaryForm::TernaryForm(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("form degree must be nonnegative");
}

TernaryForm TernaryForm::from_terms(int degree, const std::vector<std::pair<Exponent, CycloElem>>& terms) {
  TernaryForm f(degree);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

TernaryForm TernaryForm::monomial(const Exponent& e, const CycloElem& c) {
  TernaryForm f(e[0] + e[1] + e[2]);
  f.add_term(e, c);
  return f;
}

TernaryForm TernaryForm::linear(const CycloElem& a, const CycloElem& b, const CycloElem& c) {
  TernaryForm f(1);
  f.add_term({1, 0, 0}, a);
  f.add_term({0, 1, 0}, b);
  f.add_term({0, 0, 1}, c);
  return f;
}

long TernaryForm::conductor() const {
  long n = 1;
  for (const auto& [e, c] : terms_) n = lcm_long(n, c.conductor());
  return n;
}

CycloElem TernaryForm::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloElem(0) : it->second;
}

void TernaryForm::add_term(const Exponent& e, const CycloElem& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
    throw DomainError("exponent triple does not match form degree " + std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw DomainError("adding forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw DomainError("subtracting forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm r(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TernaryForm operator*(const CycloElem& s, const TernaryForm& a) {
  TernaryForm r(a.degree_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

bool operator==(const TernaryForm& a, const TernaryForm& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (a.degree_ != b.degree_) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

TernaryForm TernaryForm::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a form");
  TernaryForm r = monomial({0, 0, 0});
  TernaryForm base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

TernaryForm TernaryForm::partial(int var) const {
  if (var < 0 || var > 2) throw DomainError("variable index out of range");
  TernaryForm r(degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(var)] == 0) continue;
    Exponent d = e;
    d[static_cast<std::size_t>(var)] -= 1;
    r.add_term(d, c * CycloElem(static_cast<long>(e[static_cast<std::size_t>(var)])));
  }
  return r;
}

TernaryForm TernaryForm::embed_to(long N) const {
  TernaryForm r(degree_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.embed_to(N));
  return r;
}

TernaryForm TernaryForm::substitute(const std::array<TernaryForm, 3>& images) const {
  for (const auto& img : images)
    if (img.degree() != 1) throw DomainError("substitute expects linear forms");
  bool monomial_images = true;
  for (const auto& img : images) monomial_images = monomial_images && img.terms().size() == 1;
  TernaryForm r(degree_);
  if (monomial_images) {
    for (const auto& [e, c] : terms_) {
      CycloElem coeff = c;
      Exponent out{0, 0, 0};
      for (std::size_t v = 0; v < 3; ++v) {
        const auto& [ve, vc] = *images[v].terms().begin();
        for (std::size_t w = 0; w < 3; ++w) out[w] += ve[w] * e[v];
        if (e[v]) coeff *= vc.pow(e[v]);
      }
      r.add_term(out, coeff);
    }
    return r;
  }
  std::array<std::vector<TernaryForm>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v].push_back(monomial({0, 0, 0}));
    for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  for (const auto& [e, c] : terms_) {
    TernaryForm t = powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])];
    t = t * powers[2][static_cast<std::size_t>(e[2])];
    r += c * t;
  }
  return r;
}

CycloElem TernaryForm::evaluate(const std::array<CycloElem, 3>& x) const {
  std::array<std::vector<CycloElem>, 3> pw;
  for (std::size_t v = 0; v < 3; ++v) {
    pw[v].push_back(CycloElem(1));
    for (int k = 1; k <= degree_; ++k) pw[v].push_back(pw[v].back() * x[v]);
  }
  CycloElem s;
  for (const auto& [e, c] : terms_) {
    CycloElem t = c;
    for (std::size_t v = 0; v < 3; ++v)
      if (e[v]) t *= pw[v][static_cast<std::size_t>(e[v])];
    s += t;
  }
  return s;
}

std::string TernaryForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  static const char* names[3] = {"X", "Y", "Z"};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    auto q = c.as_rational();
    std::string coeff;
    bool negative = false;
    if (q) {
      negative = *q < 0;
      Rational mag = abs(*q);
      if (mag != 1) coeff = mag.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < 3; ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out << (coeff.empty() ? "1" : coeff);
    } else {
      if (!coeff.empty()) out << coeff << "*";
      out << mono;
    }
  }
  return out.str();
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

UPoly BinaryForm::dehomogenize() const { return UPoly(coeffs); }

std::string BinaryForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree; ++i) {
    const auto& c = coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*s^" << degree - i << "*t^" << i;
  }
  return first ? "0" : out.str();
}

CycloElem evaluate(const TernaryForm& f, const ProjPoint& p) { return f.evaluate(p.coords()); }

bool lies_on(const TernaryForm& f, const ProjPoint& p) { return evaluate(f, p).is_zero(); }

TernaryForm transform_action(const TernaryForm& f, const Matrix3& m) {
  Matrix3 inv = m.inverse();
  std::array<TernaryForm, 3> images{TernaryForm::linear(inv(0, 0), inv(0, 1), inv(0, 2)),
                                    TernaryForm::linear(inv(1, 0), inv(1, 1), inv(1, 2)),
                                    TernaryForm::linear(inv(2, 0), inv(2, 1), inv(2, 2))};
  return f.substitute(images);
}

TernaryForm transform_action(const TernaryForm& f, const ProjTransform& m) {
  return transform_action(f, m.matrix());
}

std::optional<CycloElem> proportional(const TernaryForm& a, const TernaryForm& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  const auto& [e, cb] = *b.terms().begin();
  CycloElem ca = a.coefficient(e);
  if (ca.is_zero()) return std::nullopt;
  CycloElem ratio = ca / cb;
  for (const auto& [eb, c] : b.terms())
    if (!(a.coefficient(eb) == ratio * c)) return std::nullopt;
  return ratio;
}

std::optional<CycloElem> preserves_up_to_scalar(const TernaryForm& f, const Matrix3& m) {
  return proportional(transform_action(f, m), f);
}

std::optional<CycloElem> preserves_up_to_scalar(const TernaryForm& f, const ProjTransform& m) {
  return preserves_up_to_scalar(f, m.matrix());
}

CoreSplit core_decomposition(const TernaryForm& f) {
  if (f.is_zero()) throw DomainError("core of the zero form");
  int top = 0;
  for (const auto& [e, c] : f.terms()) top = std::max(top, monomial_exponent(e));
  CoreSplit split{TernaryForm(f.degree()), TernaryForm(f.degree()), top};
  for (const auto& [e, c] : f.terms()) (monomial_exponent(e) == top ? split.core : split.low).add_term(e, c);
  return split;
}

long genus(long d) {
  if (d < 1) throw DomainError("genus: degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

namespace {

struct LineIndices {
  int p, q, r;
};

LineIndices line_indices(const ProjLine& line) {
  int p = 0;
  while (line[p].is_zero()) ++p;
  int q = (p == 0) ? 1 : 0;
  int r = (p == 2) ? 1 : 2;
  return {p, q, r};
}

}  // namespace

std::array<std::array<CycloElem, 3>, 2> line_basis(const ProjLine& line) {
  auto [p, q, r] = line_indices(line);
  std::array<CycloElem, 3> b1{}, b2{};
  b1[static_cast<std::size_t>(q)] = CycloElem(1);
  b1[static_cast<std::size_t>(p)] = -line[q];
  b2[static_cast<std::size_t>(r)] = CycloElem(1);
  b2[static_cast<std::size_t>(p)] = -line[r];
  return {b1, b2};
}

std::array<CycloElem, 2> line_parameter(const ProjLine& line, const ProjPoint& p) {
  if (!incident(p, line)) throw DomainError("point " + p.to_string() + " is not on line " + line.to_string());
  auto [pi, q, r] = line_indices(line);
  (void)pi;
  return {p[q], p[r]};
}

BinaryForm restrict_to_line(const TernaryForm& f, const ProjLine& line) {
  auto basis = line_basis(line);
  std::array<TernaryForm, 3> images;
  for (std::size_t v = 0; v < 3; ++v) images[v] = TernaryForm::linear(basis[0][v], basis[1][v], CycloElem(0));
  // images with a single nonzero entry would be turned into monomials by
  // linear(); drop zero terms so substitute sees true monomials
  TernaryForm g = f.substitute(images);
  BinaryForm b;
  b.degree = f.degree();
  b.coeffs.resize(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) b.coeffs[static_cast<std::size_t>(i)] = g.coefficient({f.degree() - i, i, 0});
  return b;
}

int intersection_multiplicity(const TernaryForm& f, const ProjLine& line, const ProjPoint& p) {
  auto param = line_parameter(line, p);
  BinaryForm b = restrict_to_line(f, line);
  if (b.is_zero()) throw DomainError("line " + line.to_string() + " is contained in the curve");
  UPoly u = b.dehomogenize();
  if (param[0].is_zero()) return b.degree - u.degree();
  return u.root_multiplicity(param[1] / param[0]);
}

ProjLine tangent_line(const TernaryForm& f, const ProjPoint& p) {
  if (!lies_on(f, p)) throw DomainError("point " + p.to_string() + " is not on the curve");
  std::array<CycloElem, 3> grad;
  for (int v = 0; v < 3; ++v) grad[static_cast<std::size_t>(v)] = f.partial(v).evaluate(p.coords());
  if (grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero())
    throw DomainError("point " + p.to_string() + " is a singular point of the curve");
  return ProjLine(grad);
}

int line_meet_count(const TernaryForm& f, const ProjLine& line) {
  BinaryForm b = restrict_to_line(f, line);
  if (b.is_zero()) throw DomainError("line " + line.to_string() + " is contained in the curve");
  UPoly u = b.dehomogenize();
  return u.squarefree_degree() + (u.degree() < b.degree ? 1 : 0);
}

std::optional<ProjPoint> find_singular_point(const TernaryForm& f, const std::vector<ProjPoint>& candidates) {
  std::array<TernaryForm, 3> partials{f.partial(0), f.partial(1), f.partial(2)};
  for (const auto& p : candidates) {
    bool all_zero = true;
    for (const auto& d : partials) {
      if (!d.evaluate(p.coords()).is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) return p;
  }
  return std::nullopt;
}

}  // namespace planeaut
