#pragma once

// Dense univariate polynomials over Q, constant term first. Internal helper.

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace planeaut::qpoly {

using Poly = std::vector<mpq_class>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// a = q * b + r with deg r < deg b; b nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
/// Monic gcd; zero if both are zero.
Poly gcd(Poly a, Poly b);
/// s with a s = 1 mod m; throws DomainError when not invertible.
Poly inverse_mod(const Poly& a, const Poly& m);
/// Distinct rational roots, or nullopt when the coefficients are too large to
/// enumerate candidates by the rational root theorem.
std::optional<std::vector<mpq_class>> rational_roots(Poly p);

}  // namespace planeaut::qpoly
