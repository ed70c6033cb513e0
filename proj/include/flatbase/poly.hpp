#pragma once

#include <vector>

#include "flatbase/matrix.hpp"

namespace flatbase::poly {

/// Dense univariate polynomial, coefficients low degree first, trimmed.
struct Poly {
    FieldDescriptor field;
    Vec c;

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == Rat(1); }
};

Poly make(FieldDescriptor f, Vec coeffs);
Poly zero(FieldDescriptor f);
Poly constant(FieldDescriptor f, const Rat& a);
Poly x_power(FieldDescriptor f, int k);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& s);
Poly pow(const Poly& a, int e);

/// Euclidean division; divisor lead coefficient must be invertible.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);

Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);
Rat eval(const Poly& a, const Rat& x);

/// base^e mod m with big exponent.
Poly pow_mod(const Poly& base, const Int& e, const Poly& m);

/// Deterministic irreducibility over F_p (field of f must be Fp).
bool fp_irreducible(const Poly& f);

enum class IrredVerdict { Irreducible, Reducible, Unknown };

/// Rational roots of a monic polynomial over Q (exact, via the integralized
/// companion polynomial).
std::vector<Rat> q_rational_roots(const Poly& f);

/// Best-effort irreducibility over Q for a monic polynomial: rational-root
/// test settles degree <= 3; higher degrees try mod-q certificates.
IrredVerdict q_irreducible(const Poly& f);

}  // namespace flatbase::poly
