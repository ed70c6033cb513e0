#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatbase/subspace.hpp"

namespace flatbase {

/// Finite-dimensional commutative unital K-algebra given by structure
/// constants: e_i * e_j = sum_k mul[i][j][k] e_k.
struct AlgebraPresentation {
    FieldDescriptor field;
    int dim = 0;
    Vec unit;
    std::vector<std::vector<Vec>> mul;
    std::optional<std::string> provenance;

    Vec multiply(const Vec& a, const Vec& b) const;
    /// Matrix of left multiplication by a.
    Matrix left_mult(const Vec& a) const;
    Vec power(const Vec& a, long long e) const;

    bool operator==(const AlgebraPresentation& o) const {
        return field == o.field && dim == o.dim && unit == o.unit && mul == o.mul;
    }
};

enum class LocalCertificate { ByConstruction, Verified, Asserted };

constexpr const char* certificate_name(LocalCertificate c) {
    switch (c) {
        case LocalCertificate::ByConstruction: return "by-construction";
        case LocalCertificate::Verified: return "verified";
        case LocalCertificate::Asserted: return "asserted";
    }
    return "unknown";
}

/// Residue field k = A/m with its inherited multiplication table.
struct ResidueData {
    QuotientSpace quotient;
    AlgebraPresentation algebra;  // the field k, dim = field_dim
    int field_dim = 0;
};

struct LocalAlgebra {
    AlgebraPresentation presentation;
    Subspace maximal_ideal;
    ResidueData residue;
    int nilpotency_index = 1;  // least t with m^t = 0
    LocalCertificate certificate = LocalCertificate::Verified;

    const FieldDescriptor& field() const { return presentation.field; }
    int dim() const { return presentation.dim; }
};

using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

inline AlgebraPtr share(LocalAlgebra a) {
    return std::make_shared<const LocalAlgebra>(std::move(a));
}

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || a->presentation == b->presentation;
}

/// Full validation: commutativity, associativity, unit, then localness.
/// Without an asserted maximal ideal the radical comes from the trace form
/// (char 0, or p > dim); with one, the ideal is verified to be nil with a
/// field quotient.
LocalAlgebra validate_algebra(const AlgebraPresentation& p,
                              const std::optional<Subspace>& asserted_max = std::nullopt);

/// Recomputes the quotient A -> A/m with its field structure.
ResidueData radical_and_residue(const LocalAlgebra& a);

bool is_ideal_of(const AlgebraPresentation& p, const Subspace& s);

/// I^t for an ideal I; I^0 is the whole algebra.
Subspace ideal_power(const LocalAlgebra& a, const Subspace& ideal, int t);

/// K itself as a one-dimensional local algebra.
LocalAlgebra trivial_algebra(FieldDescriptor f);

/// K[x]/(f^e) for monic irreducible f, local with m = (f).
LocalAlgebra make_univariate_quotient(FieldDescriptor f, const Vec& monic_coeffs, int e);

/// K[x_1..x_d]/(monomial ideal), basis the standard monomials in graded-lex
/// order; every variable must be truncated by a pure-power generator.
LocalAlgebra make_monomial_quotient(FieldDescriptor f, int nvars,
                                    const std::vector<std::vector<int>>& gens);

}  // namespace flatbase
