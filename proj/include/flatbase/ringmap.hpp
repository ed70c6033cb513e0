#pragma once

#include "flatbase/algebra.hpp"

namespace flatbase {

/// Validated unital multiplicative K-linear map between local algebras.
struct RingMap {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix matrix;  // target.dim x source.dim

    Vec apply(const Vec& r) const { return matrix.apply(r); }
};

/// Witness that S is free over R: the fiber rank m = l_R(S/mS), a lifted
/// fiber basis eps_1..eps_m, and the bijective assembled map R^m -> S,
/// (r_i) -> sum phi(r_i) eps_i.
struct FlatCertificate {
    RingMap map;
    int rank = 0;
    std::vector<Vec> epsilons;
    Matrix assembled;       // S.dim x (rank * R.dim)
    Subspace fiber_ideal;   // m_R S inside S
    QuotientSpace fiber;    // S -> S/m_R S
};

RingMap validate_ring_map(const AlgebraPtr& source, const AlgebraPtr& target,
                          const Matrix& matrix);

/// Extension of scalars of the ideal I of the source: the ideal of the
/// target generated by phi(I).
Subspace extended_ideal(const RingMap& phi, const Subspace& ideal_in_source);

/// Computes the freeness certificate, or raises NotFree when the map is not
/// flat (dimension mismatch or singular assembled map).
FlatCertificate flat_certificate(const RingMap& phi);

struct Extension {
    AlgebraPtr algebra;
    RingMap inclusion;
};

/// S = (K[y]/(g)) tensor_K R with the inclusion r -> 1 tensor r; requires the
/// residue field of R to be K itself so the fiber stays a field.
Extension extend_by_field(const AlgebraPtr& base, const Vec& monic_irreducible);

}  // namespace flatbase
