#include "flatbase/ringmap.hpp"

#include "flatbase/poly.hpp"

namespace flatbase {

RingMap validate_ring_map(const AlgebraPtr& source, const AlgebraPtr& target,
                          const Matrix& matrix) {
    const FieldDescriptor f = source->field();
    if (f != target->field()) fail(Errc::FieldMismatch, "ring map fields differ");
    if (matrix.field != f || matrix.rows != target->dim() || matrix.cols != source->dim())
        fail(Errc::ShapeMismatch, "ring map matrix shape");

    RingMap phi{source, target, matrix};
    for (Rat& x : phi.matrix.entries) x = f.normalize(x);

    if (phi.apply(source->presentation.unit) != target->presentation.unit)
        fail(Errc::NotUnital, "map does not send unit to unit");

    const int n = source->dim();
    for (int i = 0; i < n; ++i) {
        Vec phi_ei = phi.matrix.col(i);
        for (int j = i; j < n; ++j) {
            Vec lhs = phi.apply(source->presentation.mul[i][j]);
            Vec rhs = target->presentation.multiply(phi_ei, phi.matrix.col(j));
            if (lhs != rhs)
                fail(Errc::NotMultiplicative,
                     "phi(e" + std::to_string(i) + " e" + std::to_string(j) +
                         ") != phi(e" + std::to_string(i) + ") phi(e" + std::to_string(j) + ")");
        }
    }

    // Automatic since m_R is nil, asserted anyway.
    for (int r = 0; r < source->maximal_ideal.basis.rows; ++r)
        if (!target->maximal_ideal.contains(phi.apply(source->maximal_ideal.basis.row(r))))
            fail(Errc::Internal, "phi(m_R) escapes m_S");

    return phi;
}

Subspace extended_ideal(const RingMap& phi, const Subspace& ideal_in_source) {
    const AlgebraPresentation& s = phi.target->presentation;
    std::vector<Vec> rows;
    for (int r = 0; r < ideal_in_source.basis.rows; ++r) {
        Vec image = phi.apply(ideal_in_source.basis.row(r));
        for (int j = 0; j < s.dim; ++j)
            rows.push_back(s.multiply(image, vec_unit(s.field, s.dim, j)));
    }
    if (rows.empty()) return Subspace::zero(s.field, s.dim);
    return Subspace::span_of(Matrix::from_rows(s.field, rows));
}

FlatCertificate flat_certificate(const RingMap& phi) {
    const FieldDescriptor f = phi.source->field();
    const AlgebraPresentation& s = phi.target->presentation;
    const int dim_r = phi.source->dim();
    const int dim_s = phi.target->dim();
    const int dim_k = phi.source->residue.field_dim;

    FlatCertificate cert;
    cert.map = phi;
    cert.fiber_ideal = extended_ideal(phi, phi.source->maximal_ideal);
    cert.fiber = quotient_space(dim_s, cert.fiber_ideal);

    if (cert.fiber.dim % dim_k != 0)
        fail(Errc::Internal, "fiber dimension is not a multiple of the residue degree");
    cert.rank = cert.fiber.dim / dim_k;

    // Greedy k-basis of the fiber: walk the canonical sections in pivot
    // order, keeping a section vector whenever it is independent over k of
    // what has been kept, i.e. outside m_R S + sum R eps.
    Subspace span = cert.fiber_ideal;
    for (int c = 0; c < cert.fiber.dim && static_cast<int>(cert.epsilons.size()) < cert.rank;
         ++c) {
        Vec candidate = cert.fiber.section.col(c);
        if (span.contains(candidate)) continue;
        cert.epsilons.push_back(candidate);
        std::vector<Vec> rows;
        for (int i = 0; i < dim_r; ++i)
            rows.push_back(s.multiply(phi.apply(vec_unit(f, dim_r, i)), candidate));
        span = span.sum(Subspace::span_of(Matrix::from_rows(f, rows)));
    }
    if (static_cast<int>(cert.epsilons.size()) != cert.rank)
        fail(Errc::Internal, "could not assemble a residue basis of the fiber");

    if (cert.rank * dim_r != dim_s)
        fail(Errc::NotFree, "dim_K S = " + std::to_string(dim_s) + " but rank * dim_K R = " +
                                std::to_string(cert.rank * dim_r) + "; S is not free over R");

    cert.assembled = Matrix(f, dim_s, cert.rank * dim_r);
    for (int i = 0; i < cert.rank; ++i) {
        Matrix mult_eps = s.left_mult(cert.epsilons[i]);
        Matrix block = mult_eps * phi.matrix;  // r -> phi(r) eps_i
        for (int c = 0; c < dim_r; ++c) cert.assembled.set_col(i * dim_r + c, block.col(c));
    }
    if (rank(cert.assembled) != dim_s)
        fail(Errc::NotFree, "assembled map R^m -> S is singular; S is not free over R");

    return cert;
}

Extension extend_by_field(const AlgebraPtr& base, const Vec& monic_irreducible) {
    const FieldDescriptor f = base->field();
    if (base->residue.field_dim != 1)
        fail(Errc::ResidueNotBase,
             "base residue field is larger than K; fiber would not stay a field");

    poly::Poly g = poly::make(f, monic_irreducible);
    if (!g.is_monic() || g.deg() < 1) fail(Errc::NotMonic, "extension polynomial must be monic");
    if (!f.is_q()) {
        if (!poly::fp_irreducible(g))
            fail(Errc::ReducibleFactor, "extension polynomial is reducible");
    } else if (poly::q_irreducible(g) == poly::IrredVerdict::Reducible) {
        fail(Errc::ReducibleFactor, "extension polynomial has a rational root");
    }

    const int dg = g.deg();
    const int nr = base->dim();
    const int n = dg * nr;
    const AlgebraPresentation& r = base->presentation;

    // Basis y^a tensor e_i at index a*nr + i.
    std::vector<poly::Poly> y_pow(2 * dg - 1);
    y_pow[0] = poly::constant(f, f.from_int(1));
    for (int k = 1; k < 2 * dg - 1; ++k)
        y_pow[k] = poly::rem(poly::mul(y_pow[k - 1], poly::x_power(f, 1)), g);

    AlgebraPresentation p;
    p.field = f;
    p.dim = n;
    p.unit = Vec(n);
    for (int i = 0; i < nr; ++i) p.unit[i] = r.unit[i];
    p.mul.assign(n, std::vector<Vec>(n));
    for (int a = 0; a < dg; ++a) {
        for (int i = 0; i < nr; ++i) {
            for (int b = 0; b < dg; ++b) {
                for (int j = 0; j < nr; ++j) {
                    const poly::Poly& yc = y_pow[a + b];
                    const Vec& rc = r.mul[i][j];
                    Vec entry(n);
                    for (std::size_t t = 0; t < yc.c.size(); ++t) {
                        if (yc.c[t] == 0) continue;
                        for (int u = 0; u < nr; ++u) {
                            if (rc[u] == 0) continue;
                            entry[static_cast<int>(t) * nr + u] =
                                f.add(entry[static_cast<int>(t) * nr + u],
                                      f.mul(yc.c[t], rc[u]));
                        }
                    }
                    p.mul[a * nr + i][b * nr + j] = std::move(entry);
                }
            }
        }
    }
    p.provenance = "field-extension";

    // m_S = m_R . S: blocks of the base maximal ideal in every y-degree.
    std::vector<Vec> ideal_rows;
    for (int a = 0; a < dg; ++a) {
        for (int rr = 0; rr < base->maximal_ideal.basis.rows; ++rr) {
            Vec w(n);
            for (int i = 0; i < nr; ++i) w[a * nr + i] = base->maximal_ideal.basis.at(rr, i);
            ideal_rows.push_back(std::move(w));
        }
    }
    Subspace m = ideal_rows.empty() ? Subspace::zero(f, n)
                                    : Subspace::span_of(Matrix::from_rows(f, ideal_rows));

    LocalAlgebra s;
    s.presentation = std::move(p);
    s.maximal_ideal = std::move(m);
    s.residue = radical_and_residue(LocalAlgebra{s.presentation, s.maximal_ideal, {}, 1,
                                                 LocalCertificate::ByConstruction});
    // m_S^t = m_R^t . S, so the nilpotency index transfers from the base.
    s.nilpotency_index = base->nilpotency_index;
    s.certificate = LocalCertificate::ByConstruction;

    AlgebraPtr target = share(std::move(s));

    Matrix incl(f, n, nr);
    for (int i = 0; i < nr; ++i) incl.at(i, i) = f.from_int(1);
    RingMap phi = validate_ring_map(base, target, incl);

    return Extension{target, phi};
}

}  // namespace flatbase
