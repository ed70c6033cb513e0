#include "flatbase/resolution.hpp"

namespace flatbase {

namespace {

// m . X as a subspace of X's carrier.
Subspace radical_times(const ModulePresentation& x) {
    const FieldDescriptor f = x.algebra->field();
    const Subspace& m = x.algebra->maximal_ideal;
    std::vector<Vec> rows;
    for (int r = 0; r < m.basis.rows; ++r) {
        Matrix act = x.action_of(m.basis.row(r));
        for (int j = 0; j < x.dim; ++j) rows.push_back(act.col(j));
    }
    if (rows.empty()) return Subspace::zero(f, x.dim);
    return Subspace::span_of(Matrix::from_rows(f, rows));
}

// Canonical minimal generators: sections of X/mX forming a k-basis, picked
// greedily in pivot order.
std::vector<Vec> minimal_generators(const ModulePresentation& x) {
    const FieldDescriptor f = x.algebra->field();
    const int nr = x.algebra->dim();
    const int kd = x.algebra->residue.field_dim;
    Subspace mx = radical_times(x);
    QuotientSpace q = quotient_space(x.dim, mx);
    if (q.dim % kd != 0)
        fail(Errc::Internal, "X/mX dimension is not a multiple of the residue degree");
    const int want = q.dim / kd;

    std::vector<Vec> gens;
    Subspace span = mx;
    for (int c = 0; c < q.dim && static_cast<int>(gens.size()) < want; ++c) {
        Vec candidate = q.section.col(c);
        if (span.contains(candidate)) continue;
        gens.push_back(candidate);
        std::vector<Vec> rows;
        for (int i = 0; i < nr; ++i)
            rows.push_back(x.action_of(vec_unit(f, nr, i)).apply(candidate));
        span = span.sum(Subspace::span_of(Matrix::from_rows(f, rows)));
    }
    if (static_cast<int>(gens.size()) != want)
        fail(Errc::Internal, "could not pick a residue basis of X/mX");
    return gens;
}

// K-matrix of R^b -> X, (r_1..r_b) -> sum rho(r_i) g_i.
Matrix cover_matrix(const ModulePresentation& x, const std::vector<Vec>& gens) {
    const FieldDescriptor f = x.algebra->field();
    const int nr = x.algebra->dim();
    Matrix cover(f, x.dim, static_cast<int>(gens.size()) * nr);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int c = 0; c < nr; ++c)
            cover.set_col(static_cast<int>(i) * nr + c,
                          x.action_of(vec_unit(f, nr, c)).apply(gens[i]));
    return cover;
}

bool blocks_in_ideal(const Subspace& m, const Vec& v, int nr) {
    const int blocks = static_cast<int>(v.size()) / nr;
    for (int b = 0; b < blocks; ++b) {
        Vec block(v.begin() + b * nr, v.begin() + (b + 1) * nr);
        if (!m.contains(block)) return false;
    }
    return true;
}

}  // namespace

Resolution minimal_free_resolution(const ModulePresentation& m, int n) {
    if (n < 0) fail(Errc::SchemaError, "resolution length must be >= 0");
    const AlgebraPtr algebra = m.algebra;
    const FieldDescriptor f = algebra->field();
    const int nr = algebra->dim();

    Resolution res;
    res.algebra = algebra;

    ModulePresentation current = m;
    Matrix prev_inclusion;  // syzygy coordinates -> previous free carrier
    for (int step = 0; step <= n; ++step) {
        std::vector<Vec> gens = minimal_generators(current);
        const int b = static_cast<int>(gens.size());
        res.ranks.push_back(b);
        res.free_modules.push_back(power_module(regular_module(algebra), b));

        Matrix cover = cover_matrix(current, gens);
        if (rank(cover) != current.dim)
            fail(Errc::Internal, "minimal cover is not surjective");

        if (step > 0) {
            // d_step = inclusion of the previous syzygy composed with this cover.
            Matrix d = prev_inclusion * cover;
            for (int j = 0; j < b; ++j) {
                Vec slot_unit(static_cast<std::size_t>(b) * nr);
                for (int c = 0; c < nr; ++c)
                    slot_unit[j * nr + c] = algebra->presentation.unit[c];
                if (!blocks_in_ideal(algebra->maximal_ideal, d.apply(slot_unit), nr))
                    fail(Errc::Internal, "differential escapes m . F (resolution not minimal)");
            }
            if (!res.differentials.empty()) {
                const Matrix& prev_d = res.differentials.back();
                if (!(prev_d * d).is_zero())
                    fail(Errc::Internal, "consecutive differentials do not compose to zero");
            }
            res.differentials.push_back(std::move(d));
        } else {
            // H_0 of the complex must recover M: rank-nullity of the cover.
            if (b * nr - kernel_basis(cover).dim() != m.dim)
                fail(Errc::Internal, "free cover does not present M");
        }

        Subspace syzygy = kernel_basis(cover);
        prev_inclusion = syzygy.basis.transpose();
        current = syzygy.dim() == 0
                      ? zero_module(algebra)
                      : submodule_module(res.free_modules.back(), syzygy);
    }
    return res;
}

int ext_dim(const ModulePresentation& m, const ModulePresentation& n, int i, int depth) {
    if (i < 0) fail(Errc::SchemaError, "ext index must be >= 0");
    if (i > depth) fail(Errc::DepthExceeded, "ext index exceeds the configured depth");
    if (!same_algebra(m.algebra, n.algebra))
        fail(Errc::FieldMismatch, "ext endpoints live over different algebras");
    const AlgebraPtr algebra = m.algebra;
    const FieldDescriptor f = algebra->field();
    const int nr = algebra->dim();
    const int dn = n.dim;

    Resolution res = minimal_free_resolution(m, i + 1);

    // Hom(d_j, N): N^{b_(j-1)} -> N^{b_j}, block (j', l) = rho_N(w_(j',l))
    // where w_(j') is the image of the j'-th free generator under d_j.
    auto hom_of = [&](int j) {
        const Matrix& d = res.differentials[j - 1];
        const int b_hi = res.ranks[j];
        const int b_lo = res.ranks[j - 1];
        Matrix out(f, b_hi * dn, b_lo * dn);
        for (int jp = 0; jp < b_hi; ++jp) {
            Vec slot_unit(static_cast<std::size_t>(b_hi) * nr);
            for (int c = 0; c < nr; ++c) slot_unit[jp * nr + c] = algebra->presentation.unit[c];
            Vec w = d.apply(slot_unit);
            for (int l = 0; l < b_lo; ++l) {
                Vec block(w.begin() + l * nr, w.begin() + (l + 1) * nr);
                Matrix rho = n.action_of(block);
                for (int a = 0; a < dn; ++a)
                    for (int bcol = 0; bcol < dn; ++bcol)
                        out.at(jp * dn + a, l * dn + bcol) = rho.at(a, bcol);
            }
        }
        return out;
    };

    Matrix d_next = hom_of(i + 1);
    if (i == 0) return kernel_basis(d_next).dim();

    Matrix d_prev = hom_of(i);
    if (!(d_next * d_prev).is_zero())
        fail(Errc::Internal, "Hom complex differentials do not compose to zero");
    return kernel_basis(d_next).dim() - rank(d_prev);
}

}  // namespace flatbase
