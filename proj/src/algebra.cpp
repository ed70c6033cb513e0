#include "flatbase/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "flatbase/poly.hpp"

namespace flatbase {

Vec AlgebraPresentation::multiply(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
        fail(Errc::ShapeMismatch, "algebra multiply");
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            Rat coef = field.mul(a[i], b[j]);
            const Vec& basis_prod = mul[i][j];
            for (int k = 0; k < dim; ++k) {
                if (basis_prod[k] == 0) continue;
                out[k] = field.add(out[k], field.mul(coef, basis_prod[k]));
            }
        }
    }
    return out;
}

Matrix AlgebraPresentation::left_mult(const Vec& a) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col(dim);
        for (int i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            for (int k = 0; k < dim; ++k)
                col[k] = field.add(col[k], field.mul(a[i], mul[i][j][k]));
        }
        m.set_col(j, col);
    }
    return m;
}

Vec AlgebraPresentation::power(const Vec& a, long long e) const {
    Vec acc = unit;
    Vec base = a;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_ideal_of(const AlgebraPresentation& p, const Subspace& s) {
    for (int r = 0; r < s.basis.rows; ++r) {
        Vec w = s.basis.row(r);
        for (int i = 0; i < p.dim; ++i) {
            if (!s.contains(p.multiply(vec_unit(p.field, p.dim, i), w))) return false;
        }
    }
    return true;
}

namespace {

bool is_nilpotent(const AlgebraPresentation& p, const Vec& a, int bound) {
    Vec cur = a;
    for (int i = 0; i < bound; ++i) {
        if (vec_is_zero(cur)) return true;
        cur = p.multiply(cur, a);
    }
    return vec_is_zero(cur);
}

// Span of the products (basis of a) x (basis of b).
Subspace product_span(const AlgebraPresentation& p, const Subspace& a, const Subspace& b) {
    std::vector<Vec> rows;
    for (int i = 0; i < a.basis.rows; ++i)
        for (int j = 0; j < b.basis.rows; ++j)
            rows.push_back(p.multiply(a.basis.row(i), b.basis.row(j)));
    if (rows.empty()) return Subspace::zero(p.field, p.dim);
    return Subspace::span_of(Matrix::from_rows(p.field, rows));
}

int nilpotency_index_of(const AlgebraPresentation& p, const Subspace& m) {
    if (m.is_zero()) return 1;
    Subspace cur = m;
    for (int t = 1; t <= p.dim + 1; ++t) {
        if (cur.is_zero()) return t;
        Subspace next = product_span(p, cur, m);
        if (next == cur)
            fail(Errc::Internal, "maximal ideal power chain does not reach zero");
        cur = next;
    }
    if (cur.is_zero()) return p.dim + 1;
    fail(Errc::Internal, "maximal ideal power chain does not reach zero");
}

// Minimal polynomial of v, via the first linear dependence among its powers.
poly::Poly minimal_polynomial(const AlgebraPresentation& p, const Vec& v) {
    const FieldDescriptor f = p.field;
    std::vector<Vec> powers{p.unit};
    Vec cur = p.unit;
    for (int d = 1; d <= p.dim + 1; ++d) {
        cur = p.multiply(cur, v);
        Matrix span = Matrix::from_rows(f, powers).transpose();
        if (auto coeffs = solve(span, cur)) {
            Vec mono(d + 1);
            for (int i = 0; i < d; ++i) mono[i] = f.neg((*coeffs)[i]);
            mono[d] = f.from_int(1);
            return poly::make(f, mono);
        }
        powers.push_back(cur);
    }
    fail(Errc::Internal, "no linear dependence among element powers");
}

Vec eval_poly_at(const AlgebraPresentation& p, const poly::Poly& g, const Vec& v) {
    Vec acc(p.dim);
    for (auto it = g.c.rbegin(); it != g.c.rend(); ++it) {
        acc = p.multiply(acc, v);
        acc = vec_add(p.field, acc, vec_scale(p.field, *it, p.unit));
    }
    return acc;
}

struct FieldnessResult {
    bool is_field = false;
    bool undecided = false;
    std::string reason;     // NotLocal witness description when !is_field
    Vec idempotent;         // nontrivial idempotent in the tested algebra, when found
};

// Frobenius matrix x -> x^p as an F_p-linear map.
Matrix frobenius_matrix(const AlgebraPresentation& p) {
    Matrix f(p.field, p.dim, p.dim);
    for (int i = 0; i < p.dim; ++i)
        f.set_col(i, p.power(vec_unit(p.field, p.dim, i), p.field.p));
    return f;
}

// Decides whether a finite-dimensional commutative F_p-algebra is a field:
// Frobenius must have order dividing dim (rules out nilpotents) and fixed
// space of dimension exactly one (rules out splitting).
FieldnessResult fp_quotient_is_field(const AlgebraPresentation& q) {
    FieldnessResult res;
    if (q.dim == 1) {
        res.is_field = true;
        return res;
    }
    Matrix f = frobenius_matrix(q);
    Matrix fq = Matrix::identity(q.field, q.dim);
    for (int i = 0; i < q.dim; ++i) fq = fq * f;
    if (fq != Matrix::identity(q.field, q.dim)) {
        res.reason = "quotient has a nonzero nilpotent (Frobenius is not invertible of order dim)";
        return res;
    }
    int fixed = kernel_basis(f - Matrix::identity(q.field, q.dim)).dim();
    if (fixed != 1) {
        res.reason = "quotient splits: Frobenius fixed space has dimension " +
                     std::to_string(fixed);
        return res;
    }
    res.is_field = true;
    return res;
}

// Bounded decision procedure over Q: hunts for a nilpotent (non-squarefree
// minimal polynomial), an explicit idempotent (coprime factor split at a
// rational root), or a primitive element with a certified irreducible
// minimal polynomial.
FieldnessResult q_quotient_is_field(const AlgebraPresentation& q) {
    const FieldDescriptor f = q.field;
    FieldnessResult res;
    if (q.dim == 1) {
        res.is_field = true;
        return res;
    }

    std::vector<Vec> candidates;
    for (int i = 0; i < q.dim; ++i) candidates.push_back(vec_unit(f, q.dim, i));
    for (int i = 0; i < q.dim; ++i)
        for (int j = i + 1; j < q.dim; ++j)
            candidates.push_back(vec_add(f, vec_unit(f, q.dim, i), vec_unit(f, q.dim, j)));
    for (int i = 1; i < q.dim; ++i) {
        Vec v(q.dim);
        for (int j = 0; j < q.dim; ++j) v[j] = f.from_int(1 + ((i * (j + 1)) % 3));
        candidates.push_back(v);
    }

    bool saw_unknown = false;
    for (const Vec& v : candidates) {
        poly::Poly mp = minimal_polynomial(q, v);
        int d = mp.deg();
        if (d <= 1) continue;

        poly::Poly g = poly::gcd(mp, poly::derivative(mp));
        if (g.deg() > 0) {
            poly::Poly sf = poly::divmod(mp, g).first;
            Vec w = eval_poly_at(q, sf, v);
            if (!vec_is_zero(w) && is_nilpotent(q, w, q.dim + 1)) {
                res.reason = "quotient has a nonzero nilpotent";
                return res;
            }
            continue;
        }

        std::vector<Rat> roots = poly::q_rational_roots(mp);
        if (!roots.empty()) {
            // mp = (x - r) h with h(r) != 0; Bezout gives the idempotent
            // supported on the (x - r) component.
            Rat r = roots.front();
            poly::Poly lin = poly::make(f, {f.neg(r), f.from_int(1)});
            poly::Poly h = poly::divmod(mp, lin).first;
            auto [gcd_lh, u, w] = poly::extended_gcd(lin, h);
            (void)w;
            if (gcd_lh.deg() == 0) {
                Vec idem = eval_poly_at(q, poly::mul(u, lin), v);
                bool is_idem = idem == q.multiply(idem, idem);
                if (is_idem && !vec_is_zero(idem) && idem != q.unit) {
                    res.reason = "nontrivial idempotent found";
                    res.idempotent = idem;
                    return res;
                }
            }
            continue;
        }

        if (d == q.dim) {
            switch (poly::q_irreducible(mp)) {
                case poly::IrredVerdict::Irreducible:
                    res.is_field = true;
                    return res;
                case poly::IrredVerdict::Reducible:
                    res.reason = "primitive element has reducible minimal polynomial";
                    return res;
                case poly::IrredVerdict::Unknown:
                    saw_unknown = true;
                    break;
            }
        }
    }
    res.undecided = true;
    res.reason = saw_unknown ? "irreducibility certificate not found"
                             : "no primitive element located by the bounded search";
    return res;
}

ResidueData make_residue(const AlgebraPresentation& p, const Subspace& m) {
    ResidueData r;
    r.quotient = quotient_space(p.dim, m);
    r.field_dim = r.quotient.dim;

    AlgebraPresentation k;
    k.field = p.field;
    k.dim = r.field_dim;
    k.unit = r.quotient.projection.apply(p.unit);
    k.mul.assign(k.dim, std::vector<Vec>(k.dim));
    for (int i = 0; i < k.dim; ++i) {
        Vec si = r.quotient.section.col(i);
        for (int j = 0; j < k.dim; ++j) {
            Vec sj = r.quotient.section.col(j);
            k.mul[i][j] = r.quotient.projection.apply(p.multiply(si, sj));
        }
    }
    r.algebra = std::move(k);
    return r;
}

// Lift an idempotent of A/m to an honest idempotent of A (Newton step
// e <- 3e^2 - 2e^3, converging because m is nil).
Vec lift_idempotent(const AlgebraPresentation& p, const QuotientSpace& q, const Vec& idem_bar) {
    const FieldDescriptor f = p.field;
    Vec e = q.section.apply(idem_bar);
    for (int i = 0; i <= p.dim + 1; ++i) {
        Vec e2 = p.multiply(e, e);
        if (e2 == e) return e;
        Vec e3 = p.multiply(e2, e);
        e = vec_sub(f, vec_scale(f, f.from_int(3), e2), vec_scale(f, f.from_int(2), e3));
    }
    return e;
}

std::string vec_to_string(const FieldDescriptor& f, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += f.scalar_to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

LocalAlgebra validate_algebra(const AlgebraPresentation& p,
                              const std::optional<Subspace>& asserted_max) {
    const FieldDescriptor f = p.field;
    const int n = p.dim;
    if (n < 1) fail(Errc::SchemaError, "algebra dimension must be positive");
    if (static_cast<int>(p.unit.size()) != n) fail(Errc::SchemaError, "unit vector length");
    if (static_cast<int>(p.mul.size()) != n) fail(Errc::SchemaError, "mul table rows");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(p.mul[i].size()) != n) fail(Errc::SchemaError, "mul table cols");
        for (int j = 0; j < n; ++j)
            if (static_cast<int>(p.mul[i][j].size()) != n)
                fail(Errc::SchemaError, "mul table entry length");
    }

    AlgebraPresentation pres = p;
    for (Rat& x : pres.unit) x = f.normalize(x);
    for (auto& row : pres.mul)
        for (auto& entry : row)
            for (Rat& x : entry) x = f.normalize(x);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pres.mul[i][j] != pres.mul[j][i])
                fail(Errc::NotCommutative,
                     "mul[" + std::to_string(j) + "][" + std::to_string(i) + "] != mul[" +
                         std::to_string(i) + "][" + std::to_string(j) + "]");

    if (pres.left_mult(pres.unit) != Matrix::identity(f, n))
        fail(Errc::BadUnit, "unit does not act as identity");

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                Vec lhs = pres.multiply(pres.mul[i][j], vec_unit(f, n, l));
                Vec rhs = pres.multiply(vec_unit(f, n, i), pres.mul[j][l]);
                if (lhs != rhs)
                    fail(Errc::NotAssociative,
                         "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                             std::to_string(l) + " != e" + std::to_string(i) + " (e" +
                             std::to_string(j) + " e" + std::to_string(l) + ")");
            }
        }
    }

    Subspace max_ideal = Subspace::zero(f, n);
    if (asserted_max) {
        if (asserted_max->ambient != n) fail(Errc::SchemaError, "asserted ideal ambient");
        max_ideal = Subspace::span_of(asserted_max->basis);
        if (!is_ideal_of(pres, max_ideal))
            fail(Errc::NotLocal, "asserted maximal ideal is not an ideal");
        for (int r = 0; r < max_ideal.basis.rows; ++r)
            if (!is_nilpotent(pres, max_ideal.basis.row(r), n + 1))
                fail(Errc::NotLocal, "asserted maximal ideal contains a non-nilpotent element");

        ResidueData residue = make_residue(pres, max_ideal);
        FieldnessResult verdict = f.is_q() ? q_quotient_is_field(residue.algebra)
                                           : fp_quotient_is_field(residue.algebra);
        if (verdict.undecided) fail(Errc::LocalnessUndecided, verdict.reason);
        if (!verdict.is_field)
            fail(Errc::NotLocal, "quotient by asserted ideal is not a field: " + verdict.reason);

        LocalAlgebra a;
        a.presentation = std::move(pres);
        a.maximal_ideal = std::move(max_ideal);
        a.residue = std::move(residue);
        a.nilpotency_index = nilpotency_index_of(a.presentation, a.maximal_ideal);
        a.certificate = LocalCertificate::Verified;
        return a;
    }

    // Trace-form radical: rad = {x : Tr(L_x L_y) = 0 for all y}. Valid in
    // characteristic zero and for p > dim.
    if (!f.is_q() && f.p <= n)
        fail(Errc::LocalnessUndecided,
             "trace-form radical requires p > dim; supply an asserted maximal ideal");

    std::vector<Matrix> left(n);
    for (int i = 0; i < n; ++i) left[i] = pres.left_mult(vec_unit(f, n, i));
    Matrix trace_form(f, n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rat tr = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    tr = f.add(tr, f.mul(left[i].at(k, l), left[j].at(l, k)));
            trace_form.at(i, j) = tr;
            trace_form.at(j, i) = tr;
        }
    }
    max_ideal = kernel_basis(trace_form);

    if (!is_ideal_of(pres, max_ideal))
        fail(Errc::Internal, "trace-form kernel is not an ideal");
    for (int r = 0; r < max_ideal.basis.rows; ++r)
        if (!is_nilpotent(pres, max_ideal.basis.row(r), n + 1))
            fail(Errc::Internal, "trace-form kernel contains a non-nilpotent element");

    ResidueData residue = make_residue(pres, max_ideal);

    if (!f.is_q()) {
        // Count solutions of x^p = x on the whole algebra; they biject with
        // those of the semisimple quotient, so local means a fixed space of
        // dimension one.
        Matrix frob = frobenius_matrix(pres);
        int fixed = kernel_basis(frob - Matrix::identity(f, n)).dim();
        if (fixed != 1)
            fail(Errc::NotLocal,
                 "Frobenius fixed space has dimension " + std::to_string(fixed) +
                     "; the algebra splits");
    } else {
        FieldnessResult verdict = q_quotient_is_field(residue.algebra);
        if (verdict.undecided) fail(Errc::LocalnessUndecided, verdict.reason);
        if (!verdict.is_field) {
            std::string msg = verdict.reason;
            if (!verdict.idempotent.empty()) {
                Vec lifted = lift_idempotent(pres, residue.quotient, verdict.idempotent);
                if (lifted == pres.multiply(lifted, lifted) && !vec_is_zero(lifted) &&
                    lifted != pres.unit)
                    msg += "; witness idempotent " + vec_to_string(f, lifted);
            }
            fail(Errc::NotLocal, msg);
        }
    }

    LocalAlgebra a;
    a.presentation = std::move(pres);
    a.maximal_ideal = std::move(max_ideal);
    a.residue = std::move(residue);
    a.nilpotency_index = nilpotency_index_of(a.presentation, a.maximal_ideal);
    a.certificate = LocalCertificate::Verified;
    return a;
}

ResidueData radical_and_residue(const LocalAlgebra& a) {
    return make_residue(a.presentation, a.maximal_ideal);
}

Subspace ideal_power(const LocalAlgebra& a, const Subspace& ideal, int t) {
    const AlgebraPresentation& p = a.presentation;
    if (ideal.ambient != p.dim) fail(Errc::ShapeMismatch, "ideal ambient");
    if (!is_ideal_of(p, ideal)) fail(Errc::NotAnIdeal, "subspace is not an ideal");
    if (t < 0) fail(Errc::SchemaError, "negative ideal power");
    if (t == 0) return Subspace::full(p.field, p.dim);
    Subspace cur = ideal;
    for (int i = 1; i < t; ++i) {
        if (cur.is_zero()) return cur;
        Subspace next = product_span(p, cur, ideal);
        if (next == cur) return cur;  // stabilized (e.g. the unit ideal)
        cur = next;
    }
    return cur;
}

LocalAlgebra trivial_algebra(FieldDescriptor f) {
    AlgebraPresentation p;
    p.field = f;
    p.dim = 1;
    p.unit = {f.from_int(1)};
    p.mul = {{{f.from_int(1)}}};
    p.provenance = "base-field";

    LocalAlgebra a;
    a.presentation = p;
    a.maximal_ideal = Subspace::zero(f, 1);
    a.residue = make_residue(p, a.maximal_ideal);
    a.nilpotency_index = 1;
    a.certificate = LocalCertificate::ByConstruction;
    return a;
}

LocalAlgebra make_univariate_quotient(FieldDescriptor f, const Vec& monic_coeffs, int e) {
    poly::Poly base = poly::make(f, monic_coeffs);
    if (base.deg() < 1) fail(Errc::SchemaError, "factor must have degree >= 1");
    if (!base.is_monic()) fail(Errc::NotMonic, "factor is not monic");
    if (e < 1) fail(Errc::SchemaError, "exponent must be >= 1");

    bool irreducibility_asserted = false;
    if (!f.is_q()) {
        if (!poly::fp_irreducible(base))
            fail(Errc::ReducibleFactor, "factor is reducible over " + f.to_string());
    } else {
        switch (poly::q_irreducible(base)) {
            case poly::IrredVerdict::Reducible:
                fail(Errc::ReducibleFactor, "factor has a rational root");
            case poly::IrredVerdict::Unknown:
                irreducibility_asserted = true;
                break;
            case poly::IrredVerdict::Irreducible:
                break;
        }
    }

    poly::Poly modulus = poly::pow(base, e);
    const int n = e * base.deg();

    auto pad = [&](const poly::Poly& q) {
        Vec v(n);
        for (std::size_t i = 0; i < q.c.size(); ++i) v[i] = q.c[i];
        return v;
    };

    std::vector<poly::Poly> x_pow(2 * n - 1);
    x_pow[0] = poly::constant(f, f.from_int(1));
    for (int k = 1; k < 2 * n - 1; ++k)
        x_pow[k] = poly::rem(poly::mul(x_pow[k - 1], poly::x_power(f, 1)), modulus);

    AlgebraPresentation p;
    p.field = f;
    p.dim = n;
    p.unit = pad(x_pow[0]);
    p.mul.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.mul[i][j] = pad(x_pow[i + j]);
    p.provenance = irreducibility_asserted ? "univariate-quotient;irreducibility-asserted"
                                           : "univariate-quotient";

    std::vector<Vec> ideal_rows;
    for (int a = 0; a < n; ++a)
        ideal_rows.push_back(pad(poly::rem(poly::mul(base, poly::x_power(f, a)), modulus)));
    Subspace m = Subspace::span_of(Matrix::from_rows(f, ideal_rows));

    LocalAlgebra a;
    a.presentation = std::move(p);
    a.maximal_ideal = std::move(m);
    a.residue = make_residue(a.presentation, a.maximal_ideal);
    a.nilpotency_index = nilpotency_index_of(a.presentation, a.maximal_ideal);
    a.certificate = irreducibility_asserted ? LocalCertificate::Asserted
                                            : LocalCertificate::ByConstruction;
    return a;
}

LocalAlgebra make_monomial_quotient(FieldDescriptor f, int nvars,
                                    const std::vector<std::vector<int>>& gens) {
    if (nvars < 1) fail(Errc::SchemaError, "need at least one variable");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != nvars) fail(Errc::SchemaError, "generator arity");
        for (int e : g)
            if (e < 0) fail(Errc::SchemaError, "negative exponent");
    }

    std::vector<int> bound(nvars, -1);
    for (const auto& g : gens) {
        int support = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (g[v] > 0) {
                if (support >= 0) pure = false;
                support = v;
            }
        }
        if (pure && support >= 0 && (bound[support] < 0 || g[support] < bound[support]))
            bound[support] = g[support];
    }
    for (int v = 0; v < nvars; ++v)
        if (bound[v] < 0)
            fail(Errc::InfiniteColength,
                 "no pure power of variable " + std::to_string(v) + " among the generators");

    auto divisible = [&](const std::vector<int>& mono) {
        for (const auto& g : gens) {
            bool divides = true;
            for (int v = 0; v < nvars; ++v)
                if (mono[v] < g[v]) {
                    divides = false;
                    break;
                }
            if (divides) return true;
        }
        return false;
    };

    std::vector<std::vector<int>> standard;
    std::vector<int> cur(nvars, 0);
    while (true) {
        if (!divisible(cur)) standard.push_back(cur);
        int v = 0;
        while (v < nvars) {
            if (++cur[v] < bound[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }

    // Graded order, ties broken lexicographically with variable 0 heaviest.
    std::sort(standard.begin(), standard.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int ga = std::accumulate(a.begin(), a.end(), 0);
                  int gb = std::accumulate(b.begin(), b.end(), 0);
                  if (ga != gb) return ga < gb;
                  return a > b;
              });

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < standard.size(); ++i) index[standard[i]] = static_cast<int>(i);

    const int n = static_cast<int>(standard.size());
    AlgebraPresentation p;
    p.field = f;
    p.dim = n;
    p.unit = vec_unit(f, n, 0);
    p.mul.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> sum(nvars);
            for (int v = 0; v < nvars; ++v) sum[v] = standard[i][v] + standard[j][v];
            Vec entry(n);
            if (!divisible(sum)) {
                auto it = index.find(sum);
                if (it == index.end())
                    fail(Errc::Internal, "standard monomial lookup failed");
                entry[it->second] = f.from_int(1);
            }
            p.mul[i][j] = std::move(entry);
        }
    }
    p.provenance = "monomial-quotient";

    std::vector<Vec> ideal_rows;
    for (int i = 1; i < n; ++i) ideal_rows.push_back(vec_unit(f, n, i));
    Subspace m = ideal_rows.empty() ? Subspace::zero(f, n)
                                    : Subspace::span_of(Matrix::from_rows(f, ideal_rows));

    LocalAlgebra a;
    a.presentation = std::move(p);
    a.maximal_ideal = std::move(m);
    a.residue = make_residue(a.presentation, a.maximal_ideal);
    a.nilpotency_index = nilpotency_index_of(a.presentation, a.maximal_ideal);
    a.certificate = LocalCertificate::ByConstruction;
    return a;
}

}  // namespace flatbase
