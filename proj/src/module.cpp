#include "flatbase/module.hpp"

namespace flatbase {

namespace {

// Matrix of T -> T * B on row-major flattened (rows x cols) matrices T.
Matrix op_right_mult(const Matrix& b, int rows) {
    const FieldDescriptor f = b.field;
    int cols = b.rows;  // T has b.rows columns before multiplication
    Matrix out(f, rows * b.cols, rows * cols);
    for (int u = 0; u < rows; ++u)
        for (int v = 0; v < b.cols; ++v)
            for (int w = 0; w < cols; ++w)
                out.at(u * b.cols + v, u * cols + w) = b.at(w, v);
    return out;
}

// Matrix of T -> A * T on row-major flattened (a.cols x cols) matrices T.
Matrix op_left_mult(const Matrix& a, int cols) {
    const FieldDescriptor f = a.field;
    Matrix out(f, a.rows * cols, a.cols * cols);
    for (int u = 0; u < a.rows; ++u)
        for (int v = 0; v < cols; ++v)
            for (int w = 0; w < a.cols; ++w) out.at(u * cols + v, w * cols + v) = a.at(u, w);
    return out;
}

// Coordinates of v against the RREF basis of u (v must lie in u).
Vec coords_in(const Subspace& u, const Vec& v) {
    if (!u.contains(v)) fail(Errc::Internal, "vector escapes the subspace");
    Vec c(u.dim());
    for (int r = 0; r < u.dim(); ++r) c[r] = u.basis.field.normalize(v[u.pivots[r]]);
    return c;
}

}  // namespace

Vec flatten(const Matrix& t) { return t.entries; }

Matrix unflatten(FieldDescriptor f, const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols) fail(Errc::ShapeMismatch, "unflatten");
    Matrix m(f, rows, cols);
    m.entries = v;
    return m;
}

Matrix ModulePresentation::action_of(const Vec& r) const {
    const FieldDescriptor f = algebra->field();
    if (static_cast<int>(r.size()) != algebra->dim()) fail(Errc::ShapeMismatch, "action_of");
    Matrix out(f, dim, dim);
    for (int i = 0; i < algebra->dim(); ++i) {
        if (r[i] == 0) continue;
        out = out + actions[i].scaled(r[i]);
    }
    return out;
}

ModulePresentation validate_module(const AlgebraPtr& algebra,
                                   const std::vector<Matrix>& actions) {
    const FieldDescriptor f = algebra->field();
    const int n = algebra->dim();
    if (static_cast<int>(actions.size()) != n)
        fail(Errc::SchemaError, "one action matrix per algebra basis element required");
    int d = actions.empty() ? 0 : actions[0].rows;
    for (const Matrix& m : actions)
        if (m.field != f || m.rows != d || m.cols != d)
            fail(Errc::SchemaError, "action matrices must be square of equal size");

    ModulePresentation mod;
    mod.algebra = algebra;
    mod.dim = d;
    mod.actions = actions;
    for (Matrix& m : mod.actions)
        for (Rat& x : m.entries) x = f.normalize(x);

    if (mod.action_of(algebra->presentation.unit) != Matrix::identity(f, d))
        fail(Errc::NotAModule, "unit does not act as the identity");

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix lhs = mod.actions[i] * mod.actions[j];
            Matrix rhs = mod.action_of(algebra->presentation.mul[i][j]);
            if (lhs != rhs)
                fail(Errc::NotAModule, "rho(e" + std::to_string(i) + ") rho(e" +
                                           std::to_string(j) + ") != rho(e" + std::to_string(i) +
                                           " e" + std::to_string(j) + ")");
        }
    }
    return mod;
}

ModuleMap validate_module_map(ModulePresentation source, ModulePresentation target,
                              const Matrix& matrix) {
    if (!same_algebra(source.algebra, target.algebra))
        fail(Errc::FieldMismatch, "module map endpoints live over different algebras");
    if (matrix.rows != target.dim || matrix.cols != source.dim)
        fail(Errc::ShapeMismatch, "module map matrix shape");
    Matrix m = matrix;
    for (Rat& x : m.entries) x = source.algebra->field().normalize(x);
    for (int i = 0; i < source.algebra->dim(); ++i)
        if (m * source.actions[i] != target.actions[i] * m)
            fail(Errc::NotAModule, "map is not equivariant for basis element " + std::to_string(i));
    return ModuleMap{std::move(source), std::move(target), std::move(m)};
}

ModulePresentation regular_module(const AlgebraPtr& algebra) {
    std::vector<Matrix> actions;
    for (int i = 0; i < algebra->dim(); ++i)
        actions.push_back(algebra->presentation.left_mult(
            vec_unit(algebra->field(), algebra->dim(), i)));
    return validate_module(algebra, actions);
}

ModulePresentation zero_module(const AlgebraPtr& algebra) {
    std::vector<Matrix> actions(algebra->dim(), Matrix(algebra->field(), 0, 0));
    return validate_module(algebra, actions);
}

ModulePresentation power_module(const ModulePresentation& m, int copies) {
    const FieldDescriptor f = m.algebra->field();
    std::vector<Matrix> actions;
    for (const Matrix& a : m.actions) {
        Matrix big(f, m.dim * copies, m.dim * copies);
        for (int s = 0; s < copies; ++s)
            for (int i = 0; i < m.dim; ++i)
                for (int j = 0; j < m.dim; ++j)
                    big.at(s * m.dim + i, s * m.dim + j) = a.at(i, j);
        actions.push_back(std::move(big));
    }
    ModulePresentation out;
    out.algebra = m.algebra;
    out.dim = m.dim * copies;
    out.actions = std::move(actions);
    return out;
}

bool is_submodule(const ModulePresentation& m, const Subspace& u) {
    if (u.ambient != m.dim) fail(Errc::ShapeMismatch, "submodule ambient");
    for (const Matrix& a : m.actions)
        for (int r = 0; r < u.basis.rows; ++r)
            if (!u.contains(a.apply(u.basis.row(r)))) return false;
    return true;
}

Subspace generated_submodule(const ModulePresentation& m, const std::vector<Vec>& gens) {
    const FieldDescriptor f = m.algebra->field();
    Subspace cur = gens.empty() ? Subspace::zero(f, m.dim)
                                : Subspace::span_of(Matrix::from_rows(f, gens));
    while (true) {
        std::vector<Vec> rows;
        for (int r = 0; r < cur.basis.rows; ++r) rows.push_back(cur.basis.row(r));
        for (const Matrix& a : m.actions)
            for (int r = 0; r < cur.basis.rows; ++r) rows.push_back(a.apply(cur.basis.row(r)));
        Subspace next = rows.empty() ? cur : Subspace::span_of(Matrix::from_rows(f, rows));
        if (next == cur) return cur;
        cur = next;
    }
}

ModulePresentation submodule_module(const ModulePresentation& m, const Subspace& u) {
    if (!is_submodule(m, u)) fail(Errc::NotAModule, "subspace is not a submodule");
    const FieldDescriptor f = m.algebra->field();
    std::vector<Matrix> actions;
    for (const Matrix& a : m.actions) {
        Matrix small(f, u.dim(), u.dim());
        for (int j = 0; j < u.dim(); ++j)
            small.set_col(j, coords_in(u, a.apply(u.basis.row(j))));
        actions.push_back(std::move(small));
    }
    return validate_module(m.algebra, actions);
}

QuotientModule quotient_module(const ModulePresentation& m, const Subspace& u) {
    if (!is_submodule(m, u)) fail(Errc::NotAModule, "subspace is not a submodule");
    QuotientSpace q = quotient_space(m.dim, u);
    std::vector<Matrix> actions;
    for (const Matrix& a : m.actions) actions.push_back(q.projection * a * q.section);
    QuotientModule out;
    out.module = validate_module(m.algebra, actions);
    out.carrier = std::move(q);
    return out;
}

int length(const ModulePresentation& m) {
    int kd = m.algebra->residue.field_dim;
    if (m.dim % kd != 0)
        fail(Errc::Internal, "module dimension is not a multiple of the residue degree");
    return m.dim / kd;
}

int composition_series_length(const ModulePresentation& m) {
    ModulePresentation cur = m;
    int steps = 0;
    while (cur.dim > 0) {
        Subspace socle = colon_submodule(cur, cur.algebra->maximal_ideal);
        if (socle.is_zero()) fail(Errc::Internal, "nonzero module with zero socle");
        Subspace simple = generated_submodule(cur, {socle.basis.row(0)});
        cur = quotient_module(cur, simple).module;
        ++steps;
    }
    return steps;
}

Subspace colon_submodule(const ModulePresentation& m, const Subspace& ideal) {
    if (!is_ideal_of(m.algebra->presentation, ideal))
        fail(Errc::NotAnIdeal, "colon against a non-ideal");
    const FieldDescriptor f = m.algebra->field();
    Matrix stacked(f, 0, m.dim);
    for (int r = 0; r < ideal.basis.rows; ++r)
        stacked = Matrix::vstack(stacked, m.action_of(ideal.basis.row(r)));
    return kernel_basis(stacked);
}

Subspace annihilator(const ModulePresentation& m) {
    const FieldDescriptor f = m.algebra->field();
    const int n = m.algebra->dim();
    Matrix big(f, m.dim * m.dim, n);
    for (int i = 0; i < n; ++i) big.set_col(i, flatten(m.actions[i]));
    return kernel_basis(big);
}

ModulePresentation restrict_scalars(const ModulePresentation& m, const RingMap& phi) {
    if (!same_algebra(m.algebra, phi.target))
        fail(Errc::FieldMismatch, "module is not over the map target");
    std::vector<Matrix> actions;
    for (int i = 0; i < phi.source->dim(); ++i)
        actions.push_back(m.action_of(phi.apply(vec_unit(phi.source->field(), phi.source->dim(), i))));
    return validate_module(phi.source, actions);
}

TensorUp tensor_up(const ModulePresentation& a, const RingMap& phi) {
    if (!same_algebra(a.algebra, phi.source))
        fail(Errc::FieldMismatch, "module is not over the map source");
    const FieldDescriptor f = phi.source->field();
    const AlgebraPresentation& s = phi.target->presentation;
    const int da = a.dim;
    const int ds = s.dim;
    const int dr = phi.source->dim();

    // Relations (r a) tensor s - a tensor (phi(r) s), over all basis triples.
    std::vector<Vec> rel_rows;
    for (int i = 0; i < dr; ++i) {
        const Matrix& act = a.actions[i];
        Matrix mult_phi = s.left_mult(phi.matrix.col(i));
        for (int u = 0; u < da; ++u) {
            Vec ra = act.col(u);
            for (int v = 0; v < ds; ++v) {
                Vec gen(da * ds);
                for (int w = 0; w < da; ++w) gen[w * ds + v] = ra[w];
                Vec rs = mult_phi.col(v);
                for (int w = 0; w < ds; ++w)
                    gen[u * ds + w] = f.sub(gen[u * ds + w], rs[w]);
                rel_rows.push_back(std::move(gen));
            }
        }
    }
    TensorUp out;
    out.relations = rel_rows.empty() ? Subspace::zero(f, da * ds)
                                     : Subspace::span_of(Matrix::from_rows(f, rel_rows));
    out.carrier = quotient_space(da * ds, out.relations);

    // S acts on the right tensor factor; the relation subspace must be stable.
    std::vector<Matrix> actions;
    for (int j = 0; j < ds; ++j) {
        Matrix tj = op_right_mult(s.left_mult(vec_unit(f, ds, j)).transpose(), da);
        for (int r = 0; r < out.relations.basis.rows; ++r)
            if (!out.relations.contains(tj.apply(out.relations.basis.row(r))))
                fail(Errc::Internal, "tensor relations are not S-stable");
        actions.push_back(out.carrier.projection * tj * out.carrier.section);
    }
    out.module = validate_module(phi.target, actions);

    Matrix unit_mat(f, out.carrier.dim, da);
    for (int u = 0; u < da; ++u) {
        Vec au_tensor_one(da * ds);
        for (int w = 0; w < ds; ++w) au_tensor_one[u * ds + w] = s.unit[w];
        unit_mat.set_col(u, out.carrier.projection.apply(au_tensor_one));
    }
    out.unit_map = validate_module_map(a, restrict_scalars(out.module, phi), unit_mat);
    return out;
}

HomRS hom_rs(const RingMap& phi, const ModulePresentation& a) {
    if (!same_algebra(a.algebra, phi.source))
        fail(Errc::FieldMismatch, "module is not over the map source");
    const FieldDescriptor f = phi.source->field();
    const AlgebraPresentation& s = phi.target->presentation;
    const int da = a.dim;
    const int ds = s.dim;

    // R-linearity: T(phi(e_i) x) = e_i T(x), i.e. T L_{phi(e_i)} = rho(e_i) T.
    Matrix constraints(f, 0, da * ds);
    for (int i = 0; i < phi.source->dim(); ++i) {
        Matrix c = op_right_mult(s.left_mult(phi.matrix.col(i)), da) -
                   op_left_mult(a.actions[i], ds);
        constraints = Matrix::vstack(constraints, c);
    }
    HomRS out;
    out.carrier = kernel_basis(constraints);
    const int h = out.carrier.dim();

    std::vector<Matrix> actions;
    for (int j = 0; j < ds; ++j) {
        Matrix rj = op_right_mult(s.left_mult(vec_unit(f, ds, j)), da);  // (s.T)(x) = T(sx)
        Matrix act(f, h, h);
        for (int b = 0; b < h; ++b) {
            Vec image = rj.apply(out.carrier.basis.row(b));
            if (!out.carrier.contains(image))
                fail(Errc::Internal, "S-action does not preserve Hom_R(S, A)");
            act.set_col(b, [&] {
                Vec c(h);
                for (int r = 0; r < h; ++r) c[r] = f.normalize(image[out.carrier.pivots[r]]);
                return c;
            }());
        }
        actions.push_back(std::move(act));
    }
    out.module = validate_module(phi.target, actions);

    Matrix eval(f, da, h);
    for (int b = 0; b < h; ++b) {
        Matrix t = unflatten(f, out.carrier.basis.row(b), da, ds);
        eval.set_col(b, t.apply(s.unit));
    }
    out.evaluation = validate_module_map(restrict_scalars(out.module, phi), a, eval);
    return out;
}

HomModule hom_module(const ModulePresentation& m, const ModulePresentation& n) {
    if (!same_algebra(m.algebra, n.algebra))
        fail(Errc::FieldMismatch, "hom endpoints live over different algebras");
    const FieldDescriptor f = m.algebra->field();
    const int nn = m.algebra->dim();

    Matrix constraints(f, 0, n.dim * m.dim);
    for (int i = 0; i < nn; ++i) {
        Matrix c = op_right_mult(m.actions[i], n.dim) - op_left_mult(n.actions[i], m.dim);
        constraints = Matrix::vstack(constraints, c);
    }
    HomModule out;
    out.carrier = kernel_basis(constraints);
    const int h = out.carrier.dim();

    std::vector<Matrix> actions;
    for (int i = 0; i < nn; ++i) {
        Matrix li = op_left_mult(n.actions[i], m.dim);  // (r.T) = rho_N(r) T
        Matrix act(f, h, h);
        for (int b = 0; b < h; ++b) {
            Vec image = li.apply(out.carrier.basis.row(b));
            if (!out.carrier.contains(image))
                fail(Errc::Internal, "algebra action does not preserve Hom(M, N)");
            Vec c(h);
            for (int r = 0; r < h; ++r) c[r] = f.normalize(image[out.carrier.pivots[r]]);
            act.set_col(b, c);
        }
        actions.push_back(std::move(act));
    }
    out.module = validate_module(m.algebra, actions);
    return out;
}

ModulePresentation matlis_dual(const ModulePresentation& m) {
    std::vector<Matrix> actions;
    for (const Matrix& a : m.actions) actions.push_back(a.transpose());
    return validate_module(m.algebra, actions);
}

ModuleMap double_dual_map(const ModulePresentation& m) {
    ModulePresentation dd = matlis_dual(matlis_dual(m));
    return validate_module_map(m, dd, Matrix::identity(m.algebra->field(), m.dim));
}

std::optional<int> torsion_index(const ModulePresentation& m, const Subspace& ideal) {
    if (!is_ideal_of(m.algebra->presentation, ideal))
        fail(Errc::NotAnIdeal, "torsion index against a non-ideal");
    if (m.dim == 0) return 0;
    auto kills = [&](const Subspace& power) {
        for (int r = 0; r < power.basis.rows; ++r)
            if (!m.action_of(power.basis.row(r)).is_zero()) return false;
        return true;
    };
    Subspace prev = Subspace::full(m.algebra->field(), m.algebra->dim());
    for (int t = 1;; ++t) {
        Subspace cur = ideal_power(*m.algebra, ideal, t);
        if (kills(cur)) return t;
        if (cur == prev) return std::nullopt;  // stabilized without killing M
        prev = cur;
    }
}

std::vector<Subspace> attached_primes(const ModulePresentation& m) {
    if (m.dim == 0) return {};
    return {m.algebra->maximal_ideal};
}

}  // namespace flatbase
