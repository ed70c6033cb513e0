#include "flatbase/subspace.hpp"

namespace flatbase {

Subspace Subspace::zero(FieldDescriptor f, int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(FieldDescriptor f, int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(f, ambient);
    for (int i = 0; i < ambient; ++i) s.pivots.push_back(i);
    return s;
}

Subspace Subspace::span_of(const Matrix& rows) {
    auto [red, pivots] = rref(rows);
    Subspace s;
    s.ambient = rows.cols;
    s.pivots = pivots;
    int r = static_cast<int>(pivots.size());
    s.basis = Matrix(rows.field, r, rows.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = red.at(i, j);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient) fail(Errc::ShapeMismatch, "reduce");
    const FieldDescriptor f = basis.field;
    Vec out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.normalize(out[i]);
    for (int r = 0; r < basis.rows; ++r) {
        const Rat& c = out[pivots[r]];
        if (c == 0) continue;
        Rat factor = c;
        for (int j = 0; j < ambient; ++j)
            out[j] = f.sub(out[j], f.mul(factor, basis.at(r, j)));
    }
    return out;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient != other.ambient) fail(Errc::ShapeMismatch, "subspace sum");
    return span_of(Matrix::vstack(basis, other.basis));
}

Subspace kernel_basis(const Matrix& m) {
    auto [red, pivots] = rref(m);
    const FieldDescriptor f = m.field;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> rows;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols);
        v[c] = f.from_int(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(red.at(static_cast<int>(r), c));
        rows.push_back(std::move(v));
    }
    Matrix gen = Matrix::from_rows(f, rows);
    if (rows.empty()) gen = Matrix(f, 0, m.cols);
    return Subspace::span_of(gen);
}

QuotientSpace quotient_space(int ambient_dim, const Subspace& ker) {
    if (ker.ambient != ambient_dim) fail(Errc::ShapeMismatch, "quotient kernel ambient");
    const FieldDescriptor f = ker.basis.field;
    QuotientSpace q;
    q.ambient = ambient_dim;
    q.kernel = ker;
    q.dim = ambient_dim - ker.dim();

    std::vector<bool> is_pivot(ambient_dim, false);
    for (int c : ker.pivots) is_pivot[c] = true;
    std::vector<int> complement;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) complement.push_back(c);

    q.section = Matrix(f, ambient_dim, q.dim);
    for (int j = 0; j < q.dim; ++j) q.section.at(complement[j], j) = f.from_int(1);

    // Projection reads the complement coordinates of the canonical
    // representative modulo the kernel.
    q.projection = Matrix(f, q.dim, ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) {
        Vec reduced = ker.reduce(vec_unit(f, ambient_dim, c));
        for (int j = 0; j < q.dim; ++j) q.projection.at(j, c) = reduced[complement[j]];
    }
    return q;
}

}  // namespace flatbase
