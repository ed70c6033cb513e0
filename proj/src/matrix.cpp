#include "flatbase/matrix.hpp"

namespace flatbase {

Matrix Matrix::identity(FieldDescriptor f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.from_int(1);
    return m;
}

Matrix Matrix::from_rows(FieldDescriptor f, const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            fail(Errc::ShapeMismatch, "ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = f.normalize(rows[i][j]);
    }
    return m;
}

Vec Matrix::row(int i) const {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(int j) const {
    Vec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    if (static_cast<int>(v.size()) != rows) fail(Errc::ShapeMismatch, "set_col size");
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(field, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field != rhs.field) fail(Errc::FieldMismatch, "matrix product");
    if (cols != rhs.rows) fail(Errc::ShapeMismatch, "matrix product");
    Matrix out(field, rows, rhs.cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                const Rat& b = rhs.at(k, j);
                if (b == 0) continue;
                out.at(i, j) = field.add(out.at(i, j), field.mul(a, b));
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (field != rhs.field || rows != rhs.rows || cols != rhs.cols)
        fail(Errc::ShapeMismatch, "matrix sum");
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = field.add(entries[i], rhs.entries[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (field != rhs.field || rows != rhs.rows || cols != rhs.cols)
        fail(Errc::ShapeMismatch, "matrix difference");
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = field.sub(entries[i], rhs.entries[i]);
    return out;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = field.mul(entries[i], c);
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols) fail(Errc::ShapeMismatch, "matrix apply");
    Vec out(rows);
    for (int i = 0; i < rows; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols; ++j) {
            if (at(i, j) == 0 || x[j] == 0) continue;
            acc = field.add(acc, field.mul(at(i, j), x[j]));
        }
        out[i] = acc;
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const Rat& e : entries)
        if (e != 0) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.field != bottom.field || top.cols != bottom.cols)
        fail(Errc::ShapeMismatch, "vstack");
    Matrix out(top.field, top.rows + bottom.rows, top.cols);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows; ++i)
        for (int j = 0; j < top.cols; ++j) out.at(top.rows + i, j) = bottom.at(i, j);
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.field != right.field || left.rows != right.rows)
        fail(Errc::ShapeMismatch, "hstack");
    Matrix out(left.field, left.rows, left.cols + right.cols);
    for (int i = 0; i < left.rows; ++i) {
        for (int j = 0; j < left.cols; ++j) out.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols; ++j) out.at(i, left.cols + j) = right.at(i, j);
    }
    return out;
}

Vec vec_zero(int n) { return Vec(n); }

Vec vec_unit(FieldDescriptor f, int n, int i) {
    Vec v(n);
    v[i] = f.from_int(1);
    return v;
}

Vec vec_add(FieldDescriptor f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector sum");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_sub(FieldDescriptor f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector difference");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vec vec_scale(FieldDescriptor f, const Rat& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

std::pair<Matrix, std::vector<int>> rref(const Matrix& m) {
    Matrix a = m;
    const FieldDescriptor f = m.field;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows; ++i) {
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        Rat inv = f.inv(a.at(r, c));
        for (int j = c; j < a.cols; ++j) a.at(r, j) = f.mul(inv, a.at(r, j));
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat factor = a.at(i, c);
            for (int j = c; j < a.cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).second.size()); }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows) fail(Errc::ShapeMismatch, "solve rhs");
    Matrix aug(m.field, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = m.field.normalize(b[i]);
    }
    auto [red, pivots] = rref(aug);
    Vec x(m.cols);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == m.cols) return std::nullopt;  // pivot in rhs column
        x[pivots[k]] = red.at(static_cast<int>(k), m.cols);
    }
    return x;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.field, m.rows));
    auto [red, pivots] = rref(aug);
    if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
    for (int k = 0; k < m.rows; ++k)
        if (pivots[k] != k) return std::nullopt;
    Matrix inv(m.field, m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) inv.at(i, j) = red.at(i, m.cols + j);
    return inv;
}

}  // namespace flatbase
