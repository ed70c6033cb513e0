#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flatbase/field.hpp"

namespace flatbase {

using Vec = std::vector<Rat>;

/// Dense matrix with exact entries, row-major. All arithmetic is routed
/// through the field descriptor so F_p values stay reduced.
struct Matrix {
    FieldDescriptor field;
    int rows = 0;
    int cols = 0;
    std::vector<Rat> entries;

    Matrix() = default;
    Matrix(FieldDescriptor f, int r, int c)
        : field(f), rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    static Matrix identity(FieldDescriptor f, int n);
    static Matrix from_rows(FieldDescriptor f, const std::vector<Vec>& rows);

    Rat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rat& c) const;
    Vec apply(const Vec& x) const;

    bool is_zero() const;
    bool operator==(const Matrix&) const = default;

    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);
};

// Vector helpers over an explicit field.
Vec vec_zero(int n);
Vec vec_unit(FieldDescriptor f, int n, int i);
Vec vec_add(FieldDescriptor f, const Vec& a, const Vec& b);
Vec vec_sub(FieldDescriptor f, const Vec& a, const Vec& b);
Vec vec_scale(FieldDescriptor f, const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Unique reduced row echelon form; returns the strictly increasing pivot
/// column list alongside. Row space is preserved.
std::pair<Matrix, std::vector<int>> rref(const Matrix& m);

int rank(const Matrix& m);

/// Canonical solution of Mx = b (free variables zero), or nullopt when b is
/// outside the column space.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> try_inverse(const Matrix& m);

}  // namespace flatbase
