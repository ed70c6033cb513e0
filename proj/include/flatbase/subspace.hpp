#pragma once

#include <vector>

#include "flatbase/matrix.hpp"

namespace flatbase {

/// Subspace of K^n held as a canonical RREF basis; equality of subspaces is
/// plain syntactic equality of the basis matrices.
struct Subspace {
    int ambient = 0;
    Matrix basis;  // RREF rows, no zero rows
    std::vector<int> pivots;

    static Subspace zero(FieldDescriptor f, int ambient);
    static Subspace full(FieldDescriptor f, int ambient);
    /// Span of the rows of `rows`; zero rows are dropped by the reduction.
    static Subspace span_of(const Matrix& rows);

    int dim() const { return basis.rows; }
    bool is_zero() const { return basis.rows == 0; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Canonical representative of v modulo this subspace (pivot coordinates
    /// eliminated).
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;
};

/// Exact kernel {x : Mx = 0} as a canonical subspace of K^cols.
Subspace kernel_basis(const Matrix& m);

/// Quotient of K^n by a subspace, with a deterministic projection/section
/// pair: the complement is spanned by the non-pivot coordinates.
struct QuotientSpace {
    int ambient = 0;
    Subspace kernel;
    int dim = 0;
    Matrix projection;  // dim x ambient
    Matrix section;     // ambient x dim
};

QuotientSpace quotient_space(int ambient_dim, const Subspace& ker);

}  // namespace flatbase
