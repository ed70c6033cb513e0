#include "flatbase/rng.hpp"

namespace flatbase {

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rat random_scalar(SplitMix64& rng, FieldDescriptor f, int bound) {
    return f.from_int(rng.range(-bound, bound));
}

Vec random_vector(SplitMix64& rng, FieldDescriptor f, int n, int bound) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = random_scalar(rng, f, bound);
    return v;
}

Matrix random_matrix(SplitMix64& rng, FieldDescriptor f, int rows, int cols, int bound) {
    Matrix m(f, rows, cols);
    for (Rat& x : m.entries) x = random_scalar(rng, f, bound);
    return m;
}

Matrix random_invertible(SplitMix64& rng, FieldDescriptor f, int n) {
    Matrix m = Matrix::identity(f, n);
    const int ops = 3 * n + 2;
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.range(0, n - 1));
        int j = static_cast<int>(rng.range(0, n - 1));
        switch (rng.range(0, 2)) {
            case 0: {  // row_i += c * row_j
                if (i == j) break;
                Rat c = random_scalar(rng, f, 2);
                for (int col = 0; col < n; ++col)
                    m.at(i, col) = f.add(m.at(i, col), f.mul(c, m.at(j, col)));
                break;
            }
            case 1: {  // swap
                if (i == j) break;
                for (int col = 0; col < n; ++col) std::swap(m.at(i, col), m.at(j, col));
                break;
            }
            default: {  // row_i *= -1
                for (int col = 0; col < n; ++col) m.at(i, col) = f.neg(m.at(i, col));
                break;
            }
        }
    }
    return m;
}

ModulePresentation random_module(SplitMix64& rng, const AlgebraPtr& algebra) {
    const FieldDescriptor f = algebra->field();
    const int copies = static_cast<int>(rng.range(1, 2));
    ModulePresentation free = power_module(regular_module(algebra), copies);

    // Relations drawn from m . R^copies keep the quotient minimally presented.
    const Subspace& m = algebra->maximal_ideal;
    std::vector<Vec> gens;
    const int count = static_cast<int>(rng.range(0, 2));
    for (int g = 0; g < count; ++g) {
        Vec v(free.dim);
        for (int s = 0; s < copies; ++s) {
            for (int r = 0; r < m.basis.rows; ++r) {
                Rat c = random_scalar(rng, f, 2);
                for (int col = 0; col < algebra->dim(); ++col)
                    v[s * algebra->dim() + col] =
                        f.add(v[s * algebra->dim() + col], f.mul(c, m.basis.at(r, col)));
            }
        }
        if (!vec_is_zero(v)) gens.push_back(std::move(v));
    }
    if (gens.empty()) return free;
    Subspace sub = generated_submodule(free, gens);
    return quotient_module(free, sub).module;
}

}  // namespace flatbase
