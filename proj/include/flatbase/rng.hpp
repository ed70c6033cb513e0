#pragma once

#include <cstdint>
#include <string_view>

#include "flatbase/module.hpp"

namespace flatbase {

/// SplitMix64: tiny deterministic generator for the seeded property checks.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::uint64_t fnv1a(std::string_view text);

Rat random_scalar(SplitMix64& rng, FieldDescriptor f, int bound);
Vec random_vector(SplitMix64& rng, FieldDescriptor f, int n, int bound);
Matrix random_matrix(SplitMix64& rng, FieldDescriptor f, int rows, int cols, int bound);
/// Product of elementary row operations applied to the identity.
Matrix random_invertible(SplitMix64& rng, FieldDescriptor f, int n);

/// Seeded random module over the algebra: a quotient of a small free module
/// by the submodule generated by random elements of m . R^a.
ModulePresentation random_module(SplitMix64& rng, const AlgebraPtr& algebra);

}  // namespace flatbase
