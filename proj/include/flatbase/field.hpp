#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "flatbase/errors.hpp"

namespace flatbase {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Q, Fp };

bool is_prime_u64(std::uint64_t n);

/// Ground field of all linear algebra: the rationals, or a prime field F_p.
/// F_p scalars are stored as integer-valued rationals normalized into [0, p).
struct FieldDescriptor {
    FieldKind kind = FieldKind::Q;
    std::int64_t p = 0;

    static FieldDescriptor rationals() { return FieldDescriptor{FieldKind::Q, 0}; }
    static FieldDescriptor prime_field(std::int64_t p);

    bool operator==(const FieldDescriptor&) const = default;

    bool is_q() const { return kind == FieldKind::Q; }

    Rat normalize(const Rat& x) const;
    Rat add(const Rat& a, const Rat& b) const;
    Rat sub(const Rat& a, const Rat& b) const;
    Rat mul(const Rat& a, const Rat& b) const;
    Rat div(const Rat& a, const Rat& b) const;
    Rat neg(const Rat& a) const;
    Rat inv(const Rat& a) const;
    Rat from_int(long long v) const;

    /// Accepts "a" or "a/b" with optional leading '-'; result is normalized.
    Rat parse_scalar(const std::string& text) const;
    std::string scalar_to_string(const Rat& x) const;

    std::string to_string() const;
};

}  // namespace flatbase
