#include "flatbase/field.hpp"

#include <boost/multiprecision/integer.hpp>

namespace flatbase {

namespace {

// Deterministic Miller-Rabin; the witness set covers all 64-bit inputs.
bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    Int x = boost::multiprecision::powm(Int(a), Int(d), Int(n));
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < r - 1; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

Int fp_mod(const Int& v, std::int64_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

// Inverse of a mod p via extended Euclid; a need not be reduced.
Int fp_inverse(const Int& a, std::int64_t p) {
    Int old_r = fp_mod(a, p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) fail(Errc::DivisionByZero, "element not invertible mod p");
    return fp_mod(old_s, p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        fail(Errc::NotPrime, "modulus " + std::to_string(p) + " is not prime");
    return FieldDescriptor{FieldKind::Fp, p};
}

Rat FieldDescriptor::normalize(const Rat& x) const {
    if (kind == FieldKind::Q) return x;  // cpp_rational is always canonical
    Int num = numerator(x);
    Int den = denominator(x);
    if (den != 1) num *= fp_inverse(den, p);
    return Rat(fp_mod(num, p));
}

Rat FieldDescriptor::add(const Rat& a, const Rat& b) const {
    if (kind == FieldKind::Q) return a + b;
    return Rat(fp_mod(numerator(a) + numerator(b), p));
}

Rat FieldDescriptor::sub(const Rat& a, const Rat& b) const {
    if (kind == FieldKind::Q) return a - b;
    return Rat(fp_mod(numerator(a) - numerator(b), p));
}

Rat FieldDescriptor::mul(const Rat& a, const Rat& b) const {
    if (kind == FieldKind::Q) return a * b;
    return Rat(fp_mod(numerator(a) * numerator(b), p));
}

Rat FieldDescriptor::div(const Rat& a, const Rat& b) const {
    if (b == 0) fail(Errc::DivisionByZero, "division by zero");
    if (kind == FieldKind::Q) return a / b;
    return Rat(fp_mod(numerator(a) * fp_inverse(numerator(b), p), p));
}

Rat FieldDescriptor::neg(const Rat& a) const {
    if (kind == FieldKind::Q) return -a;
    return Rat(fp_mod(-numerator(a), p));
}

Rat FieldDescriptor::inv(const Rat& a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (kind == FieldKind::Q) return 1 / a;
    return Rat(fp_inverse(numerator(a), p));
}

Rat FieldDescriptor::from_int(long long v) const { return normalize(Rat(v)); }

Rat FieldDescriptor::parse_scalar(const std::string& text) const {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) fail(Errc::SchemaError, "bad scalar literal '" + text + "'");
        return normalize(Rat(Int(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || Int(den) == 0)
        fail(Errc::SchemaError, "bad scalar literal '" + text + "'");
    return normalize(Rat(Int(num), Int(den)));
}

std::string FieldDescriptor::scalar_to_string(const Rat& x) const {
    Int num = numerator(x);
    Int den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string FieldDescriptor::to_string() const {
    if (kind == FieldKind::Q) return "Q";
    return "F" + std::to_string(p);
}

}  // namespace flatbase
