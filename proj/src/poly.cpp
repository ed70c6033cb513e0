#include "flatbase/poly.hpp"

#include <algorithm>
#include <tuple>

namespace flatbase::poly {

namespace {

void trim(Poly& p) {
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Poly make(FieldDescriptor f, Vec coeffs) {
    Poly p{f, std::move(coeffs)};
    for (Rat& a : p.c) a = f.normalize(a);
    trim(p);
    return p;
}

Poly zero(FieldDescriptor f) { return Poly{f, {}}; }

Poly constant(FieldDescriptor f, const Rat& a) { return make(f, {a}); }

Poly x_power(FieldDescriptor f, int k) {
    Vec c(k + 1);
    c[k] = f.from_int(1);
    return Poly{f, std::move(c)};
}

Poly add(const Poly& a, const Poly& b) {
    const FieldDescriptor f = a.field;
    Vec c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat x = i < a.c.size() ? a.c[i] : Rat(0);
        Rat y = i < b.c.size() ? b.c[i] : Rat(0);
        c[i] = f.add(x, y);
    }
    Poly p{f, std::move(c)};
    trim(p);
    return p;
}

Poly sub(const Poly& a, const Poly& b) {
    const FieldDescriptor f = a.field;
    Vec c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat x = i < a.c.size() ? a.c[i] : Rat(0);
        Rat y = i < b.c.size() ? b.c[i] : Rat(0);
        c[i] = f.sub(x, y);
    }
    Poly p{f, std::move(c)};
    trim(p);
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    const FieldDescriptor f = a.field;
    if (a.is_zero() || b.is_zero()) return zero(f);
    Vec c(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
        }
    }
    Poly p{f, std::move(c)};
    trim(p);
    return p;
}

Poly scale(const Poly& a, const Rat& s) {
    const FieldDescriptor f = a.field;
    Vec c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(a.c[i], s);
    Poly p{f, std::move(c)};
    trim(p);
    return p;
}

Poly pow(const Poly& a, int e) {
    Poly acc = constant(a.field, a.field.from_int(1));
    for (int i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const FieldDescriptor f = a.field;
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    Poly r = a;
    Poly q = zero(f);
    Rat lead_inv = f.inv(b.c.back());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        Rat coef = f.mul(r.c.back(), lead_inv);
        Poly term = scale(x_power(f, shift), coef);
        q = add(q, term);
        r = sub(r, mul(term, b));
    }
    return {q, r};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, a.field.inv(a.c.back()));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = rem(x, y);
        x = y;
        y = r;
    }
    return monic(x);
}

std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b) {
    const FieldDescriptor f = a.field;
    Poly old_r = a, r = b;
    Poly old_s = constant(f, f.from_int(1)), s = zero(f);
    Poly old_t = zero(f), t = constant(f, f.from_int(1));
    while (!r.is_zero()) {
        auto [q, rr] = divmod(old_r, r);
        old_r = r;
        r = rr;
        Poly ns = sub(old_s, mul(q, s));
        old_s = s;
        s = ns;
        Poly nt = sub(old_t, mul(q, t));
        old_t = t;
        t = nt;
    }
    if (old_r.is_zero()) return {old_r, old_s, old_t};
    Rat inv = f.inv(old_r.c.back());
    return {scale(old_r, inv), scale(old_s, inv), scale(old_t, inv)};
}

Poly derivative(const Poly& a) {
    const FieldDescriptor f = a.field;
    if (a.deg() <= 0) return zero(f);
    Vec c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a.c[i]);
    Poly p{f, std::move(c)};
    trim(p);
    return p;
}

Rat eval(const Poly& a, const Rat& x) {
    const FieldDescriptor f = a.field;
    Rat acc = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly pow_mod(const Poly& base, const Int& e, const Poly& m) {
    const FieldDescriptor f = base.field;
    Poly acc = constant(f, f.from_int(1));
    Poly b = rem(base, m);
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = rem(mul(acc, b), m);
        b = rem(mul(b, b), m);
        k >>= 1;
    }
    return acc;
}

bool fp_irreducible(const Poly& f) {
    const FieldDescriptor fd = f.field;
    int d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    const Poly x = x_power(fd, 1);
    Int p(fd.p);
    // x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for prime l | d.
    Int pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    if (!sub(pow_mod(x, pd, f), rem(x, f)).is_zero()) return false;
    for (int l : prime_factors(d)) {
        Int pe = 1;
        for (int i = 0; i < d / l; ++i) pe *= p;
        Poly g = gcd(sub(pow_mod(x, pe, f), rem(x, f)), f);
        if (g.deg() != 0) return false;
    }
    return true;
}

namespace {

// Monic integer polynomial g(y) = c^d f(y/c) with c = lcm of denominators;
// irreducible over Q iff f is.
std::vector<Int> integralize_monic(const Poly& f, Int* scale_out) {
    Int c = 1;
    for (const Rat& a : f.c) c = boost::multiprecision::lcm(c, denominator(a));
    int d = f.deg();
    std::vector<Int> g(d + 1);
    Int power = 1;  // c^(d-i)
    for (int i = d; i >= 0; --i) {
        Rat scaled = f.c[i] * Rat(power);
        g[i] = numerator(scaled);  // exact by choice of c
        power *= c;
    }
    if (scale_out) *scale_out = c;
    return g;
}

std::vector<Int> divisors_of(const Int& n_in) {
    std::vector<Int> out;
    Int n = n_in < 0 ? Int(-n_in) : n_in;
    if (n == 0) return out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

std::vector<Rat> q_rational_roots(const Poly& f) {
    if (!f.field.is_q() || !f.is_monic())
        fail(Errc::Internal, "rational-root test expects a monic polynomial over Q");
    std::vector<Rat> roots;
    Int c;
    std::vector<Int> g = integralize_monic(f, &c);
    // Roots of g are integers dividing g(0); roots of f are those over c.
    if (g[0] == 0) {
        roots.push_back(Rat(0));
    }
    for (const Int& d : divisors_of(g[0])) {
        for (int sign : {1, -1}) {
            Rat cand = Rat(sign * d, c);
            if (eval(f, cand) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

IrredVerdict q_irreducible(const Poly& f) {
    if (!f.field.is_q() || !f.is_monic())
        fail(Errc::Internal, "irreducibility test expects a monic polynomial over Q");
    int d = f.deg();
    if (d <= 0) return IrredVerdict::Reducible;
    if (d == 1) return IrredVerdict::Irreducible;
    if (!q_rational_roots(f).empty()) return IrredVerdict::Reducible;
    if (d <= 3) return IrredVerdict::Irreducible;  // no root and deg <= 3

    Int c;
    std::vector<Int> g = integralize_monic(f, &c);
    static const int kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    for (int q : kPrimes) {
        if (c % q == 0) continue;
        FieldDescriptor fq = FieldDescriptor::prime_field(q);
        Vec coeffs(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            Int r = g[i] % q;
            if (r < 0) r += q;
            coeffs[i] = Rat(r);
        }
        Poly gq = make(fq, std::move(coeffs));
        if (fp_irreducible(gq)) return IrredVerdict::Irreducible;
    }
    return IrredVerdict::Unknown;
}

}  // namespace flatbase::poly
