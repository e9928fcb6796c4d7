#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bentfn/common.hpp"

namespace bentfn {

// Elements of F_{2^n} are encoded in polynomial basis: bit j of the integer
// is the coordinate on x^j mod the irreducible polynomial (LSB = constant
// term). All file formats and CLI flags use this encoding.
using Elem = uint32_t;

namespace detail {

// Carry-less multiply of two F_2[x] polynomials (degrees <= 31).
inline uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline int poly_degree(uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Remainder of a mod m in F_2[x].
inline uint64_t poly_mod(uint64_t a, uint64_t m) {
    const int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; --d)
        if (a >> d & 1) a ^= m << (d - dm);
    return a;
}

inline uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

// x^(2^e) mod m by repeated squaring.
inline uint64_t poly_x_pow2(int e, uint64_t m) {
    uint64_t r = poly_mod(2, m); // the polynomial "x"
    for (int j = 0; j < e; ++j) r = poly_mod(clmul(r, r), m);
    return r;
}

} // namespace detail

// Irreducibility over F_2: p has degree n, x^(2^n) = x mod p, and for every
// prime divisor d of n, gcd(x^(2^(n/d)) + x, p) = 1.
inline bool is_irreducible(uint64_t poly, int n) {
    if (detail::poly_degree(poly) != n) return false;
    if (n == 1) return true;
    if (detail::poly_x_pow2(n, poly) != detail::poly_mod(2, poly)) return false;
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= d; ++q)
            if (d % q == 0) prime = false;
        if (!prime) continue;
        uint64_t h = detail::poly_x_pow2(n / d, poly) ^ detail::poly_mod(2, poly);
        if (detail::poly_gcd(poly, h) != 1) return false;
    }
    return true;
}

// Lexicographically smallest irreducible of each degree, as integer bitmask.
// Recomputed and asserted by the field tests.
inline uint32_t default_poly(int n) {
    static const uint32_t registry[25] = {
        0,         0,         0x7,       0xb,       0x13,
        0x25,      0x43,      0x83,      0x11b,     0x203,
        0x409,     0x805,     0x1009,    0x201b,    0x4021,
        0x8003,    0x1002b,   0x20009,   0x40009,   0x80027,
        0x100009,  0x200005,  0x400003,  0x800021,  0x100001b,
    };
    if (n < 2 || n > 24) throw error("unsupported degree");
    return registry[n];
}

// Immutable context for F_{2^n}. Safe to share across threads; every
// operation below is pure. Log/antilog tables are built for n <= 16, the
// census range; larger degrees fall back to shift-and-reduce multiplication.
struct FieldCtx {
    int n = 0;
    uint32_t poly = 0;
    std::vector<uint16_t> log_tab;  // log of nonzero elements, base g
    std::vector<uint32_t> exp_tab;  // g^j for j in [0, 2^n-1)
    std::vector<uint8_t> tr1_tab;   // absolute trace bit per element

    uint32_t order() const { return uint32_t(1) << n; }
    bool has_tables() const { return !log_tab.empty(); }
};

inline Elem mul(const FieldCtx& ctx, Elem a, Elem b) {
    if (a == 0 || b == 0) return 0;
    if (ctx.has_tables()) {
        uint32_t s = ctx.log_tab[a] + ctx.log_tab[b];
        const uint32_t period = ctx.order() - 1;
        if (s >= period) s -= period;
        return ctx.exp_tab[s];
    }
    uint64_t r = detail::clmul(a, b);
    return Elem(detail::poly_mod(r, ctx.poly));
}

inline Elem pow_elem(const FieldCtx& ctx, Elem a, uint64_t e) {
    // Convention used by the precondition polynomials: a^0 = 1 even at a = 0.
    if (e == 0) return 1;
    if (a == 0) return 0;
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(ctx, r, a);
        a = mul(ctx, a, a);
        e >>= 1;
    }
    return r;
}

inline Elem inv(const FieldCtx& ctx, Elem a) {
    if (a == 0) throw error("zero has no inverse");
    return pow_elem(ctx, a, (uint64_t(1) << ctx.n) - 2);
}

// a^(2^(i mod n)): the i-th Frobenius power.
inline Elem frob_pow(const FieldCtx& ctx, Elem a, int i) {
    i %= ctx.n;
    if (i < 0) i += ctx.n;
    for (int j = 0; j < i; ++j) a = mul(ctx, a, a);
    return a;
}

// Tr^n_r(a) = a + a^(2^r) + ... + a^(2^(n-r)); lands in F_{2^r}.
inline Elem trace_to(const FieldCtx& ctx, Elem a, int r) {
    if (r <= 0 || ctx.n % r != 0) throw error("invalid subfield");
    Elem s = 0, x = a;
    for (int j = 0; j < ctx.n / r; ++j) {
        s ^= x;
        x = frob_pow(ctx, x, r);
    }
    return s;
}

inline bool in_subfield(const FieldCtx& ctx, Elem a, int r) {
    if (r <= 0 || ctx.n % r != 0) throw error("invalid subfield");
    return frob_pow(ctx, a, r) == a;
}

// Absolute trace as a bit.
inline int tr1(const FieldCtx& ctx, Elem a) {
    if (!ctx.tr1_tab.empty()) return ctx.tr1_tab[a];
    return trace_to(ctx, a, 1) & 1;
}

inline FieldCtx ctx_build(int n, std::optional<uint32_t> poly = std::nullopt) {
    if (n < 2 || n > 24) throw error("unsupported degree");
    FieldCtx ctx;
    ctx.n = n;
    ctx.poly = poly.value_or(default_poly(n));
    if (!is_irreducible(ctx.poly, n)) throw error("reducible");

    if (n <= 16) {
        const uint32_t size = ctx.order();
        const uint32_t period = size - 1;
        ctx.exp_tab.assign(period, 0);
        ctx.log_tab.assign(size, 0);
        // Find a generator by direct order check.
        for (uint32_t g = 2; g < size; ++g) {
            uint64_t v = 1;
            uint32_t j = 0;
            for (; j < period; ++j) {
                ctx.exp_tab[j] = uint32_t(v);
                v = detail::poly_mod(detail::clmul(v, g), ctx.poly);
                if (v == 1) break;
            }
            if (j == period - 1) break; // full period: g is primitive
        }
        for (uint32_t j = 0; j < period; ++j) ctx.log_tab[ctx.exp_tab[j]] = uint16_t(j);
        ctx.tr1_tab.assign(size, 0);
        for (uint32_t a = 0; a < size; ++a) {
            FieldCtx plain;
            plain.n = n;
            plain.poly = ctx.poly;
            ctx.tr1_tab[a] = uint8_t(trace_to(plain, a, 1) & 1);
        }
    }
    return ctx;
}

// All elements of the subfield F_{2^r} inside ctx, sorted by encoding.
inline std::vector<Elem> subfield_elements(const FieldCtx& ctx, int r) {
    if (r <= 0 || ctx.n % r != 0) throw error("invalid subfield");
    std::vector<Elem> out;
    out.reserve(size_t(1) << r);
    for (uint32_t a = 0; a < ctx.order(); ++a)
        if (frob_pow(ctx, a, r) == a) out.push_back(a);
    return out;
}

} // namespace bentfn
