#pragma once

#include <cstdint>
#include <vector>

#include "bentfn/boolfun.hpp"
#include "bentfn/common.hpp"
#include "bentfn/field.hpp"

namespace bentfn {

// Linearized polynomial sum c_i x^(2^i); the F_2-linear maps of F_{2^n}.
struct LinPoly {
    std::vector<Elem> coeffs; // size n, c_i = coefficient of x^(2^i)

    LinPoly() = default;
    explicit LinPoly(int n) : coeffs(size_t(n), 0) {}
};

inline Elem eval(const FieldCtx& ctx, const LinPoly& l, Elem x) {
    Elem acc = 0;
    Elem f = x;
    for (int i = 0; i < ctx.n; ++i) {
        if (l.coeffs[i]) acc ^= mul(ctx, l.coeffs[i], f);
        f = mul(ctx, f, f);
    }
    return acc;
}

inline LinPoly add(const LinPoly& a, const LinPoly& b) {
    LinPoly r(int(a.coeffs.size()));
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] ^ b.coeffs[i];
    return r;
}

// Adjoint for the trace bilinear form Tr(xy): the term c x^(2^i) maps to
// c^(2^(n-i)) x^(2^(n-i)), so Tr(x L(y)) = Tr(L*(x) y) for all x, y.
inline LinPoly adjoint(const FieldCtx& ctx, const LinPoly& l) {
    LinPoly r(ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
        if (!l.coeffs[i]) continue;
        int j = (ctx.n - i) % ctx.n;
        r.coeffs[j] ^= frob_pow(ctx, l.coeffs[i], j);
    }
    return r;
}

// Rank of the n x n bit matrix whose columns are L(basis vectors).
inline int rank(const FieldCtx& ctx, const LinPoly& l) {
    std::vector<uint32_t> rows(size_t(ctx.n), 0);
    for (int j = 0; j < ctx.n; ++j) {
        Elem img = eval(ctx, l, Elem(1) << j);
        for (int i = 0; i < ctx.n; ++i)
            if (img >> i & 1) rows[i] |= uint32_t(1) << j;
    }
    int r = 0;
    for (int col = 0; col < ctx.n; ++col) {
        int pivot = -1;
        for (int i = r; i < ctx.n; ++i)
            if (rows[i] >> col & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < ctx.n; ++i)
            if (i != r && (rows[i] >> col & 1)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

inline bool is_invertible(const FieldCtx& ctx, const LinPoly& l) {
    return rank(ctx, l) == ctx.n;
}

struct QuadformCheck {
    bool bent_by_spectrum = false;
    bool invertible_l_plus_lstar = false;
};

// The quadratic form x -> Tr(x L(x)) is bent exactly when L + L* is
// invertible; both sides are computed independently.
inline QuadformCheck quadform_bent_check(const FieldCtx& ctx, const LinPoly& l) {
    QuadformCheck r;
    BoolFun f(ctx.n);
    for (uint32_t x = 0; x < ctx.order(); ++x)
        f.set(x, tr1(ctx, mul(ctx, x, eval(ctx, l, x))));
    r.bent_by_spectrum = is_bent(f);
    r.invertible_l_plus_lstar = is_invertible(ctx, add(l, adjoint(ctx, l)));
    return r;
}

} // namespace bentfn
