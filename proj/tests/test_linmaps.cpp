#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bentfn/field.hpp"
#include "bentfn/linmaps.hpp"
#include "bentfn/rng.hpp"

using namespace bentfn;

namespace {

LinPoly random_linpoly(int n, SplitMix64& rng) {
    LinPoly l(n);
    for (int i = 0; i < n; ++i) l.coeffs[i] = Elem(rng.below(uint64_t(1) << n));
    return l;
}

bool kernel_trivial_by_scan(const FieldCtx& ctx, const LinPoly& l) {
    for (uint32_t x = 1; x < ctx.order(); ++x)
        if (eval(ctx, l, x) == 0) return false;
    return true;
}

} // namespace

TEST_CASE("evaluation is F_2-linear") {
    SplitMix64 rng(5);
    for (int n : {4, 6, 8}) {
        FieldCtx ctx = ctx_build(n);
        LinPoly l = random_linpoly(n, rng);
        for (int trial = 0; trial < 100; ++trial) {
            Elem a = Elem(rng.below(ctx.order()));
            Elem b = Elem(rng.below(ctx.order()));
            CHECK(eval(ctx, l, a ^ b) == (eval(ctx, l, a) ^ eval(ctx, l, b)));
        }
    }
}

TEST_CASE("adjoint of single terms") {
    FieldCtx f16 = ctx_build(4);
    // multiplication by c is self-adjoint
    LinPoly m(4);
    m.coeffs[0] = 9;
    LinPoly ma = adjoint(f16, m);
    CHECK(ma.coeffs == m.coeffs);

    // alpha x^2 on F_16 has adjoint alpha^(2^3) x^(2^3)
    for (Elem alpha = 1; alpha < 16; ++alpha) {
        LinPoly l(4);
        l.coeffs[1] = alpha;
        LinPoly la = adjoint(f16, l);
        CHECK(la.coeffs[3] == frob_pow(f16, alpha, 3));
        CHECK(la.coeffs[0] == 0);
        CHECK(la.coeffs[1] == 0);
        CHECK(la.coeffs[2] == 0);
    }
}

TEST_CASE("adjoint identity Tr(x L(y)) = Tr(L*(x) y), exhaustive n <= 8") {
    SplitMix64 rng(17);
    for (int n : {4, 6, 8}) {
        FieldCtx ctx = ctx_build(n);
        LinPoly l = random_linpoly(n, rng);
        LinPoly ls = adjoint(ctx, l);
        CHECK(adjoint(ctx, ls).coeffs == l.coeffs); // involution
        for (uint32_t x = 0; x < ctx.order(); ++x)
            for (uint32_t y = 0; y < ctx.order(); ++y)
                CHECK(tr1(ctx, mul(ctx, x, eval(ctx, l, y))) ==
                      tr1(ctx, mul(ctx, eval(ctx, ls, x), y)));
    }
}

TEST_CASE("invertibility") {
    FieldCtx f16 = ctx_build(4);
    LinPoly ident(4);
    ident.coeffs[0] = 1;
    CHECK(is_invertible(f16, ident));

    // x + x^(2^k) has kernel F_{2^k}
    LinPoly tr(4);
    tr.coeffs[0] = 1;
    tr.coeffs[2] = 1;
    CHECK_FALSE(is_invertible(f16, tr));

    SplitMix64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        LinPoly l(4);
        l.coeffs[0] = 1;
        l.coeffs[1] = Elem(rng.below(16)); // alpha x^2 + x, random alpha
        CHECK(is_invertible(f16, l) == kernel_trivial_by_scan(f16, l));
        LinPoly r = random_linpoly(4, rng);
        CHECK(is_invertible(f16, r) == kernel_trivial_by_scan(f16, r));
    }
}

TEST_CASE("quadratic-form bentness criterion") {
    FieldCtx f16 = ctx_build(4);

    // L = x gives f(x) = Tr(x^2) = Tr(x), linear; L + L* = 0
    LinPoly ident(4);
    ident.coeffs[0] = 1;
    QuadformCheck qi = quadform_bent_check(f16, ident);
    CHECK_FALSE(qi.bent_by_spectrum);
    CHECK_FALSE(qi.invertible_l_plus_lstar);

    // binomial kernel alpha x^2 + alpha^4 x^8 (i = 1, k = 2): the induced
    // form Tr(alpha x^2 (x + x^4)) is bent for alpha outside F_4
    for (Elem alpha = 1; alpha < 16; ++alpha) {
        if (in_subfield(f16, alpha, 2)) continue;
        LinPoly l(4);
        l.coeffs[1] = alpha;
        l.coeffs[3] = frob_pow(f16, alpha, 2);
        QuadformCheck q = quadform_bent_check(f16, l);
        CHECK(q.bent_by_spectrum);
        CHECK(q.invertible_l_plus_lstar);
    }

    // the two independently computed booleans always agree
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        QuadformCheck q = quadform_bent_check(f16, random_linpoly(4, rng));
        CHECK(q.bent_by_spectrum == q.invertible_l_plus_lstar);
    }
}
