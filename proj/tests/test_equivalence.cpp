#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bentfn/constructions.hpp"
#include "bentfn/equivalence.hpp"
#include "bentfn/field.hpp"
#include "bentfn/rng.hpp"
#include "bentfn/vectorial.hpp"

using namespace bentfn;

TEST_CASE("splitmix64 test vectors") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);

    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    CHECK(a.split(1).next() != a.split(2).next());
}

TEST_CASE("bit matrix rank and inverse") {
    SplitMix64 rng(1);
    BitMatrix id = BitMatrix::identity(8);
    CHECK(rank(id) == 8);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m = random_invertible(8, rng);
        BitMatrix mi = inverse(m);
        for (int j = 0; j < 8; ++j)
            CHECK(mi.apply(m.apply(uint64_t(1) << j)) == uint64_t(1) << j);
    }
}

TEST_CASE("random invertible acceptance ratio near 0.2888") {
    SplitMix64 rng(2);
    int ok = 0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
        BitMatrix m(8);
        for (int i = 0; i < 8; ++i) m.rows[i] = rng.next() & 0xff;
        if (is_invertible(m)) ++ok;
    }
    CHECK(ok > samples * 0.26);
    CHECK(ok < samples * 0.32);
}

TEST_CASE("ea transforms") {
    FieldCtx f16 = ctx_build(4);
    VecFun bin = build_G(f16, {2, 1, 2, {}});

    EATriple ident;
    ident.outer = Affine{BitMatrix::identity(4), 0};
    ident.inner = Affine{BitMatrix::identity(4), 0};
    ident.add = Affine{BitMatrix(4), 0};
    CHECK(apply_ea(bin, ident).table == bin.table);

    // adding an affine function never changes component bentness
    SplitMix64 rng(3);
    EATriple shift = ident;
    BitMatrix a(4);
    for (int i = 0; i < 4; ++i) a.rows[i] = rng.next() & 0xf;
    shift.add = Affine{a, rng.next() & 0xf};
    CensusReport before = bent_census(f16, bin);
    CensusReport after = bent_census(f16, apply_ea(bin, shift));
    CHECK(after.bent_count == before.bent_count);
    CHECK(after.nonbent == before.nonbent);

    // full random triples preserve the census count
    for (int trial = 0; trial < 10; ++trial) {
        EATriple t = random_ea(4, rng);
        CHECK(bent_census(f16, apply_ea(bin, t)).bent_count == 12);
    }
}

TEST_CASE("ea inverse round trip") {
    FieldCtx f16 = ctx_build(4);
    VecFun bin = build_G(f16, {2, 1, 2, {}});
    SplitMix64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        EATriple t = random_ea(4, rng);
        VecFun g = apply_ea(apply_ea(bin, t), ea_inverse(t));
        CHECK(g.table == bin.table);
    }
}

TEST_CASE("ccz graph transforms") {
    FieldCtx f16 = ctx_build(4);
    VecFun id = from_univariate(f16, {{1, 1}});

    AffineMap2n identity_map;
    identity_map.map = Affine{BitMatrix::identity(8), 0};
    auto same = apply_ccz(id, identity_map);
    REQUIRE(same.has_value());
    CHECK(same->table == id.table);

    // coordinate swap maps the graph of a permutation to its inverse
    AffineMap2n swap;
    swap.map.mat = BitMatrix(8);
    for (int i = 0; i < 4; ++i) {
        swap.map.mat.rows[i] = uint64_t(1) << (i + 4);
        swap.map.mat.rows[i + 4] = uint64_t(1) << i;
    }
    auto inv_id = apply_ccz(id, swap);
    REQUIRE(inv_id.has_value());
    CHECK(inv_id->table == id.table);

    // swapping coordinates of a constant function is not a graph
    VecFun constant(4, 4);
    CHECK_FALSE(apply_ccz(constant, swap).has_value());
}

TEST_CASE("ccz map built from an ea triple always accepts") {
    FieldCtx f16 = ctx_build(4);
    VecFun bin = build_G(f16, {2, 1, 2, {}});
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        EATriple t = random_ea(4, rng);
        auto img = apply_ccz(bin, ccz_from_ea(t, 4));
        REQUIRE(img.has_value());
        CHECK(img->table == apply_ea(bin, t).table);
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    SplitMix64 a(77), b(77);
    EATriple ta = random_ea(6, a), tb = random_ea(6, b);
    CHECK(ta.outer.mat.rows == tb.outer.mat.rows);
    CHECK(ta.inner.mat.rows == tb.inner.mat.rows);
    CHECK(ta.add.c == tb.add.c);
}

TEST_CASE("invariance experiment") {
    FieldCtx f16 = ctx_build(4);
    VecFun bin = build_G(f16, {2, 1, 2, {}});

    InvarianceReport rep = invariance_experiment(f16, bin, EquivMode::EA, 20, 42);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.violations == 0);
    CHECK(rep.baseline_is_max);
    for (const auto& t : rep.trials) {
        CHECK(t.is_max);
        CHECK(t.bent_count == 12);
    }

    VecFun id = from_univariate(f16, {{1, 1}});
    InvarianceReport rid = invariance_experiment(f16, id, EquivMode::EA, 10, 42);
    CHECK(rid.verdict == Verdict::Pass);
    CHECK_FALSE(rid.baseline_is_max);
    for (const auto& t : rid.trials) CHECK_FALSE(t.is_max);

    InvarianceReport empty = invariance_experiment(f16, bin, EquivMode::EA, 0, 42);
    CHECK(empty.verdict == Verdict::Vacuous);

    InvarianceReport ccz = invariance_experiment(f16, bin, EquivMode::CCZ, 10, 42);
    CHECK(ccz.verdict != Verdict::Fail);
    for (const auto& t : ccz.trials)
        if (t.accepted) CHECK(t.is_max);
}
