#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bentfn/io.hpp"
#include "bentfn/rng.hpp"

using namespace bentfn;

TEST_CASE("field spec parsing") {
    FieldSpec s = parse_field_spec("n=4,poly=0x13");
    CHECK(s.n == 4);
    CHECK(s.poly == 0x13u);
    FieldSpec d = parse_field_spec("n=6");
    CHECK(d.n == 6);
    CHECK_FALSE(d.poly.has_value());
    CHECK_THROWS_AS(parse_field_spec("poly=0x13"), error);
    CHECK_THROWS_AS(parse_field_spec("n=4,bogus=1"), error);
    CHECK_THROWS_AS(parse_field_spec("n=abc"), error);
}

TEST_CASE("family spec parsing") {
    FamilyParams p = parse_family_spec("k=2,i=1,e=2");
    CHECK(p.k == 2);
    CHECK(p.i == 1);
    CHECK(p.e == 2);
    CHECK(p.terms.empty());

    FamilyParams q = parse_family_spec("k=3,i=0,terms=0x1:1;0x1:2");
    CHECK(q.e == 3); // defaults to k
    REQUIRE(q.terms.size() == 2);
    CHECK(q.terms[0] == std::pair<Elem, int>{1, 1});
    CHECK(q.terms[1] == std::pair<Elem, int>{1, 2});

    CHECK_THROWS_AS(parse_family_spec("i=1"), error);
    CHECK_THROWS_AS(parse_family_spec("k=2,terms=1-2"), error);
}

TEST_CASE("boolfun round trip") {
    SplitMix64 rng(9);
    for (int n : {2, 5, 10}) {
        BoolFun f(n);
        for (size_t x = 0; x < f.size(); ++x) f.set(x, int(rng.next() & 1));
        std::stringstream ss;
        write_boolfun(ss, f);
        BoolFun g = read_boolfun(ss);
        CHECK(g.n == f.n);
        CHECK(g.bits == f.bits);
    }
}

TEST_CASE("boolfun format is LSB-first hex") {
    BoolFun f(2);
    f.set(0, 1);
    f.set(3, 1); // bits 1001 -> nibble 9
    std::stringstream ss;
    write_boolfun(ss, f);
    CHECK(ss.str() == "n=2\n9\n");
}

TEST_CASE("vecfun round trip and errors") {
    SplitMix64 rng(13);
    VecFun f(4, 4);
    for (auto& v : f.table) v = Elem(rng.below(16));
    std::stringstream ss;
    write_vecfun(ss, f);
    VecFun g = read_vecfun(ss);
    CHECK(g.n == 4);
    CHECK(g.m == 4);
    CHECK(g.table == f.table);

    std::stringstream bad("n=4,m=4\n0x1\n");
    CHECK_THROWS_AS(read_vecfun(bad), error);
    std::stringstream oob("n=2,m=2\n0x9\n0x0\n0x0\n0x0\n");
    CHECK_THROWS_AS(read_vecfun(oob), error);
}
