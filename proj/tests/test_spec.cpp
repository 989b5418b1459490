#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zdg/ring_spec.hpp"

using namespace zdg;

TEST_CASE("products and GF sugar") {
    RingSpec s = parse_ring_spec("Z(4) x GF(3)");
    const auto* p = std::get_if<RingSpec::Product>(&s.node);
    REQUIRE(p);
    REQUIRE(p->factors.size() == 2);
    CHECK(std::get<RingSpec::Zn>(p->factors[0].node).n == 4);
    CHECK(std::get<RingSpec::Zn>(p->factors[1].node).n == 3);
    CHECK(spec_order(s) == 12);
    CHECK(to_string(s) == "Z(4) x Z(3)");
}

TEST_CASE("monomial quotient parse") {
    RingSpec s = parse_ring_spec("Z(2)[x,y]/(x^3, x*y, y^2)");
    const auto* q = std::get_if<RingSpec::QuotMono>(&s.node);
    REQUIRE(q);
    CHECK(q->p == 2);
    CHECK(q->vars == std::vector<std::string>{"x", "y"});
    CHECK(q->gens == std::vector<std::vector<int>>{{3, 0}, {1, 1}, {0, 2}});
    CHECK(spec_order(s) == 16);
}

TEST_CASE("infinite monomial quotients are rejected at parse time") {
    CHECK_THROWS_AS(parse_ring_spec("Z(2)[x,y]/(x*y)"), InfiniteQuotient);
    CHECK_THROWS_AS(parse_ring_spec("Z(2)[x,y]/(x^2, x*y)"), InfiniteQuotient);
    CHECK_NOTHROW(parse_ring_spec("Z(2)[x,y]/(x^2, y^3)"));
}

TEST_CASE("semantic rejections") {
    CHECK_THROWS_AS(parse_ring_spec("Z(6)[x]/(x^2)"), InvalidSpec);   // non-prime modulus
    CHECK_THROWS_AS(parse_ring_spec("Z(3)[x]/(2*x^2+1)"), NonMonic);  // leading 2
    CHECK_THROWS_AS(parse_ring_spec("Z(3)[x]/(2)"), NonMonic);        // degree 0
    CHECK_THROWS_AS(parse_ring_spec("Z(2)[x,y]/(x^2+y, y^2)"), InvalidSpec); // non-monomial
    CHECK_THROWS_AS(parse_ring_spec("GF(12)"), InvalidSpec);          // not a prime power
    // monic after reduction mod p is fine
    CHECK_NOTHROW(parse_ring_spec("Z(2)[x]/(3*x^2+1)"));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_ring_spec("Z(4");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    try {
        parse_ring_spec("Z(4) y Z(2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse_ring_spec("Q(4)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z(2)[x,x]/(x^2)"), ParseError); // duplicate variable
    CHECK_THROWS_AS(parse_ring_spec("Z(2)[x]/(w^2)"), ParseError);   // unknown variable
}

TEST_CASE("keywords are case-insensitive and whitespace is free") {
    CHECK(to_string(parse_ring_spec("  z( 4 )X gf(3)")) == "Z(4) x Z(3)");
    CHECK(to_string(parse_ring_spec("IDEAL(Z(9), (3))")) == "ideal(Z(9), (3))");
    CHECK(to_string(parse_ring_spec("GF(2^3)")) == to_string(parse_ring_spec("GF(8)")));
}

TEST_CASE("parse then print is a fixed point") {
    const char* specs[] = {
        "Z(12)",
        "Z(2)[x]/(x^2+x+1)",
        "Z(3)[t]/(t^2+1)",
        "Z(2)[x,y]/(x^3, x*y, y^2)",
        "Z(4) x Z(3) x Z(2)",
        "ideal(Z(9), (3))",
        "ideal(Z(2) x Z(2), ((0,1)))",
        "ideal(Z(2)[x]/(x^2), (x))",
        "table(some/file.json)",
        "(Z(2) x Z(2)) x Z(4)",
        "GF(25)",
    };
    for (const char* text : specs) {
        CAPTURE(text);
        std::string once = to_string(parse_ring_spec(text));
        std::string twice = to_string(parse_ring_spec(once));
        CHECK(once == twice);
    }
}

TEST_CASE("nested product parentheses flatten") {
    CHECK(to_string(parse_ring_spec("(Z(2) x Z(2)) x Z(4)")) == "Z(2) x Z(2) x Z(4)");
}

TEST_CASE("element expressions evaluate inside idealizations") {
    FiniteRing r = build_ring("ideal(Z(2) x Z(2), ((0,1)))");
    CHECK(r.order() == 8); // |R| * |R/I| = 4 * 2
    FiniteRing q = build_ring("ideal(Z(2)[x]/(x^2), (x))");
    CHECK(q.order() == 8);
}

TEST_CASE("idealization orders follow |R| * |R/I|") {
    CHECK(build_ring("ideal(Z(8), (2))").order() == 16);      // I = {0,2,4,6}
    CHECK(build_ring("ideal(Z(8), (2^2))").order() == 32);    // I = {0,4}
    CHECK(build_ring("ideal(Z(9), (3))").order() == 27);      // I = {0,3,6}
    CHECK(build_ring("ideal(Z(6), (2+2^2))").order() == 36);  // 2+4 = 0, I = {0}
}
