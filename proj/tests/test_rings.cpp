#include "doctest.h"

#include "adic/groebner.hpp"
#include "adic/ring.hpp"

using namespace adic;

static RingPtr qq_xy() {
    return Ring::poly(CoeffDomain::qq(), {"x", "y"});
}

TEST_CASE("ring construction and errors") {
    auto r = qq_xy();
    CHECK(r->nvars() == 2);
    CHECK(r->describe() == "QQ[x,y]");

    CHECK_THROWS_AS(Ring::poly(CoeffDomain::qq(), {"x", "x"}), DuplicateVariable);
    CHECK_THROWS_AS(CoeffDomain::fp(6), NonPrimeModulus);
    CHECK(CoeffDomain::fp(5).modulus() == 5);

    auto f5t = Ring::poly(CoeffDomain::fp(5), {"t"}, MonomialOrder::Lex);
    CHECK(f5t->describe() == "Fp:5[t]");
    // 7 = 2 in F_5
    CHECK(f5t->constant(7) == f5t->constant(2));
}

TEST_CASE("polynomial parser and printer") {
    auto r = qq_xy();
    auto f = r->parse("x^2*y - 3");
    CHECK(r->poly_str(f.poly()) == "x^2*y - 3");
    auto g = r->parse("2*x + 1/2*y + x");
    CHECK(g == r->parse("3*x + 1/2*y"));
    CHECK(r->parse("x - x").is_zero());
    CHECK_THROWS_AS(r->parse("z + 1"), ParseError);
    CHECK_THROWS_AS(r->parse("x +"), ParseError);

    // implicit coefficient and exponent
    CHECK(r->parse("x*y") == r->var(0) * r->var(1));
}

TEST_CASE("monomial orders") {
    Monomial a{2, 0}, b{1, 1};
    CHECK(mono_cmp(a, b, MonomialOrder::Grevlex) > 0); // x^2 > xy in grevlex
    Monomial c{0, 2};
    CHECK(mono_cmp(b, c, MonomialOrder::Grevlex) > 0); // xy > y^2
    CHECK(mono_cmp(a, c, MonomialOrder::Lex) > 0);
}

TEST_CASE("groebner basis: spec examples") {
    auto r = qq_xy();

    SUBCASE("(x^2, xy) is already a basis") {
        Ideal I(r, {r->parse("x^2"), r->parse("x*y")});
        auto gb = I.groebner_basis();
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == r->parse("x^2"));
        CHECK(gb[1] == r->parse("x*y"));
    }
    SUBCASE("(x, y, x+y) reduces to {x, y}") {
        Ideal I(r, {r->parse("x"), r->parse("y"), r->parse("x+y")});
        auto gb = I.groebner_basis();
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == r->parse("x"));
        CHECK(gb[1] == r->parse("y"));
    }
    SUBCASE("(x-y, y) reduces to {x, y}") {
        Ideal I(r, {r->parse("x-y"), r->parse("y")});
        auto gb = I.groebner_basis();
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == r->parse("x"));
        CHECK(gb[1] == r->parse("y"));
    }
    SUBCASE("groebner over ZZ coefficients refuses") {
        auto zz1 = Ring::poly(CoeffDomain::zz(), {"x"});
        Ideal I(zz1, {zz1->parse("2*x")});
        CHECK_THROWS_AS(I.groebner_basis(), UnsupportedBase);
    }
}

TEST_CASE("normal form: spec examples") {
    auto r = qq_xy();
    Ideal I(r, {r->parse("x^2"), r->parse("x*y")});
    CHECK(I.normal_form(r->parse("x^2 + x*y + 1")) == r->one());
    CHECK(I.normal_form(r->zero()).is_zero());
    Ideal J(r, {r->parse("x")});
    CHECK(J.normal_form(r->parse("y")) == r->parse("y"));
    CHECK(I.contains(r->parse("x^2*y")));
    CHECK(!I.contains(r->parse("x")));
}

TEST_CASE("normal form additivity property") {
    auto r = qq_xy();
    Ideal I(r, {r->parse("x^2 - y"), r->parse("x*y - 1")});
    std::vector<RingElement> pool = {
        r->parse("x^3 + y"), r->parse("x*y^2 - 2*x"), r->parse("y^4 - x*y + 3"),
        r->parse("x^5"), r->parse("x + y + 1"),
    };
    for (const auto& f : pool)
        for (const auto& g : pool) {
            auto lhs = I.normal_form(f + g);
            auto rhs = I.normal_form(I.normal_form(f) + I.normal_form(g));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("groebner is idempotent and order-deterministic") {
    auto r = qq_xy();
    Ideal I(r, {r->parse("x^2 + y^2 - 1"), r->parse("x*y - 2")});
    auto gb1 = I.groebner_basis();
    Ideal I2(r, std::vector<RingElement>(gb1.begin(), gb1.end()));
    auto gb2 = I2.groebner_basis();
    REQUIRE(gb1.size() == gb2.size());
    for (std::size_t i = 0; i < gb1.size(); ++i) CHECK(gb1[i] == gb2[i]);
    // permuted input, same reduced basis
    Ideal I3(r, {r->parse("x*y - 2"), r->parse("x^2 + y^2 - 1")});
    auto gb3 = I3.groebner_basis();
    REQUIRE(gb1.size() == gb3.size());
    for (std::size_t i = 0; i < gb1.size(); ++i) CHECK(gb1[i] == gb3[i]);
}

TEST_CASE("radical membership") {
    auto r = qq_xy();
    SUBCASE("x in sqrt(x^2)") {
        Ideal I(r, {r->parse("x^2")});
        CHECK(radical_membership(r->parse("x"), I));
    }
    SUBCASE("y not in sqrt(x^2)") {
        Ideal I(r, {r->parse("x^2")});
        CHECK(!radical_membership(r->parse("y"), I));
    }
    SUBCASE("0 in sqrt(0)") {
        Ideal I(r, {r->zero()});
        CHECK(radical_membership(r->zero(), I));
    }
    SUBCASE("agrees with brute-force power search") {
        std::vector<Ideal> ideals = {
            Ideal(r, {r->parse("x^2"), r->parse("y^3")}),
            Ideal(r, {r->parse("x*y")}),
            Ideal(r, {r->parse("x^2 - y"), r->parse("y^2")}),
        };
        std::vector<RingElement> cands = {r->parse("x"), r->parse("y"), r->parse("x+y"),
                                          r->parse("x*y"), r->parse("x^2*y")};
        for (const auto& I : ideals)
            for (const auto& f : cands) {
                bool brute = false;
                for (unsigned k = 1; k <= 10 && !brute; ++k)
                    brute = I.contains(f.pow(k));
                if (brute) CHECK(radical_membership(f, I));
            }
    }
}

TEST_CASE("quotient rings: normal forms are canonical") {
    auto r = qq_xy();
    auto q = quotient_ring(r, {r->parse("x*y")});
    CHECK(q->describe() == "QQ[x,y]/(x*y)");
    auto x = q->var(0), y = q->var(1);
    CHECK((x * y).is_zero());
    CHECK(!(x * x).is_zero());
    // unique representatives
    CHECK(q->parse("x*y + x") == q->parse("x"));
    // ideal membership inside the quotient
    Ideal I(q, {x});
    CHECK(I.normal_form(q->parse("x^2 + y")) == q->parse("y"));
}

TEST_CASE("fp coefficients groebner") {
    auto r = Ring::poly(CoeffDomain::fp(5), {"x", "y"});
    Ideal I(r, {r->parse("x^2 + 4*y"), r->parse("x*y")});
    auto gb = I.groebner_basis();
    CHECK(!gb.empty());
    // x^2 = -4y = y mod the ideal relations
    CHECK(I.contains(r->parse("x^2 + 4*y")));
    CHECK(I.contains(r->parse("x^3")));
}
