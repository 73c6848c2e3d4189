#include <doctest.h>

#include "upward/errors.hpp"
#include "upward/rational.hpp"

using namespace upward;

TEST_SUITE("rational") {

TEST_CASE("decimal literals parse exactly") {
    CHECK(Rat::parse("0.1") == Rat(1, 10));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat::parse("12.5") == Rat(25, 2));
    CHECK(Rat::parse("0.10") == Rat(1, 10));
    CHECK(Rat::parse("007") == Rat(7));
}

TEST_CASE("fraction literals parse in lowest terms") {
    CHECK(Rat::parse("2/6") == Rat(1, 3));
    CHECK(Rat::parse("-7/12") == Rat(-7, 12));
    CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
}

TEST_CASE("malformed literals are rejected") {
    for (const char* bad : {"", "-", "1.2.3", ".5", "5.", "1e3", "1 /2", "+4", "--2", "0x10"})
        CHECK_THROWS_AS(Rat::parse(bad), ParseError);
}

TEST_CASE("canonical text form") {
    CHECK(Rat(1, 10).str() == "0.1");
    CHECK(Rat(25, 2).str() == "12.5");
    CHECK(Rat(-3).str() == "-3");
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(1, 3).str() == "1/3");
    CHECK(Rat(-1, 3).str() == "-1/3");
    CHECK(Rat(1, 4096).str() == "0.000244140625");
    CHECK((Rat(1, 10) + Rat(2, 10)).str() == "0.3"); // no binary rounding
}

TEST_CASE("text round trip is the identity on canonical forms") {
    for (const char* s : {"0.1", "-12.75", "1/3", "-9/7", "42", "0"})
        CHECK(Rat::parse(s).str() == s);
}

TEST_CASE("arithmetic stays exact") {
    const Rat a = Rat::parse("0.1");
    Rat sum(0);
    for (int i = 0; i < 10; ++i) sum += a;
    CHECK(sum == Rat(1));
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("pow2_floor picks the largest power of two below") {
    CHECK(pow2_floor(Rat(1)) == Rat(1));
    CHECK(pow2_floor(Rat(3)) == Rat(2));
    CHECK(pow2_floor(Rat(4)) == Rat(4));
    CHECK(pow2_floor(Rat(3, 4)) == Rat(1, 2));
    CHECK(pow2_floor(Rat(1, 4)) == Rat(1, 4));
    CHECK(pow2_floor(Rat(1, 5)) == Rat(1, 8));
    CHECK(pow2_floor(Rat::parse("1000000")) == Rat(1L << 19));
    CHECK_THROWS_AS(pow2_floor(Rat(0)), DomainError);
    for (long n : {1L, 7L, 100L, 12345L})
        for (long d : {1L, 3L, 64L, 999L}) {
            const Rat r(n, d);
            const Rat p = pow2_floor(r);
            CHECK(p <= r);
            CHECK(p * Rat(2) > r);
        }
}

TEST_CASE("sqrt_lower_bound brackets the root") {
    for (long n : {1L, 2L, 3L, 5L, 49L, 1000L}) {
        for (long d : {1L, 2L, 7L, 100L}) {
            const Rat sq(n, d);
            const Rat r = sqrt_lower_bound(sq);
            CHECK(r.sign() > 0);
            CHECK(r * r <= sq);            // never above the true root
            CHECK(Rat(4) * r * r > sq);    // never below half of it
        }
    }
    CHECK(sqrt_lower_bound(Rat(0)) == Rat(0));
    CHECK(sqrt_lower_bound(Rat(49)) == Rat(7)); // exact squares come back exact
    CHECK(sqrt_lower_bound(Rat(1, 4)) == Rat(1, 2));
}

} // TEST_SUITE
