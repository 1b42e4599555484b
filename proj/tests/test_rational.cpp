#include "doctest.h"
#include "voa/rational.hpp"

using namespace voa;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK((Rat(1, 6) + Rat(1, 3)) == Rat(1, 2));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK((Rat(7, 10) / Rat(7, 10)) == Rat(1));
    CHECK(Rat(5, 3).floor() == 1);
    CHECK(Rat(-5, 3).floor() == -2);
    CHECK(Rat(5, 3).ceil() == 2);
    CHECK(Rat(1, 3) < Rat(2, 5));
    CHECK(Rat(0).is_zero());
}

TEST_CASE("rational parse/print round trip") {
    for (const char* s : {"0", "7", "-3", "1/2", "-22/7"}) {
        Rat r = Rat::parse(s);
        CHECK(r.str() == s);
    }
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("x"), parse_error);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rat big(9000000000000000000LL);
    CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("binomial with negative upper index") {
    CHECK(binomial(-1, 0) == Rat(1));
    CHECK(binomial(-1, 3) == Rat(-1));
    CHECK(binomial(-2, 2) == Rat(3));
    CHECK(binomial(5, 2) == Rat(10));
    CHECK(binomial(2, 5) == Rat(0));
}
