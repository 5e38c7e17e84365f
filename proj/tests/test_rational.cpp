#include <random>

#include "cliffrep/rational.hpp"
#include "doctest.h"

using cliffrep::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(-7, 14).to_string() == "-1/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational arithmetic agrees with gmp across the overflow boundary") {
    std::mt19937_64 rng(11);
    auto pick = [&]() -> long long {
        switch (rng() % 3) {
            case 0: return static_cast<long long>(rng() % 2001) - 1000;
            case 1: return static_cast<long long>(rng() >> 2) * ((rng() & 1) ? 1 : -1);
            default: return static_cast<long long>(rng() % 4000000001ULL) - 2000000000LL;
        }
    };
    for (int i = 0; i < 3000; ++i) {
        long long an = pick(), bn = pick();
        long long ad = std::max(1LL, std::abs(pick())), bd = std::max(1LL, std::abs(pick()));
        Rational a(an, ad), b(bn, bd);
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        CHECK((a + b).to_mpq() == mpq_class(qa + qb));
        CHECK((a - b).to_mpq() == mpq_class(qa - qb));
        CHECK((a * b).to_mpq() == mpq_class(qa * qb));
        if (bn != 0) CHECK((a / b).to_mpq() == mpq_class(qa / qb));
        CHECK(((a < b) == (qa < qb)));
    }
}

TEST_CASE("large values demote back to the inline form") {
    Rational big = Rational(1LL << 62) * Rational(1LL << 62);
    Rational back = big / Rational(1LL << 62);
    CHECK(back == Rational(1LL << 62));
    CHECK(back.to_string() == std::to_string(1LL << 62));
    CHECK((big - big).is_zero());
}
