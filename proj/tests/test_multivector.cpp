#include "cliffrep/mv_text.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffrep;
using testsupport::random_mv;

namespace {
Multivector mv(const char* s, Signature sig) { return parse_multivector(s, sig); }
}

TEST_CASE("blade products") {
    Signature s20(2, 0), s11(1, 1);
    CHECK(blade_product(s20, 0b01, 0b10) == SignedBlade{1, 0b11});
    CHECK(blade_product(s20, 0b10, 0b01) == SignedBlade{-1, 0b11});
    CHECK(blade_product(s11, 0b10, 0b10) == SignedBlade{-1, 0});
    CHECK_THROWS_AS(blade_product(s20, 0b100, 1), WidthError);
}

TEST_CASE("blade products match generator shuffling") {
    for (auto sig : {Signature(3, 0), Signature(2, 2), Signature(0, 4), Signature(3, 2)}) {
        for (BladeMask a = 0; a <= sig.full_mask(); ++a)
            for (BladeMask b = 0; b <= sig.full_mask(); ++b) {
                auto [sign, mask] = testsupport::slow_blade_product(sig, a, b);
                auto fast = blade_product(sig, a, b);
                REQUIRE(fast.sign == sign);
                REQUIRE(fast.mask == mask);
            }
    }
}

TEST_CASE("hyperbolic idempotents") {
    Signature s(1, 0);
    CHECK(mv("1+e1", s) * mv("1+e1", s) == mv("2+2*e1", s));
    CHECK((mv("1+e1", s) * mv("1-e1", s)).is_zero());
    auto a = mv("3 - 2/3*e1", s);
    CHECK(Multivector::scalar(s, 1) * a == a);
}

TEST_CASE("module operations") {
    Signature s(2, 0);
    CHECK((mv("e1", s) + Rational(-1) * mv("e1", s)).is_zero());
    CHECK(Rational(2) * mv("3 + e12", s) == mv("6 + 2*e12", s));
    CHECK(mv("e2", s) + Multivector(s) == mv("e2", s));
    CHECK_THROWS_AS(mv("e1", s) + mv("e1", Signature(1, 0)), SignatureMismatch);
}

TEST_CASE("pseudoscalar square") {
    CHECK(pseudoscalar_square(Signature(3, 0)) == -1);
    CHECK(pseudoscalar_square(Signature(0, 3)) == 1);
    CHECK(pseudoscalar_square(Signature(0, 1)) == -1);
    CHECK_THROWS_AS(pseudoscalar_square(Signature(0, 0)), DegenerateSignature);
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q) {
            if (p + q == 0) continue;
            Signature s(p, q);
            auto e = pseudoscalar(s);
            CHECK(e * e == Multivector::scalar(s, pseudoscalar_square(s)));
        }
}

TEST_CASE("associativity, anticommutation and odd pseudoscalar centrality") {
    std::mt19937_64 rng(3);
    for (auto sig : {Signature(2, 1), Signature(1, 3), Signature(3, 2), Signature(0, 5)}) {
        for (int i = 0; i < 200; ++i) {
            auto a = random_mv(sig, rng, 12), b = random_mv(sig, rng, 12), c = random_mv(sig, rng, 12);
            REQUIRE((a * b) * c == a * (b * c));
        }
        for (int i = 1; i <= sig.n(); ++i)
            for (int j = 1; j <= sig.n(); ++j) {
                if (i == j) continue;
                auto ei = Multivector::generator(sig, i), ej = Multivector::generator(sig, j);
                CHECK((ei * ej + ej * ei).is_zero());
            }
        if (sig.n() % 2 == 1) {
            auto e = pseudoscalar(sig);
            for (int i = 0; i < 20; ++i) {
                auto a = random_mv(sig, rng);
                CHECK(a * e == e * a);
            }
        }
    }
}

TEST_CASE("dense and sparse product paths agree") {
    std::mt19937_64 rng(5);
    Signature sig(4, 3);
    for (int i = 0; i < 20; ++i) {
        auto a = random_mv(sig, rng, 128), b = random_mv(sig, rng, 128);
        Multivector slow(sig);
        for (const auto& x : a.terms())
            for (const auto& y : b.terms()) {
                auto [sign, m] = testsupport::slow_blade_product(sig, x.mask, y.mask);
                slow += Multivector::blade(sig, m, sign * x.coeff * y.coeff);
            }
        CHECK(a * b == slow);
    }
}

TEST_CASE("generator lists") {
    Signature h(0, 3);
    auto e123 = mv("eps123", h);
    GeneratorList g(h, {e123}, {1});
    CHECK(g.abstract_signature() == Signature(1, 0));
    CHECK(reindex(mv("e1", Signature(1, 0)), g) == e123);
    CHECK(reindex(mv("5", Signature(1, 0)), g) == mv("5", h));
    CHECK_THROWS_AS(GeneratorList(h, {e123}, {-1}), StructureError);
    CHECK_THROWS_AS(GeneratorList(h, {mv("eps1", h), mv("eps123", h)}, {-1, 1}), StructureError);

    Signature h2(2, 2);
    auto g1 = mv("e12*eps1", h2), g2 = mv("e1*eps12", h2);
    GeneratorList gl = GeneratorList::checked(h2, {g1, g2});
    CHECK(gl.abstract_signature() == Signature(1, 1));
    CHECK((g1 * g2) * (g1 * g2) == Multivector::scalar(h2, 1));
    CHECK(reindex(mv("e1*eps1", Signature(1, 1)), gl) == g1 * g2);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto x = random_mv(Signature(1, 1), rng), y = random_mv(Signature(1, 1), rng);
        CHECK(reindex(x * y, gl) == reindex(x, gl) * reindex(y, gl));
    }
}

TEST_CASE("split along the pseudoscalar") {
    Signature s(3, 0);
    auto u = mv("e123", s);
    GeneratorList sub = GeneratorList::standard(Signature(3, 0));
    sub = GeneratorList(s, {sub[0], sub[1]}, {1, 1});
    auto [a0, a1] = split_along(mv("1 + e3", s), u, sub);
    CHECK(a0 == mv("1", s));
    CHECK(a1 == mv("-1*e12", s));
    CHECK(a0 + a1 * u == mv("1+e3", s));

    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        auto a = random_mv(s, rng);
        auto [x0, x1] = split_along(a, u, sub);
        CHECK(x0 + x1 * u == a);
        auto c = conjugate_along(a, u, sub);
        CHECK(c == x0 - x1 * u);
        CHECK(conjugate_along(c, u, sub) == a);
        CHECK(conjugate_along(Rational(7, 3) * a, u, sub) == Rational(7, 3) * c);
        auto b = random_mv(s, rng);
        CHECK(conjugate_along(a * b, u, sub) == c * conjugate_along(b, u, sub));
    }
    auto inside = mv("2 - e12", s);
    CHECK(split_along(inside, u, sub).second.is_zero());
    CHECK(conjugate_along(inside, u, sub) == inside);

    Signature h(1, 0);
    auto [b0, b1] = split_along(mv("3 + 4*e1", h), mv("e1", h), GeneratorList());
    CHECK(b0 == mv("3", h));
    CHECK(b1 == mv("4", h));

    CHECK_THROWS_AS(split_along(mv("e3", s), mv("e1", s), GeneratorList(s, {sub[1]}, {1})), StructureError);
    CHECK_THROWS_AS(split_along(mv("e2", s), mv("e1", s), GeneratorList()), DecompositionError);
}

TEST_CASE("split agrees with a brute-force linear solve") {
    // solve a = a0 + a1 u over the 2^n blade basis by Gaussian elimination on images
    Signature s(3, 2);
    auto u = mv("e123*eps12", s);
    GeneratorList sub = GeneratorList::checked(s, {mv("e2", s), mv("-1*e1", s), mv("eps2", s), mv("e3", s)});
    std::vector<Multivector> basis;
    for (BladeMask m = 0; m < 16; ++m) {
        Multivector b = Multivector::scalar(s, 1);
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i)) b = b * sub[i];
        basis.push_back(b);
        basis.push_back(b * u);
    }
    std::mt19937_64 rng(4);
    auto a = random_mv(s, rng);
    // coordinates: each basis element is a signed blade, so the system is a signed permutation
    Multivector x0(s), x1(s);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto sb = *basis[k].as_signed_blade();
        Rational c = a.coeff(sb.mask) * Rational(sb.sign);
        Multivector inner = basis[k - (k % 2)];
        if (k % 2 == 0) x0 += c * inner;
        else x1 += c * inner;
    }
    auto [a0, a1] = split_along(a, u, sub);
    CHECK(a0 == x0);
    CHECK(a1 == x1);
}

TEST_CASE("text round trip") {
    Signature s(3, 2);
    CHECK(format_multivector(mv("3/2*e1 - e12 + 5 + e13*eps2", s)) == "5 + 3/2*e1 - 1*e12 + 1*e13*eps2");
    CHECK(format_multivector(Multivector(s)) == "0");
    CHECK(format_multivector(mv("-1*eps1", Signature(0, 1))) == "-1*eps1");
    CHECK(mv("e2*e1", s) == mv("-1*e12", s));
    CHECK(mv("eps2*eps1", s) == mv("-eps12", s));
    Signature big(11, 0);
    CHECK(format_multivector(mv("e1_2_10", big)) == "1*e1_2_10");
    std::mt19937_64 rng(8);
    for (auto sig : {Signature(3, 2), Signature(0, 4), Signature(10, 1)}) {
        for (int i = 0; i < 40; ++i) {
            auto a = random_mv(sig, rng, 40);
            CHECK(parse_multivector(format_multivector(a), sig) == a);
        }
    }
}

TEST_CASE("parse errors carry positions") {
    Signature s(2, 0);
    auto pos_of = [&](const char* text) -> long {
        try {
            parse_multivector(text, s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position);
        }
        return -1;
    };
    CHECK(pos_of("1 + e3") == 5);
    CHECK(pos_of("1 + ") == 4);
    CHECK(pos_of("2 $ e1") == 2);
    CHECK(pos_of("eps1") == 3);
    CHECK(pos_of("1/0") == 2);
    CHECK(pos_of("") == 0);
}
