#include <algorithm>
#include <numeric>

#include "cliffrep/errors.hpp"
#include "cliffrep/ring_matrix.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffrep;
using testsupport::small_rational;

namespace {

RingScalar random_scalar(Ring ring, std::mt19937_64& rng) {
    switch (base_ring(ring)) {
        case Ring::Complex: return RingScalar::complex(small_rational(rng), small_rational(rng));
        case Ring::Quaternion:
            return RingScalar::quaternion(small_rational(rng), small_rational(rng), small_rational(rng),
                                          small_rational(rng));
        default: return RingScalar(small_rational(rng));
    }
}

RingMatrix random_matrix(Ring ring, std::size_t n, std::mt19937_64& rng) {
    RingMatrix m = RingMatrix::zero(ring, n);
    for (int b = 0; b < m.blocks(); ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j, b) = random_scalar(ring, rng);
    return m;
}

// Quaternion as a 2x2 complex matrix [[a+bi, c+di], [-c+di, a-bi]], complex numbers as pairs.
using Cx = std::pair<Rational, Rational>;
Cx cmul(const Cx& x, const Cx& y) {
    return {x.first * y.first - x.second * y.second, x.first * y.second + x.second * y.first};
}
std::array<Cx, 4> as_su2(const RingScalar& q) {
    return {Cx{q[0], q[1]}, Cx{q[2], q[3]}, Cx{-q[2], q[3]}, Cx{q[0], -q[1]}};
}
std::array<Cx, 4> su2_mul(const std::array<Cx, 4>& a, const std::array<Cx, 4>& b) {
    std::array<Cx, 4> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Cx x = cmul(a[i * 2], b[j]), y = cmul(a[i * 2 + 1], b[2 + j]);
            r[i * 2 + j] = {x.first + y.first, x.second + y.second};
        }
    return r;
}

// Leibniz expansion over a commutative ring
RingScalar leibniz_det(const RingMatrix& a) {
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    RingScalar total = RingScalar::zero(a.ring());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        RingScalar term = RingScalar::one(a.ring());
        for (std::size_t i = 0; i < perm.size(); ++i) term = term * a.at(i, perm[i]);
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
    Rational r;
    for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
    return r;
}

}  // namespace

TEST_CASE("quaternion units") {
    auto i = RingScalar::quaternion(0, 1, 0, 0), j = RingScalar::quaternion(0, 0, 1, 0),
         k = RingScalar::quaternion(0, 0, 0, 1);
    auto m1 = -RingScalar::one(Ring::Quaternion);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == m1);
    CHECK(k * k == m1);
    CHECK(i.to_string() == "0+1i+0j+0k");
    CHECK(RingScalar::complex(Rational(1, 2), -3).to_string() == "1/2-3i");
}

TEST_CASE("quaternion product agrees with 2x2 complex model") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        auto a = random_scalar(Ring::Quaternion, rng), b = random_scalar(Ring::Quaternion, rng);
        CHECK(as_su2(a * b) == su2_mul(as_su2(a), as_su2(b)));
        auto inv = a.inverse();
        if (a.is_zero()) CHECK(!inv);
        else CHECK(a * *inv == RingScalar::one(Ring::Quaternion));
    }
}

TEST_CASE("real embedding is multiplicative") {
    std::mt19937_64 rng(11);
    for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion}) {
        for (int t = 0; t < 10; ++t) {
            auto a = random_matrix(r, 3, rng), b = random_matrix(r, 3, rng);
            CHECK(ring_embed_real(mat_mul(a, b)) == mat_mul(ring_embed_real(a), ring_embed_real(b)));
            CHECK(ring_embed_real(mat_add(a, b)) == mat_add(ring_embed_real(a), ring_embed_real(b)));
        }
    }
}

TEST_CASE("inverse over every ring") {
    std::mt19937_64 rng(3);
    for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion, Ring::DoubledReal, Ring::DoubledQuaternion}) {
        for (std::size_t n : {1u, 2u, 4u}) {
            auto a = random_matrix(r, n, rng);
            auto inv = mat_inverse(a);
            if (!inv) continue;
            CHECK(mat_mul(a, *inv) == RingMatrix::identity(r, n));
            CHECK(mat_mul(*inv, a) == RingMatrix::identity(r, n));
        }
    }
    RingMatrix sing = RingMatrix::zero(Ring::Quaternion, 2);
    sing.at(0, 0) = RingScalar::quaternion(0, 1, 0, 0);
    sing.at(0, 1) = RingScalar::quaternion(0, 0, 1, 0);
    sing.at(1, 0) = RingScalar::quaternion(0, 0, 0, 1);
    // second row is k*i^-1 times the first
    sing.at(1, 1) = RingScalar::quaternion(0, 0, 0, 1) * *RingScalar::quaternion(0, 1, 0, 0).inverse() *
                    RingScalar::quaternion(0, 0, 1, 0);
    CHECK(!mat_inverse(sing));
}

TEST_CASE("determinant matches Leibniz expansion") {
    std::mt19937_64 rng(5);
    for (Ring r : {Ring::Real, Ring::Complex}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            auto a = random_matrix(r, n, rng);
            if (n >= 3) a.at(0, 0) = RingScalar::zero(r);  // force a pivot swap path
            CHECK(mat_det(a) == leibniz_det(a));
        }
        auto a = random_matrix(r, 3, rng), b = random_matrix(r, 3, rng);
        CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
    }
    auto d = random_matrix(Ring::DoubledReal, 3, rng);
    CHECK(mat_det(d) == leibniz_det(d.block(0)) * leibniz_det(d.block(1)));
    CHECK_THROWS_AS(mat_det(RingMatrix::identity(Ring::Quaternion, 2)), UnsupportedRing);
}

TEST_CASE("characteristic polynomial") {
    std::mt19937_64 rng(9);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto a = random_matrix(Ring::Real, n, rng);
        auto c = char_poly(a);
        REQUIRE(c.size() == n + 1);
        CHECK(c[n].is_one());
        for (long long x = -2; x <= 2; ++x) {
            auto shifted = mat_sub(mat_scale(Rational(x), RingMatrix::identity(Ring::Real, n)), a);
            CHECK(eval_poly(c, Rational(x)) == leibniz_det(shifted)[0]);
        }
        // Cayley-Hamilton
        RingMatrix acc = RingMatrix::zero(Ring::Real, n);
        for (std::size_t k = c.size(); k-- > 0;) {
            acc = mat_mul(acc, a);
            acc = mat_add(acc, mat_scale(c[k], RingMatrix::identity(Ring::Real, n)));
        }
        CHECK(acc == RingMatrix::zero(Ring::Real, n));
    }
    auto d = random_matrix(Ring::DoubledReal, 2, rng);
    CHECK(char_poly(d).size() == 5);
    CHECK_THROWS_AS(char_poly(RingMatrix::identity(Ring::Complex, 2)), UnsupportedRing);
}

TEST_CASE("kronecker product") {
    std::mt19937_64 rng(13);
    auto a = random_matrix(Ring::Real, 2, rng), b = random_matrix(Ring::Real, 3, rng);
    auto c = random_matrix(Ring::Real, 2, rng), d = random_matrix(Ring::Real, 3, rng);
    CHECK(mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d)));
    auto k = kron(a, b);
    CHECK(k.at(4, 5) == a.at(1, 1) * b.at(1, 2));
    auto h = random_matrix(Ring::Quaternion, 2, rng);
    auto hk = kron(a, h);
    CHECK(hk.ring() == Ring::Quaternion);
    CHECK(hk.at(3, 2) == a.at(1, 1) * h.at(1, 0));
    auto dd = kron(random_matrix(Ring::DoubledReal, 1, rng), a);
    CHECK(dd.ring() == Ring::DoubledReal);
    CHECK_THROWS_AS(kron(random_matrix(Ring::Complex, 1, rng), h), RingMismatch);
}

TEST_CASE("matrix formatting") {
    RingMatrix m = RingMatrix::zero(Ring::Real, 2);
    m.at(0, 0) = RingScalar(Rational(1));
    m.at(0, 1) = RingScalar(Rational(-2));
    m.at(1, 0) = RingScalar(Rational(1, 2));
    CHECK(format_matrix(m) == "R(2)\n[   1 -2 ]\n[ 1/2  0 ]\n");
    auto d = RingMatrix::doubled(RingMatrix::identity(Ring::Real, 1), mat_scale(-1, RingMatrix::identity(Ring::Real, 1)));
    CHECK(format_matrix(d) == "2R(1)\nplus:\n[ 1 ]\nminus:\n[ -1 ]\n");
}
