#include "cliffrep/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cliffrep {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr int64_t kMax = INT64_MAX;

int ctz128(u128 x) {
    auto lo = static_cast<uint64_t>(x);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<uint64_t>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = ctz128(a | b);
    a >>= ctz128(a);
    do {
        b >>= ctz128(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

mpz_class mpz_from(u128 v) {
    mpz_class z;
    uint64_t words[2] = {static_cast<uint64_t>(v), static_cast<uint64_t>(v >> 64)};
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, words);
    return z;
}

bool fits(const mpz_class& z) {
    return z <= mpz_class(kMax) && z >= mpz_class(-kMax);
}

int64_t to_i64(const mpz_class& z) {
    return static_cast<int64_t>(mpz_get_si(z.get_mpz_t()));
}

}  // namespace

Rational::Rational(long long n) {
    if (n == INT64_MIN) assign(mpq_class(mpz_class(std::to_string(n))));
    else num_ = n;
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) { assign(q); }

void Rational::assign(const mpq_class& q) {
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = to_i64(q.get_num());
        den_ = to_i64(q.get_den());
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(q);
    }
}

void Rational::assign_wide(i128 n, i128 d) {
    bool neg = (n < 0) != (d < 0);
    u128 un = n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n);
    u128 ud = d < 0 ? -static_cast<u128>(d) : static_cast<u128>(d);
    if (un == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(un, ud);
    if (g != 1) {
        un /= g;
        ud /= g;
    }
    if (un <= static_cast<u128>(kMax) && ud <= static_cast<u128>(kMax)) {
        num_ = neg ? -static_cast<int64_t>(un) : static_cast<int64_t>(un);
        den_ = static_cast<int64_t>(ud);
        big_.reset();
        return;
    }
    mpz_class zn = mpz_from(un);
    if (neg) zn = -zn;
    mpq_class q(zn, mpz_from(ud));
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("rational: empty");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) r.assign(-*big_);
    else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (big_ || o.big_) {
        assign(to_mpq() + o.to_mpq());
        return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
        int64_t s;
        if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
            num_ = s;
            return *this;
        }
    }
    assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (big_ || o.big_) {
        assign(to_mpq() * o.to_mpq());
        return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
        int64_t s;
        if (!__builtin_mul_overflow(num_, o.num_, &s) && s != INT64_MIN) {
            num_ = s;
            return *this;
        }
    }
    assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    if (big_ || o.big_) {
        assign(to_mpq() / o.to_mpq());
        return *this;
    }
    assign_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cliffrep
