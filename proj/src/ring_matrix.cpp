#include "cliffrep/ring_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cliffrep/errors.hpp"

namespace cliffrep {

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::Real: return "R";
        case Ring::Complex: return "C";
        case Ring::Quaternion: return "H";
        case Ring::DoubledReal: return "2R";
        case Ring::DoubledQuaternion: return "2H";
    }
    return "?";
}

bool is_doubled(Ring r) { return r == Ring::DoubledReal || r == Ring::DoubledQuaternion; }

Ring base_ring(Ring r) {
    if (r == Ring::DoubledReal) return Ring::Real;
    if (r == Ring::DoubledQuaternion) return Ring::Quaternion;
    return r;
}

Ring doubled_of(Ring base) {
    if (base == Ring::Real) return Ring::DoubledReal;
    if (base == Ring::Quaternion) return Ring::DoubledQuaternion;
    throw UnsupportedRing("no doubled form of " + ring_name(base));
}

int ring_width(Ring r) {
    switch (base_ring(r)) {
        case Ring::Complex: return 2;
        case Ring::Quaternion: return 4;
        default: return 1;
    }
}

namespace {

Ring wider(Ring a, Ring b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

}  // namespace

RingScalar RingScalar::complex(Rational r, Rational i) {
    RingScalar s;
    s.ring_ = Ring::Complex;
    s.c_[0] = std::move(r);
    s.c_[1] = std::move(i);
    return s;
}

RingScalar RingScalar::quaternion(Rational r, Rational i, Rational j, Rational k) {
    RingScalar s;
    s.ring_ = Ring::Quaternion;
    s.c_ = {std::move(r), std::move(i), std::move(j), std::move(k)};
    return s;
}

RingScalar RingScalar::zero(Ring ring) {
    RingScalar s;
    s.ring_ = base_ring(ring);
    return s;
}

RingScalar RingScalar::one(Ring ring) {
    RingScalar s = zero(ring);
    s.c_[0] = 1;
    return s;
}

RingScalar RingScalar::with_ring(Ring r) const {
    RingScalar s = *this;
    s.ring_ = base_ring(r);
    for (int k = ring_width(s.ring_); k < 4; ++k)
        if (!s.c_[k].is_zero()) throw RingMismatch("value does not fit ring " + ring_name(r));
    return s;
}

bool RingScalar::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

RingScalar RingScalar::conj() const {
    RingScalar s = *this;
    for (int k = 1; k < 4; ++k) s.c_[k] = -s.c_[k];
    return s;
}

Rational RingScalar::norm2() const {
    Rational n;
    for (const auto& x : c_) n += x * x;
    return n;
}

std::optional<RingScalar> RingScalar::inverse() const {
    Rational n = norm2();
    if (n.is_zero()) return std::nullopt;
    RingScalar s = conj();
    Rational inv = Rational(1) / n;
    for (auto& x : s.c_) x *= inv;
    return s;
}

RingScalar RingScalar::operator-() const {
    RingScalar s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

RingScalar& RingScalar::operator+=(const RingScalar& o) {
    ring_ = wider(ring_, o.ring_);
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

RingScalar& RingScalar::operator-=(const RingScalar& o) {
    ring_ = wider(ring_, o.ring_);
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

RingScalar operator*(const RingScalar& a, const RingScalar& b) {
    RingScalar r;
    r.ring_ = wider(a.ring_, b.ring_);
    if (a.ring_ == Ring::Real) {
        for (int k = 0; k < ring_width(b.ring_); ++k) r.c_[k] = a.c_[0] * b.c_[k];
        return r;
    }
    if (b.ring_ == Ring::Real) {
        for (int k = 0; k < ring_width(a.ring_); ++k) r.c_[k] = a.c_[k] * b.c_[0];
        return r;
    }
    const auto& x = a.c_;
    const auto& y = b.c_;
    if (r.ring_ == Ring::Complex) {
        r.c_[0] = x[0] * y[0] - x[1] * y[1];
        r.c_[1] = x[0] * y[1] + x[1] * y[0];
        return r;
    }
    r.c_[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
    r.c_[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
    r.c_[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
    r.c_[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
    return r;
}

RingScalar operator*(const Rational& s, const RingScalar& a) {
    RingScalar r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

bool operator==(const RingScalar& a, const RingScalar& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
}

std::string RingScalar::to_string() const {
    std::string out = c_[0].to_string();
    static const char* units[] = {"", "i", "j", "k"};
    for (int k = 1; k < ring_width(ring_); ++k) {
        out += c_[k].sign() < 0 ? "-" : "+";
        out += c_[k].abs().to_string() + units[k];
    }
    return out;
}

RingMatrix RingMatrix::zero(Ring ring, std::size_t rows, std::size_t cols) {
    RingMatrix m;
    m.ring_ = ring;
    m.rows_ = rows;
    m.cols_ = cols;
    for (int b = 0; b < m.blocks(); ++b) m.data_[b].assign(rows * cols, RingScalar::zero(ring));
    return m;
}

RingMatrix RingMatrix::identity(Ring ring, std::size_t n) {
    RingMatrix m = zero(ring, n, n);
    for (int b = 0; b < m.blocks(); ++b)
        for (std::size_t i = 0; i < n; ++i) m.at(i, i, b) = RingScalar::one(ring);
    return m;
}

RingMatrix RingMatrix::doubled(const RingMatrix& plus, const RingMatrix& minus) {
    if (plus.ring_ != minus.ring_ || plus.rows_ != minus.rows_ || plus.cols_ != minus.cols_ ||
        is_doubled(plus.ring_))
        throw RingMismatch("doubled blocks must share an undoubled ring and shape");
    RingMatrix m;
    m.ring_ = doubled_of(plus.ring_);
    m.rows_ = plus.rows_;
    m.cols_ = plus.cols_;
    m.data_[0] = plus.data_[0];
    m.data_[1] = minus.data_[0];
    return m;
}

RingMatrix RingMatrix::block(int b) const {
    RingMatrix m;
    m.ring_ = base_ring(ring_);
    m.rows_ = rows_;
    m.cols_ = cols_;
    m.data_[0] = data_[b];
    return m;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

void require_ring(const RingMatrix& a, const RingMatrix& b) {
    if (a.ring() != b.ring())
        throw RingMismatch("ring mismatch " + ring_name(a.ring()) + " vs " + ring_name(b.ring()));
}

}  // namespace

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    require_ring(a, b);
    if (a.cols() != b.rows()) throw RingMismatch("matrix shapes do not compose");
    RingMatrix r = RingMatrix::zero(a.ring(), a.rows(), b.cols());
    for (int blk = 0; blk < a.blocks(); ++blk)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const RingScalar& x = a.at(i, k, blk);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) {
                    const RingScalar& y = b.at(k, j, blk);
                    if (!y.is_zero()) r.at(i, j, blk) += x * y;
                }
            }
    return r;
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
    require_ring(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw RingMismatch("matrix shapes differ");
    RingMatrix r = a;
    for (int blk = 0; blk < a.blocks(); ++blk)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j, blk) += b.at(i, j, blk);
    return r;
}

RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b) { return mat_add(a, mat_scale(-1, b)); }

RingMatrix mat_scale(const Rational& s, const RingMatrix& a) {
    RingMatrix r = a;
    for (int blk = 0; blk < a.blocks(); ++blk)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j, blk) = s * a.at(i, j, blk);
    return r;
}

namespace {

// Gauss-Jordan with left multiplications only, valid over R, C and H.
std::optional<RingMatrix> invert_single(const RingMatrix& a) {
    const std::size_t n = a.rows();
    RingMatrix m = a;
    RingMatrix inv = RingMatrix::identity(a.ring(), n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        RingScalar pinv = *m.at(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(c, j) = pinv * m.at(c, j);
            inv.at(c, j) = pinv * inv.at(c, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m.at(i, c).is_zero()) continue;
            RingScalar f = m.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m.at(c, j).is_zero()) m.at(i, j) -= f * m.at(c, j);
                if (!inv.at(c, j).is_zero()) inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

// Bareiss elimination; entries commute here.
RingScalar det_single(const RingMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return RingScalar::one(a.ring());
    RingMatrix m = a;
    RingScalar prev = RingScalar::one(a.ring());
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) return RingScalar::zero(a.ring());
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        RingScalar pinv = *prev.inverse();
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) * pinv;
        prev = m.at(k, k);
    }
    RingScalar d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::vector<Rational> char_poly_single(const RingMatrix& a) {
    // Faddeev-LeVerrier
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RingMatrix mk = RingMatrix::zero(Ring::Real, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RingMatrix next = mat_mul(a, mk);
        for (std::size_t i = 0; i < n; ++i) next.at(i, i) += RingScalar(c[n - k + 1]);
        mk = next;
        RingMatrix amk = mat_mul(a, mk);
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += amk.at(i, i)[0];
        c[n - k] = -tr / Rational(static_cast<long long>(k));
    }
    return c;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

}  // namespace

std::optional<RingMatrix> mat_inverse(const RingMatrix& a) {
    if (!a.square()) throw RingMismatch("inverse of a non-square matrix");
    if (!is_doubled(a.ring())) return invert_single(a);
    auto p = invert_single(a.block(0));
    auto m = invert_single(a.block(1));
    if (!p || !m) return std::nullopt;
    return RingMatrix::doubled(*p, *m);
}

RingScalar mat_det(const RingMatrix& a) {
    if (!a.square()) throw RingMismatch("determinant of a non-square matrix");
    if (base_ring(a.ring()) == Ring::Quaternion)
        throw UnsupportedRing("determinant over " + ring_name(a.ring()) + " is not supported");
    if (is_doubled(a.ring())) return det_single(a.block(0)) * det_single(a.block(1));
    return det_single(a);
}

std::vector<Rational> char_poly(const RingMatrix& a) {
    if (!a.square()) throw RingMismatch("characteristic polynomial of a non-square matrix");
    if (base_ring(a.ring()) != Ring::Real)
        throw UnsupportedRing("characteristic polynomial over " + ring_name(a.ring()) + " is not supported");
    if (is_doubled(a.ring())) return poly_mul(char_poly_single(a.block(0)), char_poly_single(a.block(1)));
    return char_poly_single(a);
}

RingMatrix ring_embed_real(const RingMatrix& a) {
    if (is_doubled(a.ring())) throw UnsupportedRing("real embedding of a doubled ring");
    const int w = ring_width(a.ring());
    RingMatrix r = RingMatrix::zero(Ring::Real, a.rows() * w, a.cols() * w);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const RingScalar& x = a.at(i, j);
            auto put = [&](int bi, int bj, const Rational& v) { r.at(i * w + bi, j * w + bj) = RingScalar(v); };
            if (w == 1) {
                put(0, 0, x[0]);
            } else if (w == 2) {
                put(0, 0, x[0]);
                put(0, 1, -x[1]);
                put(1, 0, x[1]);
                put(1, 1, x[0]);
            } else {
                // left multiplication by a0 + a1 i + a2 j + a3 k
                const Rational a0 = x[0], a1 = x[1], a2 = x[2], a3 = x[3];
                const Rational rows[4][4] = {{a0, -a1, -a2, -a3},
                                             {a1, a0, -a3, a2},
                                             {a2, a3, a0, -a1},
                                             {a3, -a2, a1, a0}};
                for (int bi = 0; bi < 4; ++bi)
                    for (int bj = 0; bj < 4; ++bj) put(bi, bj, rows[bi][bj]);
            }
        }
    return r;
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
    const bool da = is_doubled(a.ring()), db = is_doubled(b.ring());
    if (da && db) throw RingMismatch("Kronecker product of two doubled rings");
    Ring ba = base_ring(a.ring()), bb = base_ring(b.ring());
    if (ba != Ring::Real && bb != Ring::Real)
        throw RingMismatch("Kronecker product of " + ring_name(a.ring()) + " and " + ring_name(b.ring()));
    Ring base = ba == Ring::Real ? bb : ba;
    auto single = [&](const RingMatrix& x, const RingMatrix& y) {
        RingMatrix r = RingMatrix::zero(base, x.rows() * y.rows(), x.cols() * y.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) {
                const RingScalar& s = x.at(i, j);
                if (s.is_zero()) continue;
                for (std::size_t k = 0; k < y.rows(); ++k)
                    for (std::size_t l = 0; l < y.cols(); ++l)
                        if (!y.at(k, l).is_zero()) r.at(i * y.rows() + k, j * y.cols() + l) = s * y.at(k, l);
            }
        return r;
    };
    if (da) return RingMatrix::doubled(single(a.block(0), b), single(a.block(1), b));
    if (db) return RingMatrix::doubled(single(a, b.block(0)), single(a, b.block(1)));
    return single(a, b);
}

std::string format_matrix(const RingMatrix& a) {
    std::ostringstream os;
    os << ring_name(a.ring()) << "(" << a.rows() << ")\n";
    for (int blk = 0; blk < a.blocks(); ++blk) {
        if (a.blocks() == 2) os << (blk == 0 ? "plus:\n" : "minus:\n");
        std::vector<std::string> cells(a.rows() * a.cols());
        std::vector<std::size_t> width(a.cols(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                cells[i * a.cols() + j] = a.at(i, j, blk).to_string();
                width[j] = std::max(width[j], cells[i * a.cols() + j].size());
            }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            os << "[";
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const std::string& c = cells[i * a.cols() + j];
                os << " " << std::string(width[j] - c.size(), ' ') << c;
            }
            os << " ]\n";
        }
    }
    return os.str();
}

}  // namespace cliffrep
