#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffrep/rational.hpp"

namespace cliffrep {

enum class Ring { Real, Complex, Quaternion, DoubledReal, DoubledQuaternion };

std::string ring_name(Ring r);  // R, C, H, 2R, 2H
bool is_doubled(Ring r);
Ring base_ring(Ring r);      // 2R -> R, 2H -> H
Ring doubled_of(Ring base);  // R -> 2R, H -> 2H
int ring_width(Ring r);      // real components per entry: 1, 2 or 4

// Entry of a matrix over R, C or H; components (r, i, j, k) with ij = k.
class RingScalar {
public:
    RingScalar() = default;
    RingScalar(Rational r) : ring_(Ring::Real) { c_[0] = std::move(r); }  // NOLINT
    static RingScalar complex(Rational r, Rational i);
    static RingScalar quaternion(Rational r, Rational i, Rational j, Rational k);
    static RingScalar zero(Ring ring);
    static RingScalar one(Ring ring);

    Ring ring() const { return ring_; }
    const Rational& operator[](int k) const { return c_[k]; }
    RingScalar with_ring(Ring r) const;

    bool is_zero() const;
    RingScalar conj() const;
    Rational norm2() const;
    std::optional<RingScalar> inverse() const;

    RingScalar operator-() const;
    RingScalar& operator+=(const RingScalar& o);
    RingScalar& operator-=(const RingScalar& o);
    friend RingScalar operator+(RingScalar a, const RingScalar& b) { return a += b; }
    friend RingScalar operator-(RingScalar a, const RingScalar& b) { return a -= b; }
    friend RingScalar operator*(const RingScalar& a, const RingScalar& b);
    friend RingScalar operator*(const Rational& s, const RingScalar& a);
    friend bool operator==(const RingScalar& a, const RingScalar& b);

    std::string to_string() const;

private:
    Ring ring_ = Ring::Real;
    std::array<Rational, 4> c_{};
};

// Matrix over R, C, H, or a plus/minus block pair over 2R / 2H.
class RingMatrix {
public:
    RingMatrix() = default;
    static RingMatrix zero(Ring ring, std::size_t rows, std::size_t cols);
    static RingMatrix zero(Ring ring, std::size_t n) { return zero(ring, n, n); }
    static RingMatrix identity(Ring ring, std::size_t n);
    static RingMatrix doubled(const RingMatrix& plus, const RingMatrix& minus);

    Ring ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return rows_; }
    bool square() const { return rows_ == cols_; }
    int blocks() const { return is_doubled(ring_) ? 2 : 1; }

    RingScalar& at(std::size_t i, std::size_t j, int block = 0) { return data_[block][i * cols_ + j]; }
    const RingScalar& at(std::size_t i, std::size_t j, int block = 0) const {
        return data_[block][i * cols_ + j];
    }
    RingMatrix block(int b) const;  // plus (0) or minus (1) block as an undoubled matrix

    friend bool operator==(const RingMatrix& a, const RingMatrix& b);

private:
    Ring ring_ = Ring::Real;
    std::size_t rows_ = 0, cols_ = 0;
    std::array<std::vector<RingScalar>, 2> data_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_scale(const Rational& s, const RingMatrix& a);
std::optional<RingMatrix> mat_inverse(const RingMatrix& a);
RingScalar mat_det(const RingMatrix& a);
// coefficients c_0..c_s of det(lambda I - A), c_s = 1
std::vector<Rational> char_poly(const RingMatrix& a);
RingMatrix ring_embed_real(const RingMatrix& a);
// Kronecker product, a-major; at most one factor may carry non-real units
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);

std::string format_matrix(const RingMatrix& a);

}  // namespace cliffrep
