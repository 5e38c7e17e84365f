#pragma once

#include <string>
#include <vector>

#include "cliffrep/multivector.hpp"

namespace cliffrep {

// Dense matrix with multivector entries over one signature.
class MvMatrix {
public:
    MvMatrix() = default;
    MvMatrix(Signature sig, std::size_t rows, std::size_t cols);
    static MvMatrix identity(Signature sig, std::size_t n);
    static MvMatrix diagonal(Signature sig, const std::vector<Multivector>& entries);
    static MvMatrix from_rows(Signature sig, const std::vector<std::vector<Multivector>>& rows);

    const Signature& signature() const { return sig_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Multivector& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Multivector& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_identity() const;
    std::size_t nonzeros() const;

    friend MvMatrix operator*(const MvMatrix& a, const MvMatrix& b);
    friend MvMatrix operator*(const Rational& s, MvMatrix a);
    friend MvMatrix operator+(const MvMatrix& a, const MvMatrix& b);
    friend bool operator==(const MvMatrix& a, const MvMatrix& b);

private:
    Signature sig_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Multivector> data_;
};

MvMatrix kron_identity_left(const MvMatrix& a, std::size_t m);   // a (x) I_m
MvMatrix kron_identity_right(std::size_t m, const MvMatrix& b);  // I_m (x) b
MvMatrix map_entries(const MvMatrix& a, const Embedding& emb);
MvMatrix product(const std::vector<MvMatrix>& factors, Signature sig, std::size_t n);

std::string format_mv_matrix(const MvMatrix& a);

}  // namespace cliffrep
