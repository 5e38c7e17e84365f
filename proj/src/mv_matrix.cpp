#include "cliffrep/mv_matrix.hpp"

#include <sstream>

#include "cliffrep/mv_text.hpp"

namespace cliffrep {

MvMatrix::MvMatrix(Signature sig, std::size_t rows, std::size_t cols)
    : sig_(sig), rows_(rows), cols_(cols), data_(rows * cols, Multivector(sig)) {}

MvMatrix MvMatrix::identity(Signature sig, std::size_t n) {
    MvMatrix m(sig, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Multivector::scalar(sig, 1);
    return m;
}

MvMatrix MvMatrix::diagonal(Signature sig, const std::vector<Multivector>& entries) {
    MvMatrix m(sig, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].signature() != sig) throw SignatureMismatch("diagonal entry outside signature");
        m.at(i, i) = entries[i];
    }
    return m;
}

MvMatrix MvMatrix::from_rows(Signature sig, const std::vector<std::vector<Multivector>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    MvMatrix m(sig, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw StructureError("ragged multivector matrix");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].signature() != sig) throw SignatureMismatch("matrix entry outside signature");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

bool MvMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Multivector& e = at(i, j);
            if (i == j ? !(e.is_scalar() && e.scalar_part().is_one()) : !e.is_zero()) return false;
        }
    return true;
}

std::size_t MvMatrix::nonzeros() const {
    std::size_t k = 0;
    for (const auto& e : data_) k += !e.is_zero();
    return k;
}

MvMatrix operator*(const MvMatrix& a, const MvMatrix& b) {
    if (a.sig_ != b.sig_) throw SignatureMismatch("matrix signatures differ");
    if (a.cols_ != b.rows_) throw StructureError("matrix shapes do not compose");
    MvMatrix r(a.sig_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Multivector& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Multivector& y = b.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

MvMatrix operator*(const Rational& s, MvMatrix a) {
    for (auto& e : a.data_) e *= s;
    return a;
}

MvMatrix operator+(const MvMatrix& a, const MvMatrix& b) {
    if (a.sig_ != b.sig_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw StructureError("matrix shapes differ");
    MvMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

bool operator==(const MvMatrix& a, const MvMatrix& b) {
    return a.sig_ == b.sig_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

MvMatrix kron_identity_left(const MvMatrix& a, std::size_t m) {
    MvMatrix r(a.signature(), a.rows() * m, a.cols() * m);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) r.at(i * m + k, j * m + k) = a.at(i, j);
        }
    return r;
}

MvMatrix kron_identity_right(std::size_t m, const MvMatrix& b) {
    MvMatrix r(b.signature(), b.rows() * m, b.cols() * m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(i, j).is_zero()) r.at(k * b.rows() + i, k * b.cols() + j) = b.at(i, j);
    return r;
}

MvMatrix map_entries(const MvMatrix& a, const Embedding& emb) {
    MvMatrix r(emb.host(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) r.at(i, j) = emb.apply(a.at(i, j));
    return r;
}

MvMatrix product(const std::vector<MvMatrix>& factors, Signature sig, std::size_t n) {
    MvMatrix r = MvMatrix::identity(sig, n);
    for (const auto& f : factors) r = r * f;
    return r;
}

std::string format_mv_matrix(const MvMatrix& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " ; " : " ") << format_multivector(a.at(i, j));
        os << " ]\n";
    }
    return os.str();
}

}  // namespace cliffrep
