#include "cliffrep/rep_map.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cliffrep {

RepImage represent(const Multivector& a, const std::string& route) {
    SpecPtr spec = lookup_spec(a.signature(), route);
    return {a.signature(), spec->represent(a), spec->route};
}

Rational real_trace_product(const RingMatrix& a, const RingMatrix& b) {
    if (a.ring() != b.ring() || a.cols() != b.rows() || a.rows() != b.cols())
        throw RingMismatch("trace of incompatible matrices");
    const int w = ring_width(a.ring());
    Rational t = 0;
    for (int blk = 0; blk < a.blocks(); ++blk)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const RingScalar& x = a.at(i, j, blk);
                const RingScalar& y = b.at(j, i, blk);
                if (x.is_zero() || y.is_zero()) continue;
                t += x[0] * y[0];
                for (int k = 1; k < w; ++k) t -= x[k] * y[k];
            }
    return t;
}

BasisImageTable::BasisImageTable(SpecPtr spec) : spec_(std::move(spec)) {
    const Signature& s = spec_->sig;
    RingMatrix one = spec_->represent(Multivector::scalar(s, 1));
    trace_one_ = real_trace_product(one, one);
    if (s.n() <= 6)
        for (BladeMask m = 0; m <= s.full_mask(); ++m) cached_.push_back(spec_->represent(Multivector::blade(s, m)));
}

RingMatrix BasisImageTable::image(BladeMask m) const {
    if (m < cached_.size()) return cached_[m];
    return spec_->represent(Multivector::blade(spec_->sig, m));
}

Multivector BasisImageTable::solve(const RingMatrix& m) const {
    const Signature& s = spec_->sig;
    const RingMatrix probe = image(0);
    if (m.ring() != probe.ring() || m.rows() != probe.rows() || m.cols() != probe.cols())
        throw NotInImage("matrix is not " + ring_name(probe.ring()) + "(" + std::to_string(probe.rows()) + ")");
    // blade images are orthogonal under Re tr, and e_B^-1 = e_B * (e_B)^2
    std::vector<Term> terms;
    for (BladeMask b = 0;; ++b) {
        Rational t = real_trace_product(image(b), m);
        if (!t.is_zero()) terms.push_back({b, t * Rational(blade_square(s, b)) / trace_one_});
        if (b == s.full_mask()) break;
    }
    Multivector a = Multivector::from_terms(s, std::move(terms));
    if (!(spec_->represent(a) == m)) throw NotInImage("matrix is outside the image of " + s.to_string());
    return a;
}

const BasisImageTable& basis_table(const Signature& sig, const std::string& route) {
    static std::mutex mu;
    static std::map<std::pair<Signature, std::string>, std::unique_ptr<BasisImageTable>> memo;
    SpecPtr spec = lookup_spec(sig, route);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = memo[{sig, spec->route}];
    if (!slot) slot = std::make_unique<BasisImageTable>(spec);
    return *slot;
}

Multivector reconstruct(const RepImage& m) { return basis_table(m.sig, m.route).solve(m.value); }

std::optional<Multivector> element_inverse(const Multivector& a, const std::string& route) {
    RepImage img = represent(a, route);
    auto inv = mat_inverse(img.value);
    if (!inv) return std::nullopt;
    return basis_table(img.sig, img.route).solve(*inv);
}

RingScalar element_det(const Multivector& a, const std::string& route) {
    return mat_det(represent(a, route).value);
}

std::vector<Rational> element_charpoly(const Multivector& a, const std::string& route) {
    return char_poly(represent(a, route).value);
}

Multivector eval_poly(const std::vector<Rational>& coeffs, const Multivector& a) {
    Multivector r(a.signature());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * a + Multivector::scalar(a.signature(), *it);
    return r;
}

RingMatrix matrix_represent(const std::vector<std::vector<Multivector>>& a) {
    if (a.empty() || a[0].empty()) throw StructureError("empty matrix");
    const Signature s = a[0][0].signature();
    const bool hyperbolic = s == Signature(1, 0);
    if (!hyperbolic && s != Signature(0, 1))
        throw SignatureMismatch("matrix lift is defined over (1,0) and (0,1), not " + s.to_string());
    const std::size_t m = a.size(), n = a[0].size();
    RingMatrix a0 = RingMatrix::zero(Ring::Real, m, n), a1 = a0;
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw StructureError("ragged matrix");
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j].signature() != s) throw SignatureMismatch("matrix entries mix signatures");
            a0.at(i, j) = a[i][j].coeff(0);
            a1.at(i, j) = a[i][j].coeff(1);
        }
    }
    if (hyperbolic) return RingMatrix::doubled(mat_add(a0, a1), mat_sub(a0, a1));
    RingMatrix r = RingMatrix::zero(Ring::Real, 2 * m, 2 * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r.at(i, j) = a0.at(i, j);
            r.at(i, n + j) = -a1.at(i, j);
            r.at(m + i, j) = a1.at(i, j);
            r.at(m + i, n + j) = a0.at(i, j);
        }
    return r;
}

}  // namespace cliffrep
