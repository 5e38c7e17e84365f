#include "cliffrep/multivector.hpp"

#include <algorithm>

namespace cliffrep {

int pseudoscalar_square(const Signature& sig) {
    if (sig.n() == 0) throw DegenerateSignature("pseudoscalar of the zero-generator algebra");
    int n = sig.n();
    int s = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    return (sig.q % 2 == 0) ? s : -s;
}

void require_same_signature(const Multivector& a, const Multivector& b) {
    if (a.signature() != b.signature())
        throw SignatureMismatch("signature mismatch " + a.signature().to_string() + " vs " +
                                b.signature().to_string());
}

Multivector Multivector::scalar(Signature sig, Rational c) { return blade(sig, 0, std::move(c)); }

Multivector Multivector::blade(Signature sig, BladeMask mask, Rational c) {
    if (!sig.fits(mask)) throw WidthError("blade mask exceeds signature " + sig.to_string());
    Multivector m(sig);
    if (!c.is_zero()) m.terms_.push_back({mask, std::move(c)});
    return m;
}

Multivector Multivector::generator(Signature sig, int index) {
    if (index < 1 || index > sig.n())
        throw WidthError("generator index " + std::to_string(index) + " outside " + sig.to_string());
    return blade(sig, BladeMask{1} << (index - 1));
}

Multivector Multivector::from_terms(Signature sig, std::vector<Term> terms) {
    Multivector m(sig);
    for (const auto& t : terms)
        if (!sig.fits(t.mask)) throw WidthError("blade mask exceeds signature " + sig.to_string());
    bool canonical = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff.is_zero() || (i > 0 && terms[i - 1].mask >= terms[i].mask)) {
            canonical = false;
            break;
        }
    }
    if (canonical) {
        m.terms_ = std::move(terms);
        return m;
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mask < y.mask; });
    for (auto& t : terms) {
        if (!m.terms_.empty() && m.terms_.back().mask == t.mask) m.terms_.back().coeff += t.coeff;
        else {
            if (!m.terms_.empty() && m.terms_.back().coeff.is_zero()) m.terms_.pop_back();
            m.terms_.push_back(std::move(t));
        }
    }
    if (!m.terms_.empty() && m.terms_.back().coeff.is_zero()) m.terms_.pop_back();
    return m;
}

Rational Multivector::coeff(BladeMask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, BladeMask m) { return t.mask < m; });
    if (it != terms_.end() && it->mask == mask) return it->coeff;
    return {};
}

std::optional<SignedBlade> Multivector::as_signed_blade() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& c = terms_[0].coeff;
    if (c.is_one()) return SignedBlade{1, terms_[0].mask};
    if ((-c).is_one()) return SignedBlade{-1, terms_[0].mask};
    return std::nullopt;
}

Multivector Multivector::operator-() const {
    Multivector r(sig_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mask, -t.coeff});
    return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    require_same_signature(*this, o);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mask < o.terms_[j].mask)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].mask < terms_[i].mask) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back({terms_[i].mask, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector& Multivector::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    require_same_signature(a, b);
    const Signature& sig = a.sig_;
    Multivector r(sig);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const BladeMask neg = sig.neg_mask();
    const std::size_t count = a.terms_.size() * b.terms_.size();
    const int n = sig.n();

    if (n <= 16 && count * 4 >= (std::size_t{1} << n)) {
        std::vector<Rational> acc(std::size_t{1} << n);
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                Rational c = x.coeff * y.coeff;
                if (blade_sign(neg, x.mask, y.mask) < 0) acc[x.mask ^ y.mask] -= c;
                else acc[x.mask ^ y.mask] += c;
            }
        }
        for (std::size_t m = 0; m < acc.size(); ++m)
            if (!acc[m].is_zero()) r.terms_.push_back({static_cast<BladeMask>(m), std::move(acc[m])});
        return r;
    }

    std::vector<Term> buf;
    buf.reserve(count);
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Rational c = x.coeff * y.coeff;
            if (blade_sign(neg, x.mask, y.mask) < 0) c = -c;
            buf.push_back({x.mask ^ y.mask, std::move(c)});
        }
    }
    return Multivector::from_terms(sig, std::move(buf));
}

bool operator==(const Multivector& a, const Multivector& b) {
    if (a.sig_ != b.sig_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mask != b.terms_[i].mask || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Multivector pseudoscalar(const Signature& sig) { return Multivector::blade(sig, sig.full_mask()); }

}  // namespace cliffrep
