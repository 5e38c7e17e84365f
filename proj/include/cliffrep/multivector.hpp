#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cliffrep/rational.hpp"
#include "cliffrep/signature.hpp"

namespace cliffrep {

struct Term {
    BladeMask mask = 0;
    Rational coeff;
};

// Sum of basis blades with exact coefficients; terms sorted by mask, no zeros.
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector scalar(Signature sig, Rational c);
    static Multivector blade(Signature sig, BladeMask mask, Rational c = 1);
    static Multivector generator(Signature sig, int index);  // 1-based
    static Multivector from_terms(Signature sig, std::vector<Term> terms);

    const Signature& signature() const { return sig_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0); }
    Rational coeff(BladeMask mask) const;
    Rational scalar_part() const { return coeff(0); }

    // single-term value as (sign, mask) when the coefficient is +-1
    std::optional<SignedBlade> as_signed_blade() const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Rational& c);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Rational& c, Multivector a) { return a *= c; }
    friend Multivector operator*(Multivector a, const Rational& c) { return a *= c; }

    friend bool operator==(const Multivector& a, const Multivector& b);

private:
    Signature sig_;
    std::vector<Term> terms_;
};

void require_same_signature(const Multivector& a, const Multivector& b);

inline Multivector mv_add(const Multivector& a, const Multivector& b) { return a + b; }
inline Multivector mv_mul(const Multivector& a, const Multivector& b) { return a * b; }
inline Multivector scalar_mul(const Rational& c, const Multivector& a) { return c * a; }

Multivector pseudoscalar(const Signature& sig);

// Composite generators in a host algebra, checked to square to the declared
// values and to anticommute pairwise.
class GeneratorList {
public:
    GeneratorList() = default;
    GeneratorList(Signature host, std::vector<Multivector> gens, std::vector<int> squares);
    // squares taken from computation; still checks anticommutation and that squares are +-1
    static GeneratorList checked(Signature host, std::vector<Multivector> gens);
    static GeneratorList standard(Signature sig);
    // signed blades spanning a split subalgebra; may commute with each other
    static GeneratorList spanning_blades(Signature host, std::vector<Multivector> gens);

    const Signature& host() const { return host_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const Multivector& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Multivector>& gens() const { return gens_; }
    const std::vector<int>& squares() const { return squares_; }

    // (#positive, #negative); throws unless positives come first
    Signature abstract_signature() const;

    GeneratorList concat(const GeneratorList& other) const;

private:
    Signature host_;
    std::vector<Multivector> gens_;
    std::vector<int> squares_;
};

// Maps an abstract algebra into a host algebra through a generator list.
class Embedding {
public:
    Embedding() = default;
    explicit Embedding(GeneratorList gens);

    const Signature& abstract() const { return abstract_; }
    const Signature& host() const { return gens_.host(); }
    const GeneratorList& gens() const { return gens_; }

    Multivector apply(const Multivector& a) const;
    Multivector image_of_blade(BladeMask abstract_mask) const;
    // defined only when all generators are signed blades
    std::optional<SignedBlade> blade_image(BladeMask abstract_mask) const;

private:
    GeneratorList gens_;
    Signature abstract_;
    bool monomial_ = false;
    std::vector<SignedBlade> table_;
};

Multivector reindex(const Multivector& a_abstract, const GeneratorList& gens);

// Decomposition a = a0 + a1*u with a0, a1 in the subalgebra generated by sub.
class Splitting {
public:
    Splitting(Multivector u, GeneratorList sub);

    const Multivector& axis() const { return u_; }
    const GeneratorList& sub() const { return sub_; }

    std::pair<Multivector, Multivector> split(const Multivector& a) const;
    Multivector conjugate(const Multivector& a) const;

private:
    struct Entry {
        bool odd;
        int sign;         // e_B = sign * S * u when odd
        BladeMask inner;  // host mask of S
    };
    const Entry& lookup(BladeMask mask) const;

    Multivector u_;
    GeneratorList sub_;
    std::vector<std::pair<BladeMask, Entry>> table_;  // sorted by host mask
};

std::pair<Multivector, Multivector> split_along(const Multivector& a, const Multivector& u,
                                                const GeneratorList& sub);
Multivector conjugate_along(const Multivector& a, const Multivector& u, const GeneratorList& sub);

}  // namespace cliffrep
