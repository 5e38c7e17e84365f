#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "cliffrep/errors.hpp"

namespace cliffrep {

using BladeMask = uint32_t;

inline constexpr int kMaxGenerators = 32;

struct Signature {
    int p = 0;
    int q = 0;

    Signature() = default;
    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0) throw StructureError("signature counts must be non-negative");
        if (p + q > kMaxGenerators) throw WidthError("signature exceeds 32 generators");
    }

    int n() const { return p + q; }
    BladeMask full_mask() const {
        return n() == 32 ? ~BladeMask{0} : (BladeMask{1} << n()) - 1;
    }
    // generators p+1..n square to -1; bit i-1 stands for generator i
    BladeMask neg_mask() const { return p == 32 ? 0 : full_mask() & ~((BladeMask{1} << p) - 1); }
    bool fits(BladeMask m) const { return (m & ~full_mask()) == 0; }

    std::string to_string() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct SignedBlade {
    int sign = 1;
    BladeMask mask = 0;
    friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// Sign of e_a * e_b from reordering plus the squares of shared generators.
inline int blade_sign(BladeMask neg, BladeMask a, BladeMask b) {
    int swaps = 0;
    for (BladeMask x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
    swaps += std::popcount(a & b & neg);
    return (swaps & 1) ? -1 : 1;
}

inline SignedBlade blade_product(const Signature& sig, BladeMask a, BladeMask b) {
    if (!sig.fits(a) || !sig.fits(b))
        throw WidthError("blade mask exceeds signature " + sig.to_string());
    return {blade_sign(sig.neg_mask(), a, b), a ^ b};
}

inline int blade_square(const Signature& sig, BladeMask a) { return blade_product(sig, a, a).sign; }

int pseudoscalar_square(const Signature& sig);

}  // namespace cliffrep
