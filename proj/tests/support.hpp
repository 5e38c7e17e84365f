#pragma once

#include <random>
#include <vector>

#include "cliffrep/multivector.hpp"

namespace testsupport {

using namespace cliffrep;

inline Rational small_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 19) - 9;
    long long den = static_cast<long long>(rng() % 3) + 1;
    return Rational(num, den);
}

inline Multivector random_mv(const Signature& sig, std::mt19937_64& rng, std::size_t max_terms = 64) {
    std::vector<Term> terms;
    std::size_t dim = std::size_t{1} << sig.n();
    if (dim <= max_terms) {
        for (std::size_t m = 0; m < dim; ++m) terms.push_back({static_cast<BladeMask>(m), small_rational(rng)});
    } else {
        for (std::size_t i = 0; i < max_terms; ++i)
            terms.push_back({static_cast<BladeMask>(rng() & sig.full_mask()), small_rational(rng)});
    }
    return Multivector::from_terms(sig, std::move(terms));
}

// Product of blades by literally moving generators past each other.
inline std::pair<int, BladeMask> slow_blade_product(const Signature& sig, BladeMask a, BladeMask b) {
    std::vector<int> word;
    for (int i = 0; i < sig.n(); ++i)
        if (a & (1u << i)) word.push_back(i);
    for (int i = 0; i < sig.n(); ++i)
        if (b & (1u << i)) word.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] > word[k + 1]) {
                std::swap(word[k], word[k + 1]);
                sign = -sign;
                changed = true;
            } else if (word[k] == word[k + 1]) {
                if (word[k] >= sig.p) sign = -sign;
                word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
                changed = true;
                break;
            }
        }
    }
    BladeMask m = 0;
    for (int g : word) m |= 1u << g;
    return {sign, m};
}

}  // namespace testsupport
