#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffrep/catalog.hpp"

namespace cliffrep {

struct RepImage {
    Signature sig;
    RingMatrix value;
    std::string route;
};

// phi(a) through the catalog spec; empty route selects the default.
RepImage represent(const Multivector& a, const std::string& route = "");

// Blade images of one (signature, route) with a trace-dual solve back to multivectors.
class BasisImageTable {
public:
    explicit BasisImageTable(SpecPtr spec);

    const RepSpec& spec() const { return *spec_; }
    RingMatrix image(BladeMask m) const;
    // exact solve; throws NotInImage when m is not phi of anything
    Multivector solve(const RingMatrix& m) const;

private:
    SpecPtr spec_;
    Rational trace_one_;
    std::vector<RingMatrix> cached_;  // all blades when n is small
};

const BasisImageTable& basis_table(const Signature& sig, const std::string& route = "");

Multivector reconstruct(const RepImage& m);

// nullopt when a is a zero divisor
std::optional<Multivector> element_inverse(const Multivector& a, const std::string& route = "");

RingScalar element_det(const Multivector& a, const std::string& route = "");
// c_0..c_s of det(lambda I - phi(a)); real targets only
std::vector<Rational> element_charpoly(const Multivector& a, const std::string& route = "");
// sum c_k a^k
Multivector eval_poly(const std::vector<Rational>& coeffs, const Multivector& a);

// Block lift of an m x n array over (1,0) (doubled pair) or (0,1) ([A0, -A1; A1, A0]).
RingMatrix matrix_represent(const std::vector<std::vector<Multivector>>& a);

// Re tr(a b) over both blocks, without forming the product.
Rational real_trace_product(const RingMatrix& a, const RingMatrix& b);

}  // namespace cliffrep
