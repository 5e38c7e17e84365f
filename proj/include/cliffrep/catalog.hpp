#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffrep/multivector.hpp"
#include "cliffrep/mv_matrix.hpp"
#include "cliffrep/ring_matrix.hpp"

namespace cliffrep {

struct Classification {
    Ring ring = Ring::Real;
    std::size_t size = 1;
};

// Ring and matrix size of the simple (or doubled) matrix algebra for (p,q).
Classification classify(const Signature& sig);

// P and P^-1 kept as ordered factor lists; P * Pinv * scale = I.
struct TransformPair {
    std::vector<MvMatrix> p_factors;
    std::vector<MvMatrix> pinv_factors;
    Rational scale = 1;

    std::size_t size() const;
    MvMatrix p() const;
    MvMatrix pinv() const;
    bool is_inverse_pair() const;
};

// a0 + a1*axis -> a0 - a1*axis, with a0, a1 in the span of products of `sub`
struct Twist {
    Multivector axis;
    std::vector<Multivector> sub;
};
using Slot = std::vector<Twist>;  // twists applied to a on one diagonal entry

enum class Replication { Plain, ConjugatePairs };

enum class LeafKind {
    None,
    Scalar,             // (0,0)
    Hyperbolic,         // (1,0) over 2R
    ComplexReal,        // (0,1) as 2x2 real
    ComplexUnit,        // (0,1) over C
    Euclid2,            // (2,0)
    Split2,             // (1,1)
    Quaternion,         // (0,2) over H
    QuaternionComplex,  // (0,2) over C(2)
    QuaternionReal,     // (0,2) as 4x4 real
};

class RepSpec;
using SpecPtr = std::shared_ptr<const RepSpec>;

struct LiteralResult {
    std::string label;
    std::string literal;
    std::string corrected;
    bool passed = false;
    std::string failure;
};

class RepSpec {
public:
    Signature sig;
    std::string route;
    Ring ring = Ring::Real;
    std::size_t size = 1;  // block size for doubled rings
    TransformPair transform;
    std::vector<Slot> slots;
    std::vector<Multivector> units;  // i for C; i, j for H
    std::vector<std::size_t> plus_index, minus_index;
    std::string source = "constructed";  // printed | constructed | corrected
    std::vector<LiteralResult> literals;

    // tensor parts; empty for leaves
    LeafKind leaf = LeafKind::None;
    SpecPtr first, second;
    GeneratorList first_gens, second_gens;

    Replication replication() const;
    std::size_t transform_size() const { return slots.size(); }

    // closed-form image; the oracle in verify conjugates through the transform instead
    RingMatrix represent(const Multivector& a) const;

    // tensor fast-path data
    Embedding first_emb, second_emb;
    std::vector<std::pair<BladeMask, BladeMask>> preimage;  // host generator -> (first, second) masks
    bool group_by_second = true;
    std::vector<RingMatrix> small_images;
};

SpecPtr make_leaf(LeafKind kind);
SpecPtr make_tensor(Signature host, std::string route, SpecPtr first, GeneratorList first_gens, SpecPtr second,
                    GeneratorList second_gens);

// Conjugate diag(slots(a)) through the transform and read the entries back as ring scalars.
MvMatrix conjugate_through(const RepSpec& spec, const Multivector& a);
RingMatrix read_entries(const RepSpec& spec, const MvMatrix& m);

struct CatalogEntry {
    Signature sig;
    std::string route;
    bool classification = true;  // route realizes classify(sig)
};

std::vector<CatalogEntry> catalog_entries();
std::string default_route(const Signature& sig);
std::string classification_route(const Signature& sig);
std::vector<std::string> routes_for(const Signature& sig);

// Memoized lookup; empty route selects the default. Throws CatalogMiss.
SpecPtr lookup_spec(const Signature& sig, const std::string& route = "");
SpecPtr build_explicit(const Signature& sig);

// P = P^-1 = [tau_ji] from a complete system of matrix units tau_ij.
TransformPair build_lemma11(const Signature& sig, const std::vector<std::vector<Multivector>>& tau);

struct Correction {
    std::string location;
    std::string literal;
    std::string corrected;
    std::string failing_check;
};

std::vector<Correction> correction_ledger();
std::string format_catalog();
std::string format_corrections();

}  // namespace cliffrep
