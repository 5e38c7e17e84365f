#include <set>

#include "cliffrep/catalog.hpp"
#include "cliffrep/mv_text.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffrep;

namespace {

Multivector mv(const std::string& text, Signature s) { return parse_multivector(text, s); }

RingMatrix real(std::vector<std::vector<long long>> rows) {
    RingMatrix m = RingMatrix::zero(Ring::Real, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

MvMatrix mvmat(Signature s, std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Multivector>> m;
    for (auto& r : rows) {
        m.emplace_back();
        for (auto& t : r) m.back().push_back(mv(t, s));
    }
    return MvMatrix::from_rows(s, m);
}

bool has_location(const std::vector<Correction>& ledger, const std::string& needle) {
    for (const auto& c : ledger)
        if (c.location.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("classify follows the mod 8 table") {
    auto cl = [](int p, int q) { return classify(Signature(p, q)); };
    CHECK(cl(3, 1).ring == Ring::Real);
    CHECK(cl(3, 1).size == 4);
    CHECK(cl(2, 2).ring == Ring::Real);
    CHECK(cl(2, 2).size == 4);
    CHECK(cl(0, 2).ring == Ring::Quaternion);
    CHECK(cl(0, 2).size == 1);
    CHECK(cl(2, 1).ring == Ring::DoubledReal);
    CHECK(cl(2, 1).size == 2);
    CHECK(cl(0, 3).ring == Ring::DoubledQuaternion);
    CHECK(cl(1, 0).ring == Ring::DoubledReal);
    CHECK(cl(0, 1).ring == Ring::Complex);
    // dimension count over every signature up to 16 generators
    for (int n = 0; n <= 16; ++n)
        for (int p = 0; p <= n; ++p) {
            Classification c = cl(p, n - p);
            std::size_t dim = c.size * c.size * ring_width(c.ring) * (is_doubled(c.ring) ? 2 : 1);
            CHECK(dim == (std::size_t{1} << n));
        }
    // R(p+8,q) is 16x16 over R(p,q)
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            CHECK(cl(p + 8, q).ring == cl(p, q).ring);
            CHECK(cl(p + 8, q).size == 16 * cl(p, q).size);
        }
}

TEST_CASE("printed leaf transforms") {
    SUBCASE("(1,0)") {
        Signature s(1, 0);
        auto spec = lookup_spec(s);
        CHECK(spec->source == "printed");
        CHECK(spec->transform.p() == mvmat(s, {{"1/2+1/2*e1", "-1/2+1/2*e1"}, {"1/2-1/2*e1", "1/2+1/2*e1"}}));
        CHECK(spec->transform.pinv() == mvmat(s, {{"1/2+1/2*e1", "1/2-1/2*e1"}, {"-1/2+1/2*e1", "1/2+1/2*e1"}}));
        CHECK(spec->replication() == Replication::ConjugatePairs);
    }
    SUBCASE("(0,1) stores the stripped 1/sqrt2 as scale 1/2") {
        Signature s(0, 1);
        auto spec = lookup_spec(s, "real2");
        CHECK(spec->transform.p() == mvmat(s, {{"1", "eps1"}, {"-1*eps1", "-1"}}));
        CHECK(spec->transform.scale == Rational(1, 2));
        CHECK(spec->ring == Ring::Real);
        CHECK(spec->size == 2);
        CHECK(spec->replication() == Replication::ConjugatePairs);
    }
    SUBCASE("(2,0)") {
        Signature s(2, 0);
        auto spec = lookup_spec(s);
        CHECK(spec->transform.p() == mvmat(s, {{"1/2+1/2*e1", "1/2*e2-1/2*e12"}, {"1/2*e2+1/2*e12", "1/2-1/2*e1"}}));
        CHECK(spec->transform.scale == Rational(1));
        CHECK(spec->replication() == Replication::Plain);
    }
    SUBCASE("(0,2) real route uses the 4x4 Q") {
        auto spec = lookup_spec(Signature(0, 2), "real4");
        CHECK(spec->source == "printed");
        CHECK(spec->transform_size() == 4);
        CHECK(spec->ring == Ring::Real);
        CHECK(spec->size == 4);
    }
    SUBCASE("(0,2) complex route: printed P is not its own inverse") {
        auto spec = lookup_spec(Signature(0, 2), "complex");
        CHECK(spec->source == "corrected");
        REQUIRE(spec->literals.size() == 1);
        CHECK_FALSE(spec->literals[0].passed);
        CHECK(spec->transform.is_inverse_pair());
    }
}

TEST_CASE("every catalog entry has a valid transform and agrees with its oracle on blades") {
    for (const auto& e : catalog_entries()) {
        if (e.sig.n() > 6) continue;
        CAPTURE(e.sig.to_string());
        CAPTURE(e.route);
        auto spec = lookup_spec(e.sig, e.route);
        CHECK(spec->transform.is_inverse_pair());
        CHECK(spec->transform_size() == spec->slots.size());
        for (BladeMask m = 0; m <= e.sig.full_mask(); ++m) {
            Multivector b = Multivector::blade(e.sig, m);
            CHECK(read_entries(*spec, conjugate_through(*spec, b)) == spec->represent(b));
        }
    }
}

TEST_CASE("generator images satisfy the defining relations") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.sig.to_string());
        CAPTURE(e.route);
        auto spec = lookup_spec(e.sig, e.route);
        const Signature& s = e.sig;
        std::vector<RingMatrix> g;
        for (int i = 1; i <= s.n(); ++i) g.push_back(spec->represent(Multivector::generator(s, i)));
        RingMatrix id = RingMatrix::identity(spec->ring, spec->size);
        for (int i = 0; i < s.n(); ++i) {
            CHECK(mat_mul(g[i], g[i]) == mat_scale(i < s.p ? 1 : -1, id));
            for (int j = i + 1; j < s.n(); ++j)
                CHECK(mat_add(mat_mul(g[i], g[j]), mat_mul(g[j], g[i])) == RingMatrix::zero(spec->ring, spec->size));
        }
    }
}

TEST_CASE("classification routes realize classify") {
    for (const auto& e : catalog_entries()) {
        if (!e.classification) continue;
        CAPTURE(e.sig.to_string());
        auto spec = lookup_spec(e.sig, e.route);
        Classification c = classify(e.sig);
        CHECK(spec->ring == c.ring);
        CHECK(spec->size == c.size);
    }
}

TEST_CASE("diagonal family routes agree with explicit builds") {
    for (Signature s : {Signature(1, 1), Signature(2, 2), Signature(3, 3), Signature(2, 1)}) {
        CAPTURE(s.to_string());
        auto a = lookup_spec(s, "explicit");
        auto b = lookup_spec(s, "diag");
        for (BladeMask m = 0; m <= s.full_mask(); ++m) {
            Multivector x = Multivector::blade(s, m);
            CHECK(a->represent(x) == b->represent(x));
        }
    }
}

TEST_CASE("catalog misses name a nearby route") {
    try {
        lookup_spec(Signature(3, 5));
        FAIL("expected a miss");
    } catch (const CatalogMiss& e) {
        CHECK_FALSE(e.nearest.empty());
    }
    CHECK_THROWS_AS(lookup_spec(Signature(2, 0), "quaternion"), CatalogMiss);
    CHECK(routes_for(Signature(3, 5)).empty());
    CHECK(default_route(Signature(0, 2)) == "quaternion");
    CHECK(default_route(Signature(0, 1)) == "real2");
}

TEST_CASE("lemma transform from matrix units") {
    SUBCASE("(2,0) reproduces the printed transform") {
        Signature s(2, 0);
        std::vector<std::vector<Multivector>> tau = {{mv("1/2+1/2*e1", s), mv("1/2*e2+1/2*e12", s)},
                                                     {mv("1/2*e2-1/2*e12", s), mv("1/2-1/2*e1", s)}};
        TransformPair t = build_lemma11(s, tau);
        CHECK(t.p() == lookup_spec(s)->transform.p());
        CHECK(t.is_inverse_pair());
    }
    SUBCASE("(1,1) reproduces the printed transform") {
        Signature s(1, 1);
        std::vector<std::vector<Multivector>> tau = {
            {mv("1/2+1/2*e1", s), mv("-1/2*eps1-1/2*e1*eps1", s)},
            {mv("1/2*eps1-1/2*e1*eps1", s), mv("1/2-1/2*e1", s)}};
        TransformPair t = build_lemma11(s, tau);
        CHECK(t.p() == mvmat(s, {{"1/2+1/2*e1", "1/2*eps1-1/2*e1*eps1"}, {"-1/2*eps1-1/2*e1*eps1", "1/2-1/2*e1"}}));
        CHECK(t.is_inverse_pair());
    }
    SUBCASE("broken units are rejected") {
        Signature s(2, 0);
        std::vector<std::vector<Multivector>> tau = {{mv("1/2+1/2*e1", s), mv("1/2*e2", s)},
                                                     {mv("1/2*e2-1/2*e12", s), mv("1/2-1/2*e1", s)}};
        CHECK_THROWS_AS(build_lemma11(s, tau), BasisChangeError);
    }
}

TEST_CASE("corrections ledger records the amended formulas") {
    auto ledger = correction_ledger();
    CHECK(has_location(ledger, "transform for (0,2) over C(2)"));
    CHECK(has_location(ledger, "transform for (3,1)"));
    CHECK(has_location(ledger, "conjugating matrix in the proof for (5,0)"));
    CHECK(has_location(ledger, "image formula for (1,5)"));
    CHECK(has_location(ledger, "low-dimension isomorphism for (2,2)"));
    CHECK(has_location(ledger, "classification table, row q-p = 7 mod 8"));
    for (const auto& c : ledger) {
        CAPTURE(c.location);
        CHECK_FALSE(c.literal.empty());
        CHECK_FALSE(c.failing_check.empty());
    }
    // every spec that is not built from its printed form has a ledger line
    std::set<std::string> locs;
    for (const auto& c : ledger) locs.insert(c.location);
    for (const auto& e : catalog_entries()) {
        auto spec = lookup_spec(e.sig, e.route);
        if (spec->source != "corrected") continue;
        bool found = false;
        for (const auto& l : locs) found |= l.find(e.sig.to_string()) != std::string::npos;
        CHECK_MESSAGE(found, e.sig.to_string());
    }
}

TEST_CASE("non-anticommuting generators are rejected") {
    Signature s(3, 0);
    CHECK_THROWS_AS(GeneratorList::checked(s, {mv("e1", s), mv("e23", s)}), StructureError);
}

TEST_CASE("(0,1) closed form") {
    auto spec = lookup_spec(Signature(0, 1));
    CHECK(spec->represent(mv("3+2*eps1", Signature(0, 1))) == real({{3, -2}, {2, 3}}));
}
