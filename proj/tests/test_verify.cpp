#include "cliffrep/mv_text.hpp"
#include "cliffrep/verify.hpp"
#include "doctest.h"

using namespace cliffrep;

namespace {

RingMatrix real(std::vector<std::vector<long long>> rows) {
    RingMatrix m = RingMatrix::zero(Ring::Real, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

bool all_pass(const std::vector<CheckReport>& reps) {
    for (const auto& r : reps)
        if (!r.passed) return false;
    return true;
}

}  // namespace

TEST_CASE("oracle examples") {
    Signature c(0, 1);
    CHECK(oracle_represent(parse_multivector("eps1", c), *lookup_spec(c)) == real({{0, -1}, {1, 0}}));
    Signature e(2, 0);
    CHECK(oracle_represent(parse_multivector("e1", e), *lookup_spec(e)) == real({{1, 0}, {0, -1}}));
    for (const auto& entry : catalog_entries()) {
        if (entry.sig.n() > 5) continue;
        auto spec = lookup_spec(entry.sig, entry.route);
        CHECK(oracle_represent(Multivector::scalar(entry.sig, 1), *spec) == RingMatrix::identity(spec->ring, spec->size));
    }
}

TEST_CASE("corrupted transforms are caught") {
    RepSpec bad = *lookup_spec(Signature(3, 1));
    MvMatrix p = bad.transform.p_factors.front();
    p.at(0, 1) = p.at(0, 1) + Multivector::generator(bad.sig, 1);
    bad.transform.p_factors.front() = p;
    CheckReport r = check_transform(bad);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.counterexample.empty());
    CHECK(check_transform(Signature(3, 1)).passed);
}

TEST_CASE("doubled-ring transforms are checked") {
    for (Signature s : {Signature(1, 0), Signature(2, 1), Signature(0, 3), Signature(5, 0), Signature(0, 7)})
        CHECK(check_transform(s).passed);
}

TEST_CASE("similarity checks") {
    CHECK(check_similarity(Signature(1, 1), "", 100, 1).passed);
    CHECK(check_similarity_blades(Signature(3, 0), "").passed);
}

TEST_CASE("reports are deterministic under a seed") {
    SuiteOptions opt;
    opt.seed = 42;
    opt.trials = 5;
    auto a = check_suite(Signature(2, 1), "explicit", opt);
    auto b = check_suite(Signature(2, 1), "explicit", opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(format_record(a[i]) == format_record(b[i]));
}

TEST_CASE("suites") {
    SuiteOptions opt;
    for (const auto& route : routes_for(Signature(0, 2))) CHECK(all_pass(check_suite(Signature(0, 2), route, opt)));
    opt.trials = 3;
    CHECK(all_pass(check_suite(Signature(9, 0), "periodic", opt)));
    CHECK(run_suites({}, opt).empty());
}

TEST_CASE("records are JSON lines") {
    CheckReport r;
    r.sig = Signature(1, 2);
    r.route = "explicit";
    r.name = "unit";
    r.seed = 3;
    const std::string want = R"j({"signature":"(1,2)","route":"explicit","name":"unit","status":"pass","seed":3})j";
    CHECK(format_record(r) == want);
}
