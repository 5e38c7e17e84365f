#include "cliffrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <json.hpp>

#include "cliffrep/mv_text.hpp"
#include "cliffrep/rep_map.hpp"

namespace cliffrep {

RingMatrix oracle_represent(const Multivector& a, const RepSpec& spec) {
    return read_entries(spec, conjugate_through(spec, a));
}

Multivector sample_multivector(const Signature& sig, std::mt19937_64& rng) {
    auto coeff = [&] {
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = static_cast<long long>(rng() % 3) + 1;
        return Rational(num, den);
    };
    std::vector<Term> terms;
    if (sig.n() <= 6) {
        for (BladeMask m = 0; m <= sig.full_mask(); ++m) terms.push_back({m, coeff()});
    } else {
        for (int i = 0; i < 64; ++i) terms.push_back({static_cast<BladeMask>(rng()) & sig.full_mask(), coeff()});
    }
    return Multivector::from_terms(sig, std::move(terms));
}

std::mt19937_64 seeded_rng(uint64_t seed, const Signature& sig, const std::string& route, const std::string& check) {
    // FNV-1a over the check identity keeps streams independent of run order
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    };
    mix(std::to_string(seed));
    mix(sig.to_string());
    mix(route);
    mix(check);
    return std::mt19937_64(h);
}

namespace {

CheckReport report(const RepSpec& spec, std::string name, uint64_t seed = 0) {
    CheckReport r;
    r.sig = spec.sig;
    r.route = spec.route;
    r.name = std::move(name);
    r.seed = seed;
    return r;
}

void fail(CheckReport& r, std::string counterexample, std::string detail = {}) {
    if (!r.passed) return;
    r.passed = false;
    r.counterexample = std::move(counterexample);
    r.detail = std::move(detail);
}

int default_trials(const Signature& s) { return s.n() <= 6 ? 100 : 10; }

void similarity_on(CheckReport& r, const RepSpec& spec, const Multivector& a) {
    try {
        if (!(oracle_represent(a, spec) == spec.represent(a)))
            fail(r, "a = " + format_multivector(a), "oracle and fast path differ");
    } catch (const EqualityViolation& e) {
        fail(r, "a = " + format_multivector(a), e.what());
    }
}

CheckReport check_unit(const RepSpec& spec) {
    CheckReport r = report(spec, "unit");
    RingMatrix one = spec.represent(Multivector::scalar(spec.sig, 1));
    if (!(one == RingMatrix::identity(spec.ring, spec.size))) fail(r, "a = 1", "phi(1) is not the identity");
    return r;
}

CheckReport check_unit_blades(const RepSpec& spec) {
    CheckReport r = report(spec, "unit-blades");
    const Multivector minus_one = Multivector::scalar(spec.sig, -1);
    for (const auto& u : spec.units)
        if (!(u * u == minus_one)) fail(r, "u = " + format_multivector(u), "unit does not square to -1");
    if (spec.units.size() == 2) {
        const auto& i = spec.units[0];
        const auto& j = spec.units[1];
        if (!((i * j + j * i).is_zero()))
            fail(r, "i = " + format_multivector(i) + ", j = " + format_multivector(j), "units commute");
    }
    std::size_t want = base_ring(spec.ring) == Ring::Complex ? 1 : base_ring(spec.ring) == Ring::Quaternion ? 2 : 0;
    if (spec.units.size() != want) fail(r, "", "wrong number of unit blades for " + ring_name(spec.ring));
    return r;
}

CheckReport check_homomorphism(const RepSpec& spec, int trials, uint64_t seed) {
    CheckReport r = report(spec, "homomorphism", seed);
    auto rng = seeded_rng(seed, spec.sig, spec.route, r.name);
    for (int t = 0; t < trials && r.passed; ++t) {
        Multivector a = sample_multivector(spec.sig, rng), b = sample_multivector(spec.sig, rng);
        Rational lambda(static_cast<long long>(rng() % 19) - 9, static_cast<long long>(rng() % 3) + 1);
        RingMatrix pa = spec.represent(a), pb = spec.represent(b);
        std::string ce = "a = " + format_multivector(a) + ", b = " + format_multivector(b);
        if (!(spec.represent(a * b) == mat_mul(pa, pb))) fail(r, ce, "phi(ab) != phi(a)phi(b)");
        else if (!(spec.represent(a + b) == mat_add(pa, pb))) fail(r, ce, "phi(a+b) != phi(a)+phi(b)");
        else if (!(spec.represent(lambda * a) == mat_scale(lambda, pa)))
            fail(r, ce + ", lambda = " + lambda.to_string(), "phi(lambda a) != lambda phi(a)");
    }
    return r;
}

// Blade images are orthogonal under Re tr with nonzero norms, hence independent.
CheckReport check_faithfulness(const RepSpec& spec, uint64_t seed) {
    CheckReport r = report(spec, "faithfulness", seed);
    const Signature& s = spec.sig;
    std::vector<BladeMask> blades;
    if (s.n() <= 6) {
        for (BladeMask m = 0; m <= s.full_mask(); ++m) blades.push_back(m);
    } else {
        auto rng = seeded_rng(seed, s, spec.route, r.name);
        blades.push_back(0);
        for (int i = 0; i < 24; ++i) blades.push_back(static_cast<BladeMask>(rng()) & s.full_mask());
        std::sort(blades.begin(), blades.end());
        blades.erase(std::unique(blades.begin(), blades.end()), blades.end());
    }
    std::vector<RingMatrix> img;
    for (BladeMask m : blades) img.push_back(spec.represent(Multivector::blade(s, m)));
    for (std::size_t x = 0; x < blades.size() && r.passed; ++x)
        for (std::size_t y = x; y < blades.size(); ++y) {
            Rational t = real_trace_product(img[x], img[y]);
            if ((x == y) == t.is_zero()) {
                fail(r, "blades " + format_blade(s, blades[x]) + ", " + format_blade(s, blades[y]),
                     "basis images are not independent");
                break;
            }
        }
    return r;
}

CheckReport check_round_trip(const RepSpec& spec, int random, uint64_t seed) {
    CheckReport r = report(spec, "round-trip", seed);
    const Signature& s = spec.sig;
    const BasisImageTable& table = basis_table(s, spec.route);
    auto one = [&](const Multivector& a) {
        try {
            if (!(table.solve(spec.represent(a)) == a)) fail(r, "a = " + format_multivector(a), "reconstruct(phi(a)) != a");
        } catch (const NotInImage& e) {
            fail(r, "a = " + format_multivector(a), e.what());
        }
    };
    if (s.n() <= 6)
        for (BladeMask m = 0; m <= s.full_mask() && r.passed; ++m) one(Multivector::blade(s, m));
    auto rng = seeded_rng(seed, s, spec.route, r.name);
    for (int t = 0; t < random && r.passed; ++t) one(sample_multivector(s, rng));
    return r;
}

CheckReport check_inverse(const RepSpec& spec, int trials, uint64_t seed) {
    CheckReport r = report(spec, "inverse-pullback", seed);
    auto rng = seeded_rng(seed, spec.sig, spec.route, r.name);
    const Multivector one = Multivector::scalar(spec.sig, 1);
    int invertible = 0;
    for (int t = 0; t < trials && r.passed; ++t) {
        Multivector a = sample_multivector(spec.sig, rng);
        auto inv = element_inverse(a, spec.route);
        if (!inv) continue;
        ++invertible;
        if (!(a * *inv == one) || !(*inv * a == one))
            fail(r, "a = " + format_multivector(a), "a * inverse(a) != 1");
    }
    r.detail = r.passed ? std::to_string(invertible) + " of " + std::to_string(trials) + " invertible" : r.detail;
    return r;
}

CheckReport check_cayley_hamilton(const RepSpec& spec, int trials, uint64_t seed) {
    CheckReport r = report(spec, "cayley-hamilton", seed);
    auto rng = seeded_rng(seed, spec.sig, spec.route, r.name);
    for (int t = 0; t < trials && r.passed; ++t) {
        Multivector a = sample_multivector(spec.sig, rng);
        if (!eval_poly(char_poly(spec.represent(a)), a).is_zero())
            fail(r, "a = " + format_multivector(a), "p_a(a) != 0");
    }
    return r;
}

}  // namespace

CheckReport check_transform(const RepSpec& spec) {
    CheckReport r = report(spec, "transform");
    MvMatrix prod = spec.transform.scale * (spec.transform.p() * spec.transform.pinv());
    for (std::size_t i = 0; i < prod.rows() && r.passed; ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) {
            const Multivector& e = prod.at(i, j);
            bool ok = i == j ? e == Multivector::scalar(spec.sig, 1) : e.is_zero();
            if (!ok) {
                fail(r, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + format_multivector(e),
                     "P * scale * Pinv != I");
                break;
            }
        }
    return r;
}

CheckReport check_transform(const Signature& sig, const std::string& route) {
    return check_transform(*lookup_spec(sig, route));
}

CheckReport check_similarity(const Signature& sig, const std::string& route, int trials, uint64_t seed) {
    SpecPtr spec = lookup_spec(sig, route);
    CheckReport r = report(*spec, "similarity", seed);
    auto rng = seeded_rng(seed, sig, spec->route, r.name);
    for (int t = 0; t < trials && r.passed; ++t) similarity_on(r, *spec, sample_multivector(sig, rng));
    return r;
}

CheckReport check_similarity_blades(const Signature& sig, const std::string& route) {
    SpecPtr spec = lookup_spec(sig, route);
    CheckReport r = report(*spec, "similarity-blades");
    for (BladeMask m = 0; m <= sig.full_mask() && r.passed; ++m) similarity_on(r, *spec, Multivector::blade(sig, m));
    return r;
}

std::vector<CheckReport> check_suite(const Signature& sig, const std::string& route, const SuiteOptions& opt) {
    SpecPtr spec = lookup_spec(sig, route);
    const int trials = opt.trials < 0 ? default_trials(sig) : opt.trials;
    const bool small = sig.n() <= 6;
    std::vector<CheckReport> out;
    out.push_back(check_transform(*spec));
    out.push_back(check_similarity(sig, spec->route, trials, opt.seed));
    out.push_back(check_unit(*spec));
    out.push_back(check_unit_blades(*spec));
    out.push_back(check_homomorphism(*spec, trials, opt.seed));
    out.push_back(check_faithfulness(*spec, opt.seed));
    out.push_back(check_round_trip(*spec, small ? 20 : std::min(trials, 3), opt.seed));
    out.push_back(check_inverse(*spec, sig.n() <= 4 ? 50 : std::min(trials, 5), opt.seed));
    if (base_ring(spec->ring) == Ring::Real && small) out.push_back(check_cayley_hamilton(*spec, std::min(trials, 10), opt.seed));
    return out;
}

std::vector<CheckReport> run_suites(const std::vector<CatalogEntry>& entries, const SuiteOptions& opt) {
    std::vector<CheckReport> out;
    for (const auto& e : entries) {
        auto part = check_suite(e.sig, e.route, opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.sig, a.route, a.name) < std::tie(b.sig, b.route, b.name);
    });
    return out;
}

std::string format_report_line(const CheckReport& r) {
    std::string s = (r.passed ? "pass " : "FAIL ") + r.sig.to_string() + " " + r.route + " " + r.name;
    if (!r.passed) s += " seed=" + std::to_string(r.seed) + " " + r.counterexample + (r.detail.empty() ? "" : ": " + r.detail);
    return s;
}

std::string format_record(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["signature"] = r.sig.to_string();
    j["route"] = r.route;
    j["name"] = r.name;
    j["status"] = r.passed ? "pass" : "fail";
    j["seed"] = r.seed;
    if (!r.passed) {
        j["counterexample"] = r.counterexample;
        j["detail"] = r.detail;
    }
    return j.dump();
}

}  // namespace cliffrep
