#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliffrep/catalog.hpp"

namespace cliffrep {

struct CheckReport {
    Signature sig;
    std::string route;
    std::string name;
    bool passed = true;
    uint64_t seed = 0;
    std::string counterexample;  // empty on pass
    std::string detail;
};

// P D_a (scale Pinv), entries read back as ring scalars; throws EqualityViolation.
RingMatrix oracle_represent(const Multivector& a, const RepSpec& spec);

// coefficients a/b with |a| <= 9, b in 1..3; dense for n <= 6, else 64 random blades
Multivector sample_multivector(const Signature& sig, std::mt19937_64& rng);
std::mt19937_64 seeded_rng(uint64_t seed, const Signature& sig, const std::string& route, const std::string& check);

CheckReport check_transform(const RepSpec& spec);
CheckReport check_transform(const Signature& sig, const std::string& route = "");
CheckReport check_similarity(const Signature& sig, const std::string& route, int trials, uint64_t seed);
CheckReport check_similarity_blades(const Signature& sig, const std::string& route);

struct SuiteOptions {
    int trials = -1;  // -1: 100 for n <= 6, 10 above
    uint64_t seed = 7;
};

std::vector<CheckReport> check_suite(const Signature& sig, const std::string& route, const SuiteOptions& opt);

// sorted by signature, route, check name
std::vector<CheckReport> run_suites(const std::vector<CatalogEntry>& entries, const SuiteOptions& opt);

std::string format_report_line(const CheckReport& r);
std::string format_record(const CheckReport& r);  // one JSON object, no newline

}  // namespace cliffrep
