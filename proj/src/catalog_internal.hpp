#pragma once

#include <optional>

#include "cliffrep/catalog.hpp"

namespace cliffrep::detail {

struct DiagInfo {
    int n = 0, k = 0;
    std::vector<Multivector> outer_gens;
    Signature inner;
};

std::optional<DiagInfo> diag_info(const Signature& s);

// Tries the printed transforms for the spec's (signature, route); keeps the first that passes.
SpecPtr apply_literals(SpecPtr built);

}  // namespace cliffrep::detail

namespace cliffrep {
std::string nearest_route(const Signature& sig);
}
