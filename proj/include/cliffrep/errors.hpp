#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffrep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WidthError : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct DegenerateSignature : Error { using Error::Error; };
struct StructureError : Error { using Error::Error; };
struct DecompositionError : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };
struct UnsupportedRing : Error { using Error::Error; };
struct BasisChangeError : Error { using Error::Error; };
struct EqualityViolation : Error { using Error::Error; };
struct NotInImage : Error { using Error::Error; };

struct CatalogMiss : Error {
    CatalogMiss(const std::string& what, std::string nearest_route)
        : Error(what), nearest(std::move(nearest_route)) {}
    std::string nearest;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace cliffrep
