#pragma once

#include <stdexcept>
#include <string>

namespace grpcover {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (cycle notation, expressions, catalog files).
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// A configured size/count cap was exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

// Catalog file content problems (bad entries, duplicates, order mismatches).
struct CatalogError : Error {
    using Error::Error;
};

// Section checksum does not match the canonical section text.
struct ChecksumError : CatalogError {
    int order;
    ChecksumError(int ord, const std::string& msg)
        : CatalogError(msg), order(ord) {}
};

// The solver has no complete candidate pool for an order it must examine.
struct SourceUnavailable : Error {
    long order;
    explicit SourceUnavailable(long n)
        : Error("candidate source unavailable for order " + std::to_string(n)),
          order(n) {}
};

}  // namespace grpcover
