#pragma once

#include <stdexcept>
#include <string>

namespace snp {

// Precondition violation on caller input (bad sizes, indices, malformed data).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Arithmetic invariant broken inside the library; never valid input's fault.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Feature deliberately outside the supported surface.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (subset count, group size, closure size) was hit.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace snp
