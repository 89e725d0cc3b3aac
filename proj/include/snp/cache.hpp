#pragma once

#include <optional>
#include <string>

#include "snp/polynomial.hpp"

namespace snp {

// Persistent polynomial store shared by the family constructors and the
// verify sweeps.  Content-addressed by (family kind | index | code version);
// JSON values on disk.  Disabled unless a directory is configured, so unit
// tests stay hermetic.  Concurrent readers, serialized writers.
class PolyCache {
public:
    static PolyCache& instance();

    // dir empty = disabled.  Clears the in-memory view.
    void configure(const std::string& dir, bool enabled);
    bool enabled() const;
    std::string directory() const;

    std::optional<Polynomial> get(const std::string& key);
    void put(const std::string& key, const Polynomial& value);

    std::size_t clear();        // removes all entries, returns count
    std::size_t entry_count();  // files currently stored

    static std::string code_version();

private:
    PolyCache() = default;
    struct Impl;
    Impl& impl();
};

} // namespace snp
