#include "snp/cache.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>

namespace fs = std::filesystem;

namespace snp {

namespace {
constexpr const char* kCodeVersion = "snpoly-1.0.0";

std::string key_filename(const std::string& key) {
    // stable content-addressed name: fnv over (key | version), hex
    std::string full = key + "|" + kCodeVersion;
    unsigned long long h = 1469598103934665603ull;
    for (char c : full) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return std::string(buf) + ".json";
}
} // namespace

struct PolyCache::Impl {
    std::shared_mutex mtx;
    std::string dir;
    bool enabled = false;
};

PolyCache::Impl& PolyCache::impl() {
    static Impl impl;
    return impl;
}

PolyCache& PolyCache::instance() {
    static PolyCache cache;
    return cache;
}

std::string PolyCache::code_version() { return kCodeVersion; }

void PolyCache::configure(const std::string& dir, bool on) {
    auto& im = impl();
    std::unique_lock lk(im.mtx);
    im.dir = dir;
    im.enabled = on && !dir.empty();
    if (im.enabled) {
        std::error_code ec;
        fs::create_directories(im.dir, ec);
        if (ec) im.enabled = false;
    }
}

bool PolyCache::enabled() const {
    auto& im = const_cast<PolyCache*>(this)->impl();
    std::shared_lock lk(im.mtx);
    return im.enabled;
}

std::string PolyCache::directory() const {
    auto& im = const_cast<PolyCache*>(this)->impl();
    std::shared_lock lk(im.mtx);
    return im.dir;
}

std::optional<Polynomial> PolyCache::get(const std::string& key) {
    auto& im = impl();
    std::shared_lock lk(im.mtx);
    if (!im.enabled) return std::nullopt;
    fs::path p = fs::path(im.dir) / key_filename(key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return polynomial_from_json(text);
    } catch (const std::exception&) {
        return std::nullopt; // treat corrupt entries as misses
    }
}

void PolyCache::put(const std::string& key, const Polynomial& value) {
    auto& im = impl();
    std::unique_lock lk(im.mtx);
    if (!im.enabled) return;
    fs::path p = fs::path(im.dir) / key_filename(key);
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << to_json(value);
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
}

std::size_t PolyCache::clear() {
    auto& im = impl();
    std::unique_lock lk(im.mtx);
    if (im.dir.empty()) return 0;
    std::size_t n = 0;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(im.dir, ec)) {
        if (entry.path().extension() == ".json") {
            fs::remove(entry.path(), ec);
            ++n;
        }
    }
    return n;
}

std::size_t PolyCache::entry_count() {
    auto& im = impl();
    std::shared_lock lk(im.mtx);
    if (!im.enabled) return 0;
    std::size_t n = 0;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(im.dir, ec))
        if (entry.path().extension() == ".json") ++n;
    return n;
}

} // namespace snp
