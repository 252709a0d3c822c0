#include "modcorr/cache.hpp"

#include <nlohmann/json.hpp>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "modcorr/errors.hpp"

namespace modcorr {

namespace {

const char* kind_name(PolyKind k) { return k == PolyKind::psi ? "psi" : "phi"; }

}  // namespace

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("MODCORR_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "modcorr";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "modcorr";
    return std::filesystem::path("modcorr-cache");
}

std::filesystem::path cache_path(const std::filesystem::path& dir, long level, long n,
                                 PolyKind kind) {
    std::ostringstream name;
    name << kind_name(kind) << "_M" << level << "_N" << n << ".json";
    return dir / name.str();
}

std::string cache_serialize(const ModPoly& p) {
    std::ostringstream out;
    out << "{\"M\":" << p.level << ",\"N\":" << p.n << ",\"kind\":\"" << kind_name(p.kind)
        << "\",\"terms\":[";
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        if (!first) out << ",";
        first = false;
        out << "[" << it->first.first << "," << it->first.second << ",\""
            << it->second.get_str() << "\"]";
    }
    out << "]}\n";
    return out.str();
}

void cache_store(const std::filesystem::path& dir, const ModPoly& p) {
    std::filesystem::create_directories(dir);
    std::filesystem::path target = cache_path(dir, p.level, p.n, p.kind);
    std::filesystem::path temp = target;
    temp += ".tmp" + std::to_string(static_cast<long long>(::getpid()));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw IntegrityError("cannot open cache file for writing: " + temp.string());
        out << cache_serialize(p);
        if (!out.flush()) throw IntegrityError("short write to cache file: " + temp.string());
    }
    std::filesystem::rename(temp, target);
}

bool cache_has(const std::filesystem::path& dir, long level, long n, PolyKind kind) {
    std::error_code ec;
    return std::filesystem::is_regular_file(cache_path(dir, level, n, kind), ec);
}

ModPoly cache_load(const std::filesystem::path& dir, long level, long n, PolyKind kind) {
    std::filesystem::path file = cache_path(dir, level, n, kind);
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IntegrityError("cache file missing or unreadable: " + file.string());

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError("corrupt cache file " + file.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("M") || !doc.contains("N") || !doc.contains("kind") ||
        !doc.contains("terms") || !doc["M"].is_number_integer() ||
        !doc["N"].is_number_integer() || !doc["kind"].is_string() || !doc["terms"].is_array())
        throw IntegrityError("corrupt cache file " + file.string() + ": bad schema");
    if (doc["M"].get<long>() != level || doc["N"].get<long>() != n ||
        doc["kind"].get<std::string>() != kind_name(kind))
        throw IntegrityError("cache metadata mismatch in " + file.string());

    ModPoly p;
    p.level = level;
    p.n = n;
    p.kind = kind;
    for (const auto& t : doc["terms"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_string())
            throw IntegrityError("corrupt cache file " + file.string() + ": bad term");
        Int c;
        if (mpz_set_str(c.get_mpz_t(), t[2].get<std::string>().c_str(), 10) != 0)
            throw IntegrityError("corrupt cache file " + file.string() + ": bad coefficient");
        auto [it, fresh] = p.terms.emplace(std::make_pair(t[0].get<long>(), t[1].get<long>()), c);
        if (!fresh) throw IntegrityError("corrupt cache file " + file.string() + ": repeated term");
    }
    return p;
}

ModPoly cache_load_or_compute(const std::filesystem::path& dir, long level, long n, PolyKind kind,
                              long guard, unsigned threads, bool* hit) {
    if (cache_has(dir, level, n, kind)) {
        if (hit) *hit = true;
        return cache_load(dir, level, n, kind);
    }
    if (hit) *hit = false;
    ModPoly p = kind == PolyKind::psi ? psi_polynomial(level, n, guard, threads)
                                      : phi_polynomial(level, n, guard, threads);
    cache_store(dir, p);
    return p;
}

}  // namespace modcorr
