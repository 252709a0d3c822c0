#pragma once

#include <filesystem>
#include <string>

#include "modcorr/modpoly.hpp"

namespace modcorr {

/* MODCORR_CACHE_DIR if set, else the platform cache directory
   ($XDG_CACHE_HOME or ~/.cache) under modcorr/. */
std::filesystem::path default_cache_dir();

std::filesystem::path cache_path(const std::filesystem::path& dir, long level, long n,
                                 PolyKind kind);

/* Canonical byte representation: fixed field order, terms sorted by
   (deg_X desc, deg_Y desc), decimal-string coefficients.  Recomputing
   and re-serializing a polynomial reproduces the file byte for byte. */
std::string cache_serialize(const ModPoly& p);

/* Atomic write: serialize to a temporary file in the same directory,
   then rename over the target. */
void cache_store(const std::filesystem::path& dir, const ModPoly& p);

bool cache_has(const std::filesystem::path& dir, long level, long n, PolyKind kind);

/* Parses and validates; a malformed file or one whose header disagrees
   with the requested (level, n, kind) raises IntegrityError. */
ModPoly cache_load(const std::filesystem::path& dir, long level, long n, PolyKind kind);

/* Returns the cached polynomial when present, otherwise computes and
   stores it; *hit reports which happened. */
ModPoly cache_load_or_compute(const std::filesystem::path& dir, long level, long n, PolyKind kind,
                              long guard = kDefaultGuard, unsigned threads = 1,
                              bool* hit = nullptr);

}  // namespace modcorr
