#pragma once

#include "digitforge/words.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace digitforge {

// Digit-stream cache: one stream file per (spec, base) key under a
// directory. Lookups shorter than the stored stream slice the prefix;
// longer requests recompute the full stream, cross-check that the stored
// digits are a prefix of the recomputation (io_error otherwise: a cache
// that disagrees with a fresh run is corrupt), and replace the file.
// Writes go through a create-exclusive .lock file plus temp-and-rename,
// so concurrent readers never see a torn file; if another process holds
// the lock the write is skipped and the computed digits are still
// returned.
class DigitCache {
public:
    explicit DigitCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    // FNV-1a over "spec|base", hex; the stream file is <key>.dg.
    static std::string key(const std::string& spec, uint32_t base);

    // Resolution order: explicit flag value, DIGITFORGE_CACHE, none.
    static std::optional<std::filesystem::path>
    resolve_dir(const std::string& flag_value);

    DigitWord get(const std::string& spec, uint32_t base, size_t count,
                  const std::function<DigitWord(size_t)>& compute);

private:
    std::filesystem::path dir_;
};

} // namespace digitforge
