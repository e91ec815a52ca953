#include "digitforge/cache.hpp"

#include "digitforge/error.hpp"
#include "digitforge/stream_file.hpp"

#include <cstdlib>

#include <fcntl.h>
#include <unistd.h>

namespace digitforge {

DigitCache::DigitCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) fail(errc::io_error, "cannot create cache dir " + dir_.string());
}

std::string DigitCache::key(const std::string& spec, uint32_t base) {
    std::string data = spec;
    data += '|';
    data += std::to_string(base);
    uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::optional<std::filesystem::path>
DigitCache::resolve_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("DIGITFORGE_CACHE"); env && *env)
        return std::filesystem::path(env);
    if (!flag_value.empty()) return std::filesystem::path(flag_value);
    return std::nullopt;
}

DigitWord DigitCache::get(const std::string& spec, uint32_t base, size_t count,
                          const std::function<DigitWord(size_t)>& compute) {
    const std::filesystem::path file = dir_ / (key(spec, base) + ".dg");

    std::optional<DigitWord> cached;
    if (std::filesystem::exists(file)) {
        StreamFile loaded = read_stream_file(file);
        if (loaded.word.base() != base || loaded.spec != spec)
            fail(errc::io_error,
                 "cache entry " + file.string() +
                     " belongs to a different stream (key collision or "
                     "corruption); delete it");
        if (loaded.word.size() >= count) return loaded.word.slice(0, count);
        cached = std::move(loaded.word);
    }

    DigitWord fresh = compute(count);
    if (cached && !cached->is_prefix_of(fresh))
        fail(errc::io_error,
             "cache entry " + file.string() +
                 " disagrees with a fresh recompute; delete it");

    const std::filesystem::path lock = file.string() + ".lock";
    int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd >= 0) {
        ::close(fd);
        const std::filesystem::path tmp = file.string() + ".tmp";
        try {
            write_stream_file(tmp, fresh, spec);
            std::filesystem::rename(tmp, file);
        } catch (...) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            std::filesystem::remove(lock, ec);
            throw;
        }
        std::error_code ec;
        std::filesystem::remove(lock, ec);
    }
    // Lock held elsewhere: another writer is on it; the computed digits
    // are still the answer.
    return fresh;
}

} // namespace digitforge
