#include "laborshare/paths.hpp"

#include <cstdlib>

#include "laborshare/errors.hpp"

#ifndef LABORSHARE_BUNDLED_DATA_DIR
#define LABORSHARE_BUNDLED_DATA_DIR ""
#endif

namespace laborshare {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("LABORSHARE_DATA_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::filesystem::path(LABORSHARE_BUNDLED_DATA_DIR);
}

std::filesystem::path resolve_data_path(const std::filesystem::path& given) {
    std::error_code ec;
    if (std::filesystem::exists(given, ec))
        return given;
    if (given.is_relative()) {
        const std::filesystem::path dir = data_dir();
        if (!dir.empty()) {
            const std::filesystem::path candidate = dir / given;
            if (std::filesystem::exists(candidate, ec))
                return candidate;
        }
    }
    throw DataError("file not found: " + given.string() +
                    " (also looked in the bundled data directory)");
}

} // namespace laborshare
