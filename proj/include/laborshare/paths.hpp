#pragma once

#include <filesystem>

namespace laborshare {

// Resolves an input path: literal first, then $LABORSHARE_DATA_DIR, then the
// compiled-in bundled-data directory. Throws DataError if nothing exists.
std::filesystem::path resolve_data_path(const std::filesystem::path& given);

// The bundled-data directory currently in effect (env override or default).
std::filesystem::path data_dir();

} // namespace laborshare
