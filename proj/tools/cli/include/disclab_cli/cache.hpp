#pragma once

// Append-only record file of completed scan cells.
//
//   disclab-cache 1 <config crc32>
//   <cell index>\t<result json>\t<crc32 of the first two fields>
//
// A header for a different config starts the file over. The first record
// that fails its checksum, or a final line without a newline, ends the
// valid prefix; the file is truncated there with a warning.

#include "disclab_cli/report.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>

namespace disclab::cli {

std::uint32_t crc32_of(const std::string& bytes);

class ScanCache {
public:
    /// Opens (or creates) the file and loads every valid record. Warnings go
    /// to std::cerr. Throws std::ios_base::failure when the file is unusable.
    ScanCache(std::filesystem::path path, const Json& config);

    const std::map<std::size_t, Json>& records() const noexcept { return records_; }

    /// Thread-safe; flushed before returning.
    void append(std::size_t cell, const Json& result);

private:
    std::filesystem::path path_;
    std::map<std::size_t, Json> records_;
    std::ofstream out_;
    std::mutex mutex_;
};

} // namespace disclab::cli
