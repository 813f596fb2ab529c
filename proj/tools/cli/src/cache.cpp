#include "disclab_cli/cache.hpp"

#include <zlib.h>

#include <charconv>
#include <iostream>
#include <sstream>

namespace disclab::cli {

namespace {

constexpr const char* kMagic = "disclab-cache 1 ";

std::string hex(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

std::string record_body(std::size_t cell, const Json& result) {
    return std::to_string(cell) + '\t' + result.dump();
}

bool parse_record(const std::string& line, std::size_t& cell, Json& result) {
    const auto last_tab = line.rfind('\t');
    if (last_tab == std::string::npos) return false;
    const std::string body = line.substr(0, last_tab);
    if (line.substr(last_tab + 1) != hex(crc32_of(body))) return false;
    const auto first_tab = body.find('\t');
    if (first_tab == std::string::npos) return false;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + first_tab, cell);
    if (ec != std::errc() || ptr != body.data() + first_tab) return false;
    result = Json::parse(body.substr(first_tab + 1), nullptr, false);
    return !result.is_discarded();
}

} // namespace

std::uint32_t crc32_of(const std::string& bytes) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

ScanCache::ScanCache(std::filesystem::path path, const Json& config) : path_(std::move(path)) {
    const std::string header = kMagic + hex(crc32_of(config.dump()));
    std::uintmax_t valid_end = 0;
    bool fresh = true;

    if (std::ifstream in{path_, std::ios::binary}) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string data = buffer.str();
        const auto eol = data.find('\n');
        if (eol != std::string::npos && data.compare(0, eol, header) == 0) {
            fresh = false;
            std::size_t pos = eol + 1;
            valid_end = pos;
            while (pos < data.size()) {
                const auto next = data.find('\n', pos);
                std::size_t cell = 0;
                Json result;
                if (next == std::string::npos ||
                    !parse_record(data.substr(pos, next - pos), cell, result)) {
                    std::cerr << "warning: cache " << path_.string() << " is corrupt at byte " << pos
                              << "; truncating " << data.size() - pos << " bytes\n";
                    break;
                }
                records_[cell] = std::move(result);
                pos = next + 1;
                valid_end = pos;
            }
        } else if (!data.empty()) {
            std::cerr << "warning: cache " << path_.string()
                      << " belongs to a different configuration; starting over\n";
        }
    }

    if (fresh) {
        std::ofstream init{path_, std::ios::binary | std::ios::trunc};
        init << header << '\n';
        if (!init) throw std::ios_base::failure("cannot write cache " + path_.string());
    } else {
        std::filesystem::resize_file(path_, valid_end);
    }
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) throw std::ios_base::failure("cannot open cache " + path_.string());
}

void ScanCache::append(std::size_t cell, const Json& result) {
    const std::string body = record_body(cell, result);
    const std::string line = body + '\t' + hex(crc32_of(body)) + '\n';
    std::lock_guard lock(mutex_);
    out_ << line;
    out_.flush();
    if (!out_) throw std::ios_base::failure("cannot append to cache " + path_.string());
}

} // namespace disclab::cli
