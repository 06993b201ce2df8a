#include "primewalk/io.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace primewalk {

void write_file_atomic(const std::string& bytes, const std::string& path) {
    std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
    std::size_t written = std::fwrite(bytes.data(), 1, bytes.size(), f);
    int close_err = std::fclose(f);
    if (written != bytes.size() || close_err != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string bytes;
    char buf[1 << 16];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) bytes.append(buf, got);
    bool read_err = std::ferror(f) != 0;
    std::fclose(f);
    if (read_err) throw std::runtime_error("read failed: " + path);
    return bytes;
}

} // namespace primewalk
