#pragma once

// File helpers shared by the exporters. Writes land in a temporary file
// that is renamed into place, so readers never observe partial output.

#include <string>

namespace primewalk {

// Throws std::runtime_error on failure.
void write_file_atomic(const std::string& bytes, const std::string& path);
std::string read_file(const std::string& path);

} // namespace primewalk
