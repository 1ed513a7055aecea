#pragma once

#include <filesystem>
#include <string>

namespace talentrec {

std::string read_file(const std::filesystem::path& path);             // throws IoError
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace talentrec
