#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace cwt {

// Locale-independent "%.17g"-style formatting via std::to_chars. All CSV
// output goes through this so repeated runs are byte-identical.
std::string format_g17(double value);

void write_csv(const std::filesystem::path& path, const std::string& header,
               std::span<const std::vector<double>> rows);

}  // namespace cwt
