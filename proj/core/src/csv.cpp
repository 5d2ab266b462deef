#include "cwt/csv.hpp"

#include <charconv>
#include <fstream>

#include "cwt/errors.hpp"

namespace cwt {

std::string format_g17(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               std::span<const std::vector<double>> rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_g17(row[i]);
        }
        out << '\n';
    }
}

}  // namespace cwt
