#include "cwt/grid_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "cwt/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid files are little-endian; big-endian hosts are unsupported");

namespace cwt {

namespace {
constexpr char kMagic[4] = {'C', 'W', 'T', '1'};
}

void write_grid(const std::filesystem::path& path, const GridFunction& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(kMagic, 4);
    const std::uint32_t dim = static_cast<std::uint32_t>(f.spec().dim());
    out.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
    for (int a = 0; a < f.spec().dim(); ++a) {
        const std::uint32_t n = static_cast<std::uint32_t>(f.spec().size(a));
        out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    }
    for (int a = 0; a < f.spec().dim(); ++a) {
        const double L = f.spec().halfwidth(a);
        out.write(reinterpret_cast<const char*>(&L), sizeof(L));
    }
    out.write(reinterpret_cast<const char*>(f.values().data()),
              static_cast<std::streamsize>(f.size() * sizeof(std::complex<double>)));
    if (!out) throw Error("short write to " + path.string());
}

GridFunction read_grid(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw Error(path.string() + ": not a CWT1 grid file");
    std::uint32_t dim = 0;
    in.read(reinterpret_cast<char*>(&dim), sizeof(dim));
    if (!in || dim < 1 || dim > kMaxGridDim) throw Error(path.string() + ": bad dimension");
    std::vector<int> sizes(dim);
    for (auto& n : sizes) {
        std::uint32_t v = 0;
        in.read(reinterpret_cast<char*>(&v), sizeof(v));
        n = static_cast<int>(v);
    }
    std::vector<double> half(dim);
    in.read(reinterpret_cast<char*>(half.data()), static_cast<std::streamsize>(dim * sizeof(double)));
    if (!in) throw Error(path.string() + ": truncated header");
    GridSpec spec(sizes, half);
    GridFunction f(spec);
    in.read(reinterpret_cast<char*>(f.values().data()),
            static_cast<std::streamsize>(f.size() * sizeof(std::complex<double>)));
    if (!in) throw Error(path.string() + ": truncated samples");
    return f;
}

}  // namespace cwt
