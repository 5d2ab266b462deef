#pragma once

#include <filesystem>

#include "cwt/grid.hpp"

namespace cwt {

// Binary grid format: magic "CWT1", u32 dim, u32 sizes[dim],
// f64 box_halfwidth[dim], f64 interleaved (re, im) samples, little-endian.
void write_grid(const std::filesystem::path& path, const GridFunction& f);
GridFunction read_grid(const std::filesystem::path& path);

}  // namespace cwt
