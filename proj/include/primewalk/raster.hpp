#pragma once

// PGM (portable graymap) export of visit grids. The raster spans exactly
// the grid's bounding box; image row 0 holds the cells with y = max_y
// (stated again in the file's comment header). Maxval is 255.

#include <cstdint>
#include <string>
#include <vector>

#include "primewalk/grid.hpp"

namespace primewalk {

enum class RasterScale : uint8_t {
    binary,  // visited -> 255, unvisited -> 0
    linear,  // floor(255 * z / z_max)
    log      // floor(255 * ln(1+z) / ln(1+z_max))
};

struct Raster {
    uint64_t width = 0;
    uint64_t height = 0;
    std::vector<uint8_t> pixels;  // row-major, row 0 = max_y

    uint8_t at(uint64_t row, uint64_t col) const { return pixels[row * width + col]; }
};

// Rasterize the grid over its bounding box. Throws std::invalid_argument
// on an empty grid.
Raster rasterize(const VisitGrid& grid, RasterScale scale);

// Serialize as PGM: binary (P5) or plain-text (P2). Output is
// byte-deterministic for identical input.
std::string pgm_encode(const Raster& raster, bool plain = false);

// Atomic write (temporary file, then rename). Throws std::runtime_error
// on I/O failure.
void pgm_write_file(const Raster& raster, const std::string& path, bool plain = false);

} // namespace primewalk
