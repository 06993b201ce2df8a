#include "primewalk/raster.hpp"

#include <cmath>
#include <stdexcept>

#include "primewalk/io.hpp"

namespace primewalk {

Raster rasterize(const VisitGrid& grid, RasterScale scale) {
    if (grid.empty())
        throw std::invalid_argument("rasterize: empty grid");
    const Bbox& box = grid.bbox();

    Raster raster;
    raster.width = box.width();
    raster.height = box.height();
    raster.pixels.assign(raster.width * raster.height, 0);

    uint64_t z_max = (scale == RasterScale::binary) ? 1 : grid.max_count();
    double log_denom = std::log1p(static_cast<double>(z_max));

    grid.for_each([&](GridCoord c, uint64_t z) {
        uint64_t col = static_cast<uint64_t>(c.x - box.min_x);
        uint64_t row = static_cast<uint64_t>(box.max_y - c.y);
        uint8_t value;
        switch (scale) {
            case RasterScale::binary:
                value = 255;
                break;
            case RasterScale::linear:
                value = static_cast<uint8_t>(255 * z / z_max);
                break;
            default:
                value = static_cast<uint8_t>(
                    255.0 * std::log1p(static_cast<double>(z)) / log_denom);
                break;
        }
        raster.pixels[row * raster.width + col] = value;
    });
    return raster;
}

std::string pgm_encode(const Raster& raster, bool plain) {
    std::string out;
    out += plain ? "P2\n" : "P5\n";
    out += "# row 0 = max y; columns run from min x to max x\n";
    out += std::to_string(raster.width) + " " + std::to_string(raster.height) + "\n255\n";
    if (plain) {
        // keep lines within the format's 70-character limit
        std::size_t line_len = 0;
        for (uint64_t row = 0; row < raster.height; ++row) {
            for (uint64_t col = 0; col < raster.width; ++col) {
                std::string v = std::to_string(raster.at(row, col));
                if (line_len > 0 && line_len + 1 + v.size() > 70) {
                    out += '\n';
                    line_len = 0;
                }
                if (line_len > 0) {
                    out += ' ';
                    ++line_len;
                }
                out += v;
                line_len += v.size();
            }
        }
        if (line_len > 0) out += '\n';
    } else {
        out.append(reinterpret_cast<const char*>(raster.pixels.data()), raster.pixels.size());
    }
    return out;
}

void pgm_write_file(const Raster& raster, const std::string& path, bool plain) {
    write_file_atomic(pgm_encode(raster, plain), path);
}

} // namespace primewalk
