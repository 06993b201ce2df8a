#include "primewalk/grid.hpp"

#include <algorithm>

namespace primewalk {

std::vector<GridCell> VisitGrid::sorted_cells() const {
    std::vector<GridCell> cells;
    cells.reserve(size_);
    for_each([&](GridCoord c, uint64_t v) { cells.push_back({c, v}); });
    std::sort(cells.begin(), cells.end(), [](const GridCell& a, const GridCell& b) {
        if (a.coord.x != b.coord.x) return a.coord.x < b.coord.x;
        return a.coord.y < b.coord.y;
    });
    return cells;
}

bool VisitGrid::operator==(const VisitGrid& other) const {
    if (size_ != other.size_) return false;
    bool equal = true;
    for_each([&](GridCoord c, uint64_t v) {
        if (other.at(c) != v) equal = false;
    });
    return equal;
}

} // namespace primewalk
