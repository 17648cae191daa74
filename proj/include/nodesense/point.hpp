#pragma once

#include <cmath>

namespace nodesense {

/// A planar coordinate (node or cell-center position).
struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

inline bool is_finite(const Point2D& p) noexcept {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

}  // namespace nodesense
