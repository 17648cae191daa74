#pragma once

#include <cstdint>

#include "nodesense/point.hpp"

namespace nodesense::coverage {

/// Circular radio-coverage region of a dynamic network, centered on the
/// center node's position with radius R.
struct CoverageRegion {
    Point2D center;
    double radius = 1.0;
};

enum class Membership { Inside, Boundary, Outside };

/// Classification of a cell center against a region. `score` is
/// (x1-x2)^2/R^2 + (y1-y2)^2/R^2: below 1 is inside, above 1 outside,
/// within epsilon of 1 is the boundary band.
struct CellMembership {
    double score = 0.0;
    Membership membership = Membership::Inside;
};

/// Split of m IP addresses over n cells. Floor division; the remainder
/// is held in a global reserve and never assigned. `warning` flags
/// m < n, where every cell ends up with an empty block.
struct IpAllocation {
    std::uint64_t total_ips = 0;
    std::uint64_t cells = 1;
    std::uint64_t per_cell = 0;
    std::uint64_t remainder = 0;
    bool warning = false;
};

CellMembership classify_cell(const CoverageRegion& region, const Point2D& cell_center,
                             double epsilon = 1e-9);

IpAllocation partition_ips(std::uint64_t total_ips, std::uint64_t cells);

const char* to_string(Membership m) noexcept;

}  // namespace nodesense::coverage
