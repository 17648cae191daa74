#include "nodesense/coverage.hpp"

#include <cmath>

#include "nodesense/errors.hpp"

namespace nodesense::coverage {

CellMembership classify_cell(const CoverageRegion& region, const Point2D& cell_center,
                             double epsilon) {
    if (!is_finite(region.center) || !is_finite(cell_center))
        throw DomainError("non_finite_input", "region center and cell center must be finite");
    if (!std::isfinite(region.radius) || !(region.radius > 0.0))
        throw DomainError("bad_region", "radius must be a positive finite number");
    if (!std::isfinite(epsilon) || epsilon < 0.0)
        throw DomainError("bad_epsilon", "epsilon must be non-negative and finite");

    const double dx = region.center.x - cell_center.x;
    const double dy = region.center.y - cell_center.y;
    const double r2 = region.radius * region.radius;
    const double score = dx * dx / r2 + dy * dy / r2;

    CellMembership result;
    result.score = score;
    if (std::abs(score - 1.0) <= epsilon)
        result.membership = Membership::Boundary;
    else if (score < 1.0)
        result.membership = Membership::Inside;
    else
        result.membership = Membership::Outside;
    return result;
}

IpAllocation partition_ips(std::uint64_t total_ips, std::uint64_t cells) {
    if (total_ips < 1)
        throw DomainError("bad_allocation", "total_ips must be >= 1");
    if (cells < 1)
        throw DomainError("bad_allocation", "cells must be >= 1");
    IpAllocation alloc;
    alloc.total_ips = total_ips;
    alloc.cells = cells;
    alloc.per_cell = total_ips / cells;
    alloc.remainder = total_ips % cells;
    alloc.warning = alloc.per_cell == 0;
    return alloc;
}

const char* to_string(Membership m) noexcept {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Boundary: return "boundary";
        case Membership::Outside: return "outside";
    }
    return "outside";
}

}  // namespace nodesense::coverage
