#include "nodesense/position_prediction.hpp"

#include <cmath>
#include <stdexcept>

#include "nodesense/errors.hpp"

namespace nodesense::prediction {

namespace {

void validate_pair(const PositionSample& s1, const PositionSample& s2) {
    for (const auto& s : {s1, s2}) {
        if (!std::isfinite(s.t) || !std::isfinite(s.p))
            throw DomainError("non_finite_input", "sample values must be finite");
        if (!(s.p > 0.0))
            throw DomainError("non_positive_value", "positions must be strictly positive");
    }
    if (s1.t == s2.t)
        throw DomainError("equal_times", "the two samples must have distinct times");
}

}  // namespace

PositionSample predict_midway(const PositionSample& s1, const PositionSample& s2) {
    validate_pair(s1, s2);
    return {(s1.t + s2.t) / 2.0, std::sqrt(s1.p * s2.p)};
}

PositionSample predict_extrapolated(const PositionSample& s1, const PositionSample& s2) {
    validate_pair(s1, s2);
    PositionSample next{2.0 * s2.t - s1.t, (s2.p * s2.p) / s1.p};
    if (!std::isfinite(next.p) || !(next.p > 0.0))
        throw DomainError("overflow", "extrapolated position exceeds the representable range");
    return next;
}

MeanTriple am_hm_gm(double t1, double t2) {
    if (!std::isfinite(t1) || !std::isfinite(t2) || !(t1 > 0.0) || !(t2 > 0.0))
        throw DomainError("non_positive_value", "times must be positive and finite");

    MeanTriple m;
    m.am = (t1 + t2) / 2.0;
    m.hm = 2.0 / (1.0 / t1 + 1.0 / t2);
    const double product = m.am * m.hm;
    if (!std::isfinite(product))
        throw DomainError("overflow", "mean product exceeds the representable range");
    m.gm = std::sqrt(product);

    // am * hm = t1 * t2, so both routes to the geometric mean must agree.
    const double direct = std::sqrt(t1 * t2);
    if (std::abs(m.gm - direct) > 1e-12 * std::max(m.gm, direct))
        throw std::logic_error("geometric mean routes disagree");
    return m;
}

}  // namespace nodesense::prediction
