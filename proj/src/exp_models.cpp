#include "nodesense/exp_models.hpp"

#include <cmath>
#include <string>

#include "nodesense/curve_fit.hpp"
#include "nodesense/errors.hpp"
#include "nodesense/point.hpp"

namespace nodesense::exp_models {

namespace {

void validate_model(const ExpModel& model) {
    if (!std::isfinite(model.scale) || !(model.scale > 0.0))
        throw DomainError("bad_model", "scale must be a positive finite number");
    if (!std::isfinite(model.rate) || !(model.rate > 0.0))
        throw DomainError("bad_model", "rate must be a positive finite number");
}

void validate_times(std::span<const TimeSample> series) {
    if (series.size() < 2)
        throw DomainError("bad_series", "need at least 2 samples");
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!std::isfinite(series[i].t) || !std::isfinite(series[i].y))
            throw DomainError("non_finite_input", "series values must be finite");
        if (i > 0 && !(series[i].t > series[i - 1].t))
            throw DomainError("bad_series", "time values must be strictly increasing");
    }
}

}  // namespace

double evaluate(const ExpModel& model, double t) {
    validate_model(model);
    if (!std::isfinite(t))
        throw DomainError("non_finite_input", "t must be finite");
    double value = 0.0;
    switch (model.kind) {
        case ExpKind::Growth:
            value = model.scale * std::exp(model.rate * t);
            break;
        case ExpKind::Decay:
            value = model.scale * std::exp(-model.rate * t);
            break;
        case ExpKind::ModifiedGrowth:
            value = model.scale * (1.0 - std::exp(-model.rate * t));
            break;
    }
    if (!std::isfinite(value))
        throw DomainError("overflow", "rate * t exceeds the representable range");
    return value;
}

ExpModel fit_growth_decay(std::span<const TimeSample> series) {
    validate_times(series);
    std::vector<Point2D> log_points;
    log_points.reserve(series.size());
    for (const auto& s : series) {
        if (!(s.y > 0.0))
            throw DomainError("non_positive_value",
                              "growth/decay fitting requires y > 0 (got y = " +
                                  std::to_string(s.y) + " at t = " + std::to_string(s.t) + ")");
        log_points.push_back({s.t, std::log(s.y)});
    }

    const fit::LinearFit line = fit::fit_vertical(log_points);
    if (line.slope == 0.0)
        throw DomainError("rate_zero", "fitted rate is zero (constant series matches "
                                       "neither growth nor decay)");
    ExpModel model;
    model.kind = line.slope > 0.0 ? ExpKind::Growth : ExpKind::Decay;
    model.rate = std::abs(line.slope);
    model.scale = std::exp(line.intercept);
    if (!std::isfinite(model.scale) || !(model.scale > 0.0))
        throw DomainError("overflow", "fitted scale exceeds the representable range");
    return model;
}

ExpModel fit_modified_growth(std::span<const TimeSample> series, double capacity) {
    if (!std::isfinite(capacity) || !(capacity > 0.0))
        throw DomainError("bad_model", "capacity must be a positive finite number");
    validate_times(series);

    double numerator = 0.0;
    double denominator = 0.0;
    for (const auto& s : series) {
        if (s.y < 0.0)
            throw DomainError("negative_value",
                              "modified-growth samples must satisfy y >= 0 (got y = " +
                                  std::to_string(s.y) + ")");
        if (s.y >= capacity)
            throw DomainError("saturated",
                              "sample at t = " + std::to_string(s.t) +
                                  " reached capacity; the model never attains N");
        numerator += s.t * std::log(1.0 - s.y / capacity);
        denominator += s.t * s.t;
    }
    const double rate = -numerator / denominator;
    if (!std::isfinite(rate))
        throw DomainError("overflow", "fitted rate exceeds the representable range");
    if (!(rate > 0.0))
        throw DomainError("rate_zero", "fitted rate is not positive; the series does not "
                                       "follow a saturating growth curve");
    return {ExpKind::ModifiedGrowth, capacity, rate};
}

CurveClass classify_curve(double baseline_scale, double baseline_rate,
                          double probe_t, double probe_p, double tol) {
    if (!std::isfinite(baseline_scale) || !(baseline_scale > 0.0))
        throw DomainError("bad_model", "baseline scale must be positive and finite");
    if (!std::isfinite(baseline_rate) || !(baseline_rate > 0.0))
        throw DomainError("bad_model", "baseline rate must be positive and finite");
    if (!std::isfinite(probe_p) || !(probe_p > 0.0))
        throw DomainError("non_positive_value", "probe position must be positive and finite");
    if (!std::isfinite(tol) || !(tol > 0.0))
        throw DomainError("bad_tolerance", "tolerance must be positive and finite");
    if (!std::isfinite(probe_t))
        throw DomainError("non_finite_input", "probe time must be finite");

    const double growth_value = baseline_scale * std::exp(baseline_rate * probe_t);
    const double decay_value = baseline_scale * std::exp(-baseline_rate * probe_t);
    // Growth is checked first: at t3 near 0 both curves pass through the
    // probe and the tie breaks toward GrowthCurve.
    if (std::isfinite(growth_value) && std::abs(probe_p - growth_value) <= tol * growth_value)
        return CurveClass::GrowthCurve;
    if (std::isfinite(decay_value) && std::abs(probe_p - decay_value) <= tol * decay_value)
        return CurveClass::DecayCurve;
    return CurveClass::Neither;
}

const char* to_string(ExpKind k) noexcept {
    switch (k) {
        case ExpKind::Growth: return "growth";
        case ExpKind::Decay: return "decay";
        case ExpKind::ModifiedGrowth: return "modified_growth";
    }
    return "growth";
}

const char* to_string(CurveClass c) noexcept {
    switch (c) {
        case CurveClass::GrowthCurve: return "growth";
        case CurveClass::DecayCurve: return "decay";
        case CurveClass::Neither: return "neither";
    }
    return "neither";
}

}  // namespace nodesense::exp_models
