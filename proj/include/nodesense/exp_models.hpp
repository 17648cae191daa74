#pragma once

#include <span>
#include <vector>

namespace nodesense::exp_models {

enum class ExpKind { Growth, Decay, ModifiedGrowth };

/// One of the three exponential models:
///   Growth          y(t) = scale * e^{rate t}
///   Decay           y(t) = scale * e^{-rate t}
///   ModifiedGrowth  n(t) = scale * (1 - e^{-rate t})
/// `scale` is y0 for Growth/Decay and the capacity N for ModifiedGrowth.
/// `rate` is k > 0; the sign lives in the kind.
struct ExpModel {
    ExpKind kind = ExpKind::Growth;
    double scale = 1.0;
    double rate = 1.0;
};

/// One (t, y) observation. Series are ordered with strictly increasing t.
struct TimeSample {
    double t = 0.0;
    double y = 0.0;
};

using TimeSeries = std::vector<TimeSample>;

enum class CurveClass { GrowthCurve, DecayCurve, Neither };

/// Evaluates the model at time t. Raises `overflow` when the value
/// leaves the representable range.
double evaluate(const ExpModel& model, double t);

/// Log-linear fit of y0 e^{kt}: vertical least squares on (t, ln y).
/// A positive fitted slope gives Growth, a negative one Decay; a slope
/// of exactly zero is rejected with code `rate_zero`.
ExpModel fit_growth_decay(std::span<const TimeSample> series);

/// Through-origin log-linear fit of n = N (1 - e^{-kt}) for a known
/// capacity N: k = -sum(t_i ln(1 - y_i / N)) / sum(t_i^2). The intercept
/// is forced through the origin because n(0) = 0 is a model axiom.
ExpModel fit_modified_growth(std::span<const TimeSample> series, double capacity);

/// Tests a probe (t3, p3) against the growth curve M e^{a t} and the
/// decay curve M e^{-a t} at relative tolerance tol. A probe matching
/// both (possible only near t3 = 0, where the curves coincide)
/// classifies as GrowthCurve.
CurveClass classify_curve(double baseline_scale, double baseline_rate,
                          double probe_t, double probe_p, double tol);

const char* to_string(ExpKind k) noexcept;
const char* to_string(CurveClass c) noexcept;

}  // namespace nodesense::exp_models
