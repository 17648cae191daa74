#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodesense/point.hpp"

namespace nodesense::mc {

/// Sampling budget for one Monte Carlo run. The budget is split across
/// `streams` independent sub-streams (stream i is seeded with
/// rng::sub_seed(seed, i)), so the result is a pure function of
/// (seed, streams, samples) regardless of how the streams are scheduled.
struct McConfig {
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    std::uint64_t streams = 1;
};

/// Outcome of a Monte Carlo run. `estimate` is the acceptance ratio
/// scaled into the quantity of interest (pi, an area, a node count);
/// `std_error` is the binomial standard error under the same scaling.
struct McEstimate {
    std::uint64_t accepted = 0;
    std::uint64_t total = 0;
    double ratio = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
};

/// A function with values in [0, height] over [lower, upper]; together
/// they define the rejection-sampling rectangle. Polynomials carry
/// ascending coefficients. Builtins: "constant" (identically equal to
/// height), "identity", "square", "semicircle" (sqrt(1 - x^2)).
class BoundedFunction {
public:
    static BoundedFunction polynomial(std::vector<double> coefficients,
                                      double lower, double upper, double height);
    static BoundedFunction builtin(const std::string& name,
                                   double lower, double upper, double height);

    double operator()(double x) const noexcept;

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double height() const noexcept { return height_; }
    double width() const noexcept { return upper_ - lower_; }

private:
    enum class Kind { Polynomial, Constant, Identity, Square, Semicircle };

    BoundedFunction(Kind kind, std::vector<double> coefficients,
                    double lower, double upper, double height);

    Kind kind_;
    std::vector<double> coefficients_;
    double lower_;
    double upper_;
    double height_;
};

/// True iff x^2 + y^2 <= 1. Points on the circumference count as inside.
bool point_in_unit_circle(const Point2D& p);

/// Samples [-1,1]^2 and counts points inside the unit circle:
/// estimate = 4 n / N, std_error = 4 sqrt(r (1-r) / N).
McEstimate estimate_pi(const McConfig& config);

/// Rejection sampling over [lower,upper] x [0,height]; the estimate
/// approximates the integral of f. A sample x where f(x) leaves
/// [0, height] raises height_bound_violation (the stated bound is wrong).
McEstimate estimate_area_under_curve(const BoundedFunction& f, const McConfig& config);

/// Predicted number of in-region nodes out of `total_nodes`:
/// total_nodes times the acceptance ratio of f over its rectangle.
/// Partially covered nodes count with full weight.
double expected_nodes_in_region(std::uint64_t total_nodes, const BoundedFunction& f,
                                const McConfig& config);

/// Same prediction expanded into a full McEstimate
/// (estimate = total_nodes * ratio, std_error scaled alike).
McEstimate expected_nodes_detail(std::uint64_t total_nodes, const BoundedFunction& f,
                                 const McConfig& config);

}  // namespace nodesense::mc
