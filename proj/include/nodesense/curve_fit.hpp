#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "nodesense/point.hpp"

namespace nodesense::fit {

/// Centered first and second moments of a point set. The sums of squares
/// use the centered form sum((x - xbar)^2), which is algebraically equal
/// to sum(x^2) - n xbar^2 but does not cancel catastrophically.
struct SummaryStats {
    std::size_t n = 0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double ss_xx = 0.0;
    double ss_yy = 0.0;
    double ss_xy = 0.0;
    double var_x = 0.0;   // ss_xx / n
    double var_y = 0.0;   // ss_yy / n
    double cov_xy = 0.0;  // ss_xy / n
};

enum class FitMethod { VerticalOffsets, PerpendicularOffsets };

/// Fitted line y = intercept + slope * x. `residual` holds the minimized
/// sum of squares: vertical R^2 or perpendicular R_perp^2. `s` is the
/// residual scale sqrt(residual / (n - 2)) for n > 2, 0 for n = 2.
///
/// `vertical_line` can only be set by the perpendicular method; the line
/// is then x = intercept and `slope` carries no information.
struct LinearFit {
    FitMethod method = FitMethod::VerticalOffsets;
    double intercept = 0.0;
    double slope = 0.0;
    double r = 0.0;
    double r_squared = 0.0;
    double se_a = 0.0;
    double se_b = 0.0;
    double s = 0.0;
    double residual = 0.0;
    bool vertical_line = false;
};

SummaryStats summary_stats(std::span<const Point2D> points);

/// Ordinary least squares (vertical offsets): slope = SSxy / SSxx,
/// intercept = ybar - slope * xbar. Rejects point sets whose x values
/// are all identical (degenerate_vertical); perpendicular fitting
/// handles those.
LinearFit fit_vertical(std::span<const Point2D> points);

/// Total least squares (perpendicular offsets). Both slope roots
/// -B +- sqrt(B^2 + 1) are evaluated and the R_perp^2 minimizer wins.
/// When SSxy = 0 the best line is axis-aligned (or indeterminate when
/// additionally SSxx = SSyy, which is an error).
LinearFit fit_perpendicular(std::span<const Point2D> points);

/// The two candidate perpendicular-fit slopes. Their product is -1: the
/// candidate lines are perpendicular to each other, one minimizing and
/// one maximizing R_perp^2. Requires ss_xy != 0.
std::array<double, 2> perpendicular_slope_roots(const SummaryStats& stats);

/// Pearson correlation r = SSxy / sqrt(SSxx SSyy), clamped into [-1, 1].
/// Errors on zero variance in either coordinate.
double correlation(std::span<const Point2D> points);

/// Sum of squared vertical offsets from y = a + b x.
double vertical_residual(std::span<const Point2D> points, double a, double b);

/// Sum of squared perpendicular distances to y = a + b x.
double perpendicular_residual(std::span<const Point2D> points, double a, double b);

const char* to_string(FitMethod m) noexcept;

}  // namespace nodesense::fit
