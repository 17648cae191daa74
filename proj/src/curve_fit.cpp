#include "nodesense/curve_fit.hpp"

#include <algorithm>
#include <cmath>

#include "nodesense/errors.hpp"

namespace nodesense::fit {

namespace {

void validate_points(std::span<const Point2D> points) {
    if (points.size() < 2)
        throw DomainError("too_few_points", "need at least 2 points");
    for (const auto& p : points)
        if (!is_finite(p))
            throw DomainError("non_finite_input", "point coordinates must be finite");
}

double clamp_correlation(double r) {
    return std::clamp(r, -1.0, 1.0);
}

// Correlation for fit results: 0 when either coordinate has no spread
// (the standalone correlation() errors instead).
double correlation_or_zero(const SummaryStats& st) {
    if (st.ss_xx <= 0.0 || st.ss_yy <= 0.0)
        return 0.0;
    return clamp_correlation(st.ss_xy / std::sqrt(st.ss_xx * st.ss_yy));
}

void fill_errors(LinearFit& fit, const SummaryStats& st) {
    const auto n = static_cast<double>(st.n);
    fit.s = st.n > 2 ? std::sqrt(fit.residual / (n - 2.0)) : 0.0;
    if (st.ss_xx > 0.0) {
        fit.se_a = fit.s * std::sqrt(1.0 / n + st.mean_x * st.mean_x / st.ss_xx);
        fit.se_b = fit.s / std::sqrt(st.ss_xx);
    } else {
        fit.se_a = 0.0;
        fit.se_b = 0.0;
    }
}

}  // namespace

SummaryStats summary_stats(std::span<const Point2D> points) {
    validate_points(points);
    SummaryStats st;
    st.n = points.size();
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (const auto& p : points) {
        sum_x += p.x;
        sum_y += p.y;
    }
    const auto n = static_cast<double>(st.n);
    st.mean_x = sum_x / n;
    st.mean_y = sum_y / n;
    for (const auto& p : points) {
        const double dx = p.x - st.mean_x;
        const double dy = p.y - st.mean_y;
        st.ss_xx += dx * dx;
        st.ss_yy += dy * dy;
        st.ss_xy += dx * dy;
    }
    st.var_x = st.ss_xx / n;
    st.var_y = st.ss_yy / n;
    st.cov_xy = st.ss_xy / n;
    return st;
}

double vertical_residual(std::span<const Point2D> points, double a, double b) {
    double sum = 0.0;
    for (const auto& p : points) {
        const double d = p.y - (a + b * p.x);
        sum += d * d;
    }
    return sum;
}

double perpendicular_residual(std::span<const Point2D> points, double a, double b) {
    return vertical_residual(points, a, b) / (1.0 + b * b);
}

LinearFit fit_vertical(std::span<const Point2D> points) {
    const SummaryStats st = summary_stats(points);
    if (st.ss_xx == 0.0)
        throw DomainError("degenerate_vertical",
                          "all x values are identical; a vertical line has no finite slope, "
                          "use perpendicular fitting instead");

    LinearFit fit;
    fit.method = FitMethod::VerticalOffsets;
    fit.slope = st.ss_xy / st.ss_xx;
    fit.intercept = st.mean_y - fit.slope * st.mean_x;
    fit.residual = vertical_residual(points, fit.intercept, fit.slope);
    fit.r = correlation_or_zero(st);
    fit.r_squared = fit.r * fit.r;
    fill_errors(fit, st);
    return fit;
}

std::array<double, 2> perpendicular_slope_roots(const SummaryStats& stats) {
    if (stats.ss_xy == 0.0)
        throw DomainError("degenerate_perpendicular", "slope roots require ss_xy != 0");
    // B = ((SSyy - SSxx)/2) / (-SSxy), the paper's sign layout.
    const double b_coeff = (stats.ss_xx - stats.ss_yy) / (2.0 * stats.ss_xy);
    const double hyp = std::hypot(b_coeff, 1.0);
    // The large-magnitude root is cancellation-free; the other follows
    // from the product identity root1 * root2 = -1.
    const double big = -(b_coeff + std::copysign(hyp, b_coeff));
    return {-1.0 / big, big};
}

LinearFit fit_perpendicular(std::span<const Point2D> points) {
    const SummaryStats st = summary_stats(points);
    if (st.ss_xx == 0.0 && st.ss_yy == 0.0)
        throw DomainError("degenerate_perpendicular", "all points are coincident");

    LinearFit fit;
    fit.method = FitMethod::PerpendicularOffsets;
    fit.r = correlation_or_zero(st);
    fit.r_squared = fit.r * fit.r;

    if (st.ss_xy == 0.0) {
        if (st.ss_xx == st.ss_yy)
            throw DomainError("degenerate_perpendicular",
                              "orientation is indeterminate (SSxy = 0 and SSxx = SSyy)");
        if (st.ss_xx > st.ss_yy) {
            // Horizontal line through the centroid.
            fit.slope = 0.0;
            fit.intercept = st.mean_y;
            fit.residual = st.ss_yy;
        } else {
            // Vertical line x = xbar; slope is meaningless.
            fit.vertical_line = true;
            fit.slope = 0.0;
            fit.intercept = st.mean_x;
            fit.residual = st.ss_xx;
        }
        fill_errors(fit, st);
        return fit;
    }

    const auto roots = perpendicular_slope_roots(st);
    double best_a = 0.0;
    double best_b = 0.0;
    double best_r = 0.0;
    bool have_best = false;
    for (double b : roots) {
        const double a = st.mean_y - b * st.mean_x;
        const double r = perpendicular_residual(points, a, b);
        if (!have_best || r < best_r) {
            best_a = a;
            best_b = b;
            best_r = r;
            have_best = true;
        }
    }
    fit.slope = best_b;
    fit.intercept = best_a;
    fit.residual = best_r;
    fill_errors(fit, st);
    return fit;
}

double correlation(std::span<const Point2D> points) {
    const SummaryStats st = summary_stats(points);
    if (st.ss_xx <= 0.0 || st.ss_yy <= 0.0)
        throw DomainError("zero_variance",
                          "correlation is undefined when either coordinate has zero variance");
    return clamp_correlation(st.ss_xy / std::sqrt(st.ss_xx * st.ss_yy));
}

const char* to_string(FitMethod m) noexcept {
    return m == FitMethod::VerticalOffsets ? "vertical" : "perpendicular";
}

}  // namespace nodesense::fit
