#include "nodesense/mc_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

#include "nodesense/errors.hpp"
#include "nodesense/rng.hpp"

namespace nodesense::mc {

namespace {

void validate(const McConfig& config) {
    if (config.samples < 1)
        throw DomainError("bad_config", "samples must be >= 1");
    if (config.streams < 1)
        throw DomainError("bad_config", "streams must be >= 1");
    if (config.streams > config.samples)
        throw DomainError("bad_config", "streams must not exceed samples");
}

template <typename Trial>
std::uint64_t count_stream(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t samples, const Trial& trial) {
    rng::SplitMix64 gen(rng::sub_seed(seed, stream));
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < samples; ++i)
        if (trial(gen)) ++accepted;
    return accepted;
}

// Runs all sub-streams and sums their acceptance counts. Streams are
// distributed round-robin over at most hardware_concurrency() threads;
// the total is an integer sum, so scheduling cannot change the result.
template <typename Trial>
std::uint64_t run_streams(const McConfig& config, const Trial& trial) {
    const std::uint64_t base = config.samples / config.streams;
    const std::uint64_t extra = config.samples % config.streams;
    const auto stream_samples = [&](std::uint64_t i) { return base + (i < extra ? 1 : 0); };

    if (config.streams == 1)
        return count_stream(config.seed, 0, config.samples, trial);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t workers = std::min<std::uint64_t>(config.streams, hw);
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                std::uint64_t local = 0;
                for (std::uint64_t s = w; s < config.streams; s += workers)
                    local += count_stream(config.seed, s, stream_samples(s), trial);
                counts[w] = local;
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

McEstimate from_counts(std::uint64_t accepted, std::uint64_t total, double scale) {
    McEstimate e;
    e.accepted = accepted;
    e.total = total;
    e.ratio = static_cast<double>(accepted) / static_cast<double>(total);
    e.estimate = e.ratio * scale;
    e.std_error = scale * std::sqrt(e.ratio * (1.0 - e.ratio) / static_cast<double>(total));
    return e;
}

}  // namespace

BoundedFunction::BoundedFunction(Kind kind, std::vector<double> coefficients,
                                 double lower, double upper, double height)
    : kind_(kind),
      coefficients_(std::move(coefficients)),
      lower_(lower),
      upper_(upper),
      height_(height) {
    if (!std::isfinite(lower_) || !std::isfinite(upper_) || !(lower_ < upper_))
        throw DomainError("bad_function", "domain must satisfy b1 < b2 with finite bounds");
    if (!std::isfinite(height_) || !(height_ > 0.0))
        throw DomainError("bad_function", "height bound must be a positive finite number");
    for (double c : coefficients_)
        if (!std::isfinite(c))
            throw DomainError("bad_function", "polynomial coefficients must be finite");
}

BoundedFunction BoundedFunction::polynomial(std::vector<double> coefficients,
                                            double lower, double upper, double height) {
    if (coefficients.empty())
        throw DomainError("bad_function", "polynomial needs at least one coefficient");
    return BoundedFunction(Kind::Polynomial, std::move(coefficients), lower, upper, height);
}

BoundedFunction BoundedFunction::builtin(const std::string& name,
                                         double lower, double upper, double height) {
    Kind kind;
    if (name == "constant")
        kind = Kind::Constant;
    else if (name == "identity")
        kind = Kind::Identity;
    else if (name == "square")
        kind = Kind::Square;
    else if (name == "semicircle")
        kind = Kind::Semicircle;
    else
        throw DomainError("bad_function",
                          "unknown builtin '" + name +
                              "' (expected constant, identity, square or semicircle)");
    return BoundedFunction(kind, {}, lower, upper, height);
}

double BoundedFunction::operator()(double x) const noexcept {
    switch (kind_) {
        case Kind::Constant:
            return height_;
        case Kind::Identity:
            return x;
        case Kind::Square:
            return x * x;
        case Kind::Semicircle:
            return std::sqrt(1.0 - x * x);
        case Kind::Polynomial: {
            double value = 0.0;
            for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
                value = value * x + *it;
            return value;
        }
    }
    return 0.0;
}

bool point_in_unit_circle(const Point2D& p) {
    if (!is_finite(p))
        throw DomainError("non_finite_input", "point coordinates must be finite");
    return p.x * p.x + p.y * p.y <= 1.0;
}

McEstimate estimate_pi(const McConfig& config) {
    validate(config);
    const std::uint64_t inside = run_streams(config, [](rng::SplitMix64& gen) {
        const double x = rng::uniform(gen, -1.0, 1.0);
        const double y = rng::uniform(gen, -1.0, 1.0);
        return x * x + y * y <= 1.0;
    });
    return from_counts(inside, config.samples, 4.0);
}

McEstimate estimate_area_under_curve(const BoundedFunction& f, const McConfig& config) {
    validate(config);
    const double height = f.height();
    const std::uint64_t accepted = run_streams(config, [&f, height](rng::SplitMix64& gen) {
        const double x = rng::uniform(gen, f.lower(), f.upper());
        const double y = rng::uniform(gen, 0.0, height);
        const double fx = f(x);
        if (!(fx >= 0.0 && fx <= height))
            throw DomainError("height_bound_violation",
                              "f(" + std::to_string(x) + ") = " + std::to_string(fx) +
                                  " lies outside [0, " + std::to_string(height) + "]");
        return y <= fx;
    });
    return from_counts(accepted, config.samples, height * f.width());
}

McEstimate expected_nodes_detail(std::uint64_t total_nodes, const BoundedFunction& f,
                                 const McConfig& config) {
    if (total_nodes < 1)
        throw DomainError("bad_total", "total_nodes must be >= 1");
    const McEstimate area = estimate_area_under_curve(f, config);
    return from_counts(area.accepted, area.total, static_cast<double>(total_nodes));
}

double expected_nodes_in_region(std::uint64_t total_nodes, const BoundedFunction& f,
                                const McConfig& config) {
    return expected_nodes_detail(total_nodes, f, config).estimate;
}

}  // namespace nodesense::mc
