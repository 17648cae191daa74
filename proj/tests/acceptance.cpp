// Release acceptance suite: runs the ten shipping criteria end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
// The CLI determinism criterion needs NODE_SENSE_BIN to point at the
// node-sense binary (ctest sets it).

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "nodesense/cell_network.hpp"
#include "nodesense/coverage.hpp"
#include "nodesense/curve_fit.hpp"
#include "nodesense/errors.hpp"
#include "nodesense/exp_models.hpp"
#include "nodesense/mc_estimation.hpp"
#include "nodesense/position_prediction.hpp"
#include "test_support.hpp"

using namespace nodesense;
using testsupport::TestRng;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.empty()) detail = why;
    }

    void expect(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

// ---------------------------------------------------------------------
// 1. pi estimation: 3-sigma coverage over 20 seeds and error shrinking
//    from 1e5 to 1e6 samples, all within a 10 s budget.
Outcome criterion_pi() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();

    std::vector<double> errors_1e5;
    std::vector<double> errors_1e6;
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto big = mc::estimate_pi({1'000'000, seed, 1});
        const double err = std::abs(big.estimate - std::numbers::pi);
        if (err <= 3.0 * big.std_error) ++within;
        errors_1e6.push_back(err);

        const auto small = mc::estimate_pi({100'000, seed, 1});
        errors_1e5.push_back(std::abs(small.estimate - std::numbers::pi));
    }
    outcome.expect(within >= 18, "only " + std::to_string(within) + "/20 seeds within 3 sigma");

    const auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2.0;
    };
    const double median_1e5 = median(errors_1e5);
    const double median_1e6 = median(errors_1e6);
    outcome.expect(median_1e5 > median_1e6,
                   "median error did not shrink: " + fmt(median_1e5) + " vs " + fmt(median_1e6));

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.expect(elapsed < 10.0, "runtime " + fmt(elapsed) + " s exceeds 10 s");
    if (outcome.ok)
        outcome.detail = std::to_string(within) + "/20 within 3 sigma, medians " +
                         fmt(median_1e5) + " -> " + fmt(median_1e6) + ", " + fmt(elapsed) + " s";
    return outcome;
}

// ---------------------------------------------------------------------
// 2. Rejection-sampling integral of x^2 against the analytic 1/3, and
//    the all-accepting constant function.
Outcome criterion_integral() {
    Outcome outcome;
    const auto square = mc::BoundedFunction::builtin("square", 0.0, 1.0, 1.0);
    const auto est = mc::estimate_area_under_curve(square, {1'000'000, 42, 1});
    outcome.expect(std::abs(est.estimate - 1.0 / 3.0) <= 3.0 * est.std_error,
                   "x^2 estimate " + fmt(est.estimate) + " missed 1/3");

    const auto constant = mc::BoundedFunction::builtin("constant", -1.0, 2.0, 0.7);
    for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 42ULL, 1234567ULL, 0xFFFFFFFFFFFFFFFFULL}) {
        const auto flat = mc::estimate_area_under_curve(constant, {10'000, seed, 1});
        outcome.expect(flat.ratio == 1.0,
                       "constant ratio " + fmt(flat.ratio) + " at seed " + std::to_string(seed));
    }
    if (outcome.ok) outcome.detail = "x^2 within " + fmt(std::abs(est.estimate - 1.0 / 3.0)) +
                                     ", constant ratio exactly 1";
    return outcome;
}

// ---------------------------------------------------------------------
// 3. Vertical fit: exact recovery on collinear input and the normal
//    equations on 1000 random point sets.
Outcome criterion_vertical() {
    Outcome outcome;
    const std::vector<Point2D> collinear{{0.0, 1.0}, {1.0, 3.0}, {2.0, 5.0}};
    const auto f = fit::fit_vertical(collinear);
    outcome.expect(std::abs(f.intercept - 1.0) <= 1e-12, "intercept");
    outcome.expect(std::abs(f.slope - 2.0) <= 1e-12, "slope");
    outcome.expect(std::abs(f.r - 1.0) <= 1e-12, "correlation");
    outcome.expect(f.residual <= 1e-12, "residual");

    TestRng rng(301);
    for (int i = 0; i < 1000; ++i) {
        const auto pts = testsupport::random_points(rng, 2 + rng.below(49));
        if (fit::summary_stats(pts).ss_xx == 0.0) continue;
        const auto g = fit::fit_vertical(pts);
        double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
        for (const auto& p : pts) {
            sum_x += p.x;
            sum_y += p.y;
            sum_xx += p.x * p.x;
            sum_xy += p.x * p.y;
        }
        const double n = static_cast<double>(pts.size());
        const double eq1 = n * g.intercept + g.slope * sum_x - sum_y;
        const double eq2 = g.intercept * sum_x + g.slope * sum_xx - sum_xy;
        const double scale1 =
            1.0 + std::abs(n * g.intercept) + std::abs(g.slope * sum_x) + std::abs(sum_y);
        const double scale2 = 1.0 + std::abs(g.intercept * sum_x) +
                              std::abs(g.slope * sum_xx) + std::abs(sum_xy);
        if (std::abs(eq1) > 1e-9 * scale1 || std::abs(eq2) > 1e-9 * scale2) {
            outcome.fail("normal-equation residual exceeded 1e-9 at set " + std::to_string(i));
            break;
        }
    }
    if (outcome.ok) outcome.detail = "collinear exact, normal equations on 1000 random sets";
    return outcome;
}

// ---------------------------------------------------------------------
// 4. Perpendicular fit against the angle-sweep oracle, slope-root
//    product, rotation equivariance.
Outcome criterion_perpendicular() {
    Outcome outcome;
    TestRng rng(401);
    double worst_gap = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto pts = testsupport::random_nondegenerate_points(rng, 3 + rng.below(18));
        const auto f = fit::fit_perpendicular(pts);
        const double oracle = testsupport::angle_sweep_min_perpendicular(pts);
        worst_gap = std::max(worst_gap, f.residual - oracle);
        if (f.residual > oracle + 1e-6) {
            outcome.fail("analytic residual " + fmt(f.residual) + " above oracle " +
                         fmt(oracle) + " at set " + std::to_string(i));
            break;
        }

        const auto st = fit::summary_stats(pts);
        if (st.ss_xy != 0.0) {
            const auto roots = fit::perpendicular_slope_roots(st);
            if (std::abs(roots[0] * roots[1] + 1.0) > 1e-9) {
                outcome.fail("slope-root product off at set " + std::to_string(i));
                break;
            }
        }

        const double theta = rng.uniform(0.05, 3.1);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        std::vector<Point2D> rotated;
        for (const auto& p : pts) rotated.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
        const auto g = fit::fit_perpendicular(rotated);
        const auto dir = [](const fit::LinearFit& fit) -> std::pair<double, double> {
            if (fit.vertical_line) return {0.0, 1.0};
            const double norm = std::hypot(1.0, fit.slope);
            return {1.0 / norm, fit.slope / norm};
        };
        const auto [ux, uy] = dir(f);
        const auto [vx, vy] = dir(g);
        const double rx = c * ux - s * uy;
        const double ry = s * ux + c * uy;
        const double mismatch =
            std::min(std::hypot(vx - rx, vy - ry), std::hypot(vx + rx, vy + ry));
        if (mismatch > 1e-6) {
            outcome.fail("rotation equivariance broke at set " + std::to_string(i));
            break;
        }
    }
    if (outcome.ok)
        outcome.detail = "200 sets, worst analytic-minus-oracle gap " + fmt(worst_gap);
    return outcome;
}

// ---------------------------------------------------------------------
// 5. Correlation bounds and perfect-line signs.
Outcome criterion_correlation() {
    Outcome outcome;
    TestRng rng(501);
    for (int i = 0; i < 10'000; ++i) {
        const auto pts = testsupport::random_points(rng, 2 + rng.below(20));
        const auto st = fit::summary_stats(pts);
        if (st.ss_xx <= 0.0 || st.ss_yy <= 0.0) continue;
        const double r = fit::correlation(pts);
        if (!(r >= -1.0 && r <= 1.0)) {
            outcome.fail("|r| exceeded 1 at set " + std::to_string(i));
            break;
        }
    }

    std::vector<Point2D> up;
    std::vector<Point2D> down;
    for (int x = 0; x < 10; ++x) {
        up.push_back({static_cast<double>(x), 2.0 * x + 1.0});
        down.push_back({static_cast<double>(x), -static_cast<double>(x)});
    }
    outcome.expect(std::abs(fit::correlation(up) - 1.0) <= 1e-12, "r = 1 on a perfect line");
    outcome.expect(std::abs(fit::correlation(down) + 1.0) <= 1e-12,
                   "r = -1 on a perfect negative line");
    if (outcome.ok) outcome.detail = "10^4 random sets bounded, perfect lines exact";
    return outcome;
}

// ---------------------------------------------------------------------
// 6. Geometric-mean midpoint and the AM/HM/GM identities.
Outcome criterion_means() {
    Outcome outcome;
    TestRng rng(601);
    for (int i = 0; i < 10'000; ++i) {
        const double m = rng.uniform(0.1, 10.0);
        const double a = rng.uniform(-2.0, 2.0);
        const double t1 = rng.uniform(-5.0, 5.0);
        const double t2 = t1 + rng.uniform(0.01, 5.0);
        const auto mid = prediction::predict_midway({t1, m * std::exp(a * t1)},
                                                    {t2, m * std::exp(a * t2)});
        const double expected = m * std::exp(a * (t1 + t2) / 2.0);
        if (std::abs(mid.p - expected) > 1e-12 * expected) {
            outcome.fail("midpoint drifted at case " + std::to_string(i));
            break;
        }
    }

    for (int i = 0; i < 10'000 && outcome.ok; ++i) {
        const double t1 = rng.uniform(0.01, 100.0);
        double t2 = rng.uniform(0.01, 100.0);
        if (std::abs(t1 - t2) < 1e-3 * std::max(t1, t2)) t2 = t1 * 2.0;
        const auto means = prediction::am_hm_gm(t1, t2);
        if (std::abs(means.am * means.hm - t1 * t2) > 1e-12 * t1 * t2) {
            outcome.fail("am*hm != t1*t2 at case " + std::to_string(i));
            break;
        }
        if (!(means.hm < means.gm && means.gm < means.am)) {
            outcome.fail("mean ordering broke at case " + std::to_string(i));
            break;
        }
    }

    const auto worked = prediction::am_hm_gm(2.0, 8.0);
    outcome.expect(worked.am == 5.0 && worked.hm == 3.2 && worked.gm == 4.0,
                   "worked case (2,8) not exact");
    if (outcome.ok) outcome.detail = "10^4 midpoints and 10^4 mean pairs within 1e-12";
    return outcome;
}

// ---------------------------------------------------------------------
// 7. Exponential round trips and the saturating-curve shape.
Outcome criterion_exponential() {
    Outcome outcome;
    TestRng rng(701);
    for (int i = 0; i < 100 && outcome.ok; ++i) {
        const double scale = rng.uniform(0.2, 5.0);
        const double rate = rng.uniform(0.05, 1.5);
        std::vector<double> times;
        double t = rng.uniform(0.2, 1.0);
        for (int k = 0; k < 5; ++k) {
            times.push_back(t);
            t += rng.uniform(0.3, 1.2);
        }
        for (const auto kind : {exp_models::ExpKind::Growth, exp_models::ExpKind::Decay,
                                exp_models::ExpKind::ModifiedGrowth}) {
            const bool modified = kind == exp_models::ExpKind::ModifiedGrowth;
            const exp_models::ExpModel truth{kind, modified ? 10.0 * scale : scale, rate};
            exp_models::TimeSeries series;
            for (double ti : times)
                series.push_back({ti, exp_models::evaluate(truth, ti)});
            const auto fitted = modified
                                    ? exp_models::fit_modified_growth(series, truth.scale)
                                    : exp_models::fit_growth_decay(series);
            if (fitted.kind != kind ||
                std::abs(fitted.scale - truth.scale) > 1e-8 * truth.scale ||
                std::abs(fitted.rate - truth.rate) > 1e-8 * truth.rate) {
                outcome.fail("round trip missed at case " + std::to_string(i));
                break;
            }
        }
    }

    const exp_models::ExpModel model{exp_models::ExpKind::ModifiedGrowth, 100.0, 0.25};
    outcome.expect(exp_models::evaluate(model, 0.0) == 0.0, "n(0) != 0");
    const int grid = 1000;
    double previous_n = 0.0;
    double previous_slope = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= grid && outcome.ok; ++i) {
        const double t0 = 20.0 * (i - 1) / grid;
        const double t1 = 20.0 * i / grid;
        const double n0 = exp_models::evaluate(model, t0);
        const double n1 = exp_models::evaluate(model, t1);
        const double slope = (n1 - n0) / (t1 - t0);
        outcome.expect(n1 > previous_n, "curve not strictly increasing at step " +
                                            std::to_string(i));
        outcome.expect(n1 < model.scale, "curve reached the capacity");
        outcome.expect(slope < previous_slope, "slope not strictly decreasing at step " +
                                                   std::to_string(i));
        previous_n = n1;
        previous_slope = slope;
    }
    if (outcome.ok)
        outcome.detail = "300 round trips within 1e-8, 1000-point curve shape held";
    return outcome;
}

// ---------------------------------------------------------------------
// 8. Coverage classifier worked cases and scale invariance.
Outcome criterion_coverage() {
    Outcome outcome;
    const auto inside = coverage::classify_cell({{0.0, 0.0}, 10.0}, {3.0, 4.0});
    outcome.expect(std::abs(inside.score - 0.25) <= 1e-12 &&
                       inside.membership == coverage::Membership::Inside,
                   "(3,4) against R=10");
    const auto rim = coverage::classify_cell({{0.0, 0.0}, 5.0}, {3.0, 4.0});
    outcome.expect(rim.membership == coverage::Membership::Boundary, "(3,4) against R=5");

    TestRng rng(801);
    for (int i = 0; i < 1000 && outcome.ok; ++i) {
        const Point2D center{rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
        const Point2D cell{rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
        const double radius = rng.uniform(0.1, 10.0);
        const double c = rng.uniform(1e-3, 1e3);
        const auto base = coverage::classify_cell({center, radius}, cell);
        const auto scaled = coverage::classify_cell({{c * center.x, c * center.y}, c * radius},
                                                    {c * cell.x, c * cell.y});
        const double tolerance = 1e-12 * std::max(1.0, base.score);
        if (std::abs(scaled.score - base.score) > tolerance) {
            outcome.fail("scale invariance broke at case " + std::to_string(i));
        }
    }
    if (outcome.ok) outcome.detail = "worked cases exact, 10^3 scalings within 1e-12";
    return outcome;
}

// ---------------------------------------------------------------------
// 9. Simulator invariants on 10^3 random scripts plus the scripted
//    handoff trace.
Outcome criterion_simulator() {
    Outcome outcome;
    TestRng rng(901);
    for (int script = 0; script < 1000 && outcome.ok; ++script) {
        const int cells = 1 + static_cast<int>(rng.below(4));
        const std::uint64_t per_cell = 1 + rng.below(5);
        const auto events = testsupport::random_script(rng, cells, per_cell, 1 + rng.below(100));
        const auto allocation = coverage::partition_ips(
            per_cell * static_cast<std::uint64_t>(cells), static_cast<std::uint64_t>(cells));

        std::vector<cellnet::CellState> state;
        std::vector<testsupport::MiniCell> mini(static_cast<std::size_t>(cells));
        std::vector<std::uint64_t> join_counts(static_cast<std::size_t>(cells), 0);
        for (int c = 0; c < cells; ++c)
            state.push_back(cellnet::make_cell(
                c, static_cast<std::uint64_t>(c) * allocation.per_cell, allocation.per_cell));

        for (const auto& ev : events) {
            const auto idx = static_cast<std::size_t>(ev.cell);
            if (ev.op == cellnet::EventOp::Join) {
                state[idx] = cellnet::join(state[idx], ev.node).first;
                mini[idx].join(ev.node);
                ++join_counts[idx];
            } else {
                state[idx] = cellnet::leave(state[idx], ev.node).first;
                mini[idx].leave(ev.node);
            }
            for (int c = 0; c < cells; ++c) {
                const auto& cell = state[static_cast<std::size_t>(c)];
                if (cell.leader.has_value() != !cell.members.empty()) {
                    outcome.fail("leader presence rule broke in script " +
                                 std::to_string(script));
                    break;
                }
                if (cell.leader != mini[static_cast<std::size_t>(c)].leader) {
                    outcome.fail("leader diverged from the replay in script " +
                                 std::to_string(script));
                    break;
                }
                if (cell.table.version != join_counts[static_cast<std::size_t>(c)]) {
                    outcome.fail("version != join count in script " + std::to_string(script));
                    break;
                }
                std::set<std::uint64_t> ips(cell.free_ips.begin(), cell.free_ips.end());
                if (ips.size() != cell.free_ips.size()) {
                    outcome.fail("duplicate free IP in script " + std::to_string(script));
                    break;
                }
                bool duplicate = false;
                for (const auto& [node, ip] : cell.table.entries)
                    duplicate = duplicate || !ips.insert(ip).second;
                if (duplicate || ips.size() != allocation.per_cell) {
                    outcome.fail("IP conservation broke in script " + std::to_string(script));
                    break;
                }
            }
            if (!outcome.ok) break;
        }

        // The scripted runner must agree with the incremental fold.
        if (outcome.ok) {
            const auto result = cellnet::run_script(events, allocation, cells);
            for (int c = 0; c < cells && outcome.ok; ++c) {
                const auto idx = static_cast<std::size_t>(c);
                if (result.cells[idx].members != state[idx].members ||
                    result.cells[idx].leader != state[idx].leader ||
                    result.cells[idx].table.version != state[idx].table.version)
                    outcome.fail("run_script disagreed with the fold in script " +
                                 std::to_string(script));
            }
        }
    }

    const std::vector<cellnet::Event> trace{{1, cellnet::EventOp::Join, 0, "A"},
                                            {2, cellnet::EventOp::Join, 0, "B"},
                                            {3, cellnet::EventOp::Join, 0, "C"},
                                            {4, cellnet::EventOp::Leave, 0, "A"}};
    const auto result = cellnet::run_script(trace, coverage::partition_ips(4, 1), 1);
    outcome.expect(result.cells[0].leader == "C", "scripted trace must end with leader C");
    if (outcome.ok) outcome.detail = "10^3 scripts held every invariant, trace ends with C";
    return outcome;
}

// ---------------------------------------------------------------------
// 10. CLI determinism: byte-identical stdout across repeated runs of
//     every subcommand.
class CliRunner {
public:
    bool available() const { return !bin_.empty(); }

    CliRunner() {
        if (const char* bin = std::getenv("NODE_SENSE_BIN")) bin_ = bin;
        dir_ = fs::temp_directory_path() /
               ("node-sense-acceptance-" + std::to_string(static_cast<unsigned>(::getpid())));
        fs::create_directories(dir_);
    }

    ~CliRunner() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    fs::path write_file(const std::string& name, const std::string& content) const {
        const fs::path path = dir_ / name;
        std::ofstream out(path);
        out << content;
        return path;
    }

    std::string stdout_of(const std::string& args) const {
        const fs::path out_path = dir_ / "out.txt";
        const std::string command =
            "\"" + bin_ + "\" " + args + " > \"" + out_path.string() + "\" 2> /dev/null";
        const int status = std::system(command.c_str());
        static_cast<void>(WIFEXITED(status));
        std::ifstream in(out_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

private:
    std::string bin_;
    fs::path dir_;
};

Outcome criterion_determinism() {
    Outcome outcome;
    CliRunner cli;
    if (!cli.available()) {
        outcome.fail("NODE_SENSE_BIN is not set");
        return outcome;
    }

    const auto cells = cli.write_file("cells.csv", "id,x,y\nc1,3,4\nc2,30,40\nc3,0,0\n");
    const auto pts = cli.write_file("pts.csv", "x,y\n0,1.5\n1,2.25\n2,5.5\n3,6\n");
    const auto series = cli.write_file(
        "series.csv", "t,y\n0,3\n1,3.66\n2,4.48\n3,5.47\n");
    const auto mseries = cli.write_file("mseries.csv", "t,y\n1,22\n2,39\n4,63\n8,86\n");
    const auto events = cli.write_file(
        "events.csv", "time,op,cell,node\n1,join,0,A\n2,join,0,B\n3,join,1,X\n4,leave,0,A\n"
                      "5,join,0,C\n6,leave,1,X\n");

    const std::vector<std::string> commands{
        "mc pi --samples 5000 --seed 7 --streams 3",
        "mc integrate --fn poly:0,0,1 --b1 0 --b2 1 --height 1 --samples 20000 --seed 11",
        "mc nodes --total 400 --fn builtin:identity --b1 0 --b2 1 --height 1 "
        "--samples 20000 --seed 3",
        "--output csv mc pi --samples 100 --seed 3",
        "coverage --center 0,0 --radius 5 --cells \"" + cells.string() + "\"",
        "--output json coverage --center 0,0 --radius 5 --cells \"" + cells.string() + "\"",
        "fit --method vertical --input \"" + pts.string() + "\"",
        "fit --method perpendicular --input \"" + pts.string() + "\"",
        "exp fit --model growth-decay --input \"" + series.string() + "\"",
        "exp fit --model modified --capacity 100 --input \"" + mseries.string() + "\"",
        "exp eval --kind decay --scale 2 --rate 0.5 --t 2",
        "exp curve --kind growth --scale 1 --rate 0.1 --t1 0 --t2 10 --steps 5 --out -",
        "predict midway --t1 0 --p1 2 --t2 2 --p2 8",
        "predict extreme --t1 0 --p1 2 --t2 1 --p2 4",
        "predict means --t1 2 --t2 8",
        "sim --events \"" + events.string() + "\" --ips 8 --cells 2",
        "--version",
    };

    int checked = 0;
    for (const auto& command : commands) {
        const std::string first = cli.stdout_of(command);
        const std::string second = cli.stdout_of(command);
        if (first != second) {
            outcome.fail("stdout differed across runs of: " + command);
            break;
        }
        if (first.empty()) {
            outcome.fail("no stdout from: " + command);
            break;
        }
        ++checked;
    }
    if (outcome.ok)
        outcome.detail = std::to_string(checked) + " invocations byte-identical across two runs";
    return outcome;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "pi estimation converges with honest error bars", criterion_pi},
        {2, "rejection-sampling integral matches the analytic value", criterion_integral},
        {3, "vertical fit is exact and satisfies its normal equations", criterion_vertical},
        {4, "perpendicular fit matches the angle-sweep oracle", criterion_perpendicular},
        {5, "correlation is bounded and signed correctly", criterion_correlation},
        {6, "geometric-mean prediction and mean identities", criterion_means},
        {7, "exponential round trips and saturating shape", criterion_exponential},
        {8, "coverage classification and scale invariance", criterion_coverage},
        {9, "simulator invariants and leader handoff", criterion_simulator},
        {10, "CLI output is byte-identical across runs", criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
                  << criterion.name;
        if (!outcome.detail.empty()) std::cout << " [" << outcome.detail << "]";
        std::cout << std::endl;
        if (!outcome.ok) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all 10 criteria passed" << std::endl;
    return 0;
}
