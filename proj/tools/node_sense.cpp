// node-sense: a single binary exposing the library's estimators, fitters
// and the cell simulator as subcommands. Conventions: CSV in, one-line
// JSON out (or CSV via --output csv), domain errors as one-line JSON on
// stderr with exit code 1, usage errors with exit code 2.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nodesense/cell_network.hpp"
#include "nodesense/coverage.hpp"
#include "nodesense/csv.hpp"
#include "nodesense/curve_fit.hpp"
#include "nodesense/errors.hpp"
#include "nodesense/exp_models.hpp"
#include "nodesense/mc_estimation.hpp"
#include "nodesense/position_prediction.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace nodesense;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt_number(double v) {
    return ordered_json(v).dump();
}

double parse_double_flag(const std::string& flag, const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw DomainError("bad_flag", flag + ": expected a number, got '" + text + "'");
    return value;
}

csv::Table read_csv_file(const std::string& path, const std::vector<std::string>& header) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("io_error", "cannot open '" + path + "'");
    return csv::read_table(in, header);
}

// Prints {key: value} either as one JSON line or as a CSV header + row.
void print_record(const ordered_json& record, const std::string& output_mode) {
    if (output_mode == "csv") {
        std::string header;
        std::string row;
        bool first = true;
        for (const auto& [key, value] : record.items()) {
            if (!first) {
                header += ',';
                row += ',';
            }
            first = false;
            header += key;
            row += value.is_string() ? value.get<std::string>() : value.dump();
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << record.dump() << "\n";
    }
}

ordered_json estimate_json(const mc::McEstimate& e) {
    return ordered_json{{"accepted", e.accepted},
                        {"total", e.total},
                        {"ratio", e.ratio},
                        {"estimate", e.estimate},
                        {"std_error", e.std_error}};
}

mc::BoundedFunction parse_function(const std::string& spec, double b1, double b2, double height) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError("bad_function",
                          "--fn must be poly:c0,c1,... or builtin:NAME, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    if (kind == "builtin")
        return mc::BoundedFunction::builtin(body, b1, b2, height);
    if (kind == "poly") {
        std::vector<double> coefficients;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            const std::string field = body.substr(start, comma - start);
            coefficients.push_back(parse_double_flag("--fn", field));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return mc::BoundedFunction::polynomial(std::move(coefficients), b1, b2, height);
    }
    throw DomainError("bad_function", "unknown function kind '" + kind + "'");
}

Point2D parse_point_flag(const std::string& flag, const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw DomainError("bad_flag", flag + ": expected X,Y, got '" + text + "'");
    return {parse_double_flag(flag, text.substr(0, comma)),
            parse_double_flag(flag, text.substr(comma + 1))};
}

std::pair<double, double> parse_range_flag(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw DomainError("bad_flag", "--range: expected X1:X2, got '" + text + "'");
    return {parse_double_flag("--range", text.substr(0, colon)),
            parse_double_flag("--range", text.substr(colon + 1))};
}

// Writes CSV rows to a file, or to stdout when path is "-".
class CsvSink {
public:
    explicit CsvSink(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_)
                throw DomainError("io_error", "cannot write '" + path + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

exp_models::ExpKind parse_kind_flag(const std::string& text) {
    if (text == "growth") return exp_models::ExpKind::Growth;
    if (text == "decay") return exp_models::ExpKind::Decay;
    if (text == "modified") return exp_models::ExpKind::ModifiedGrowth;
    throw DomainError("bad_flag", "--kind: expected growth, decay or modified, got '" + text + "'");
}

ordered_json fit_json(const fit::LinearFit& f, std::size_t n) {
    ordered_json out{{"method", fit::to_string(f.method)},
                     {"a", f.intercept},
                     {"b", f.slope},
                     {"r", f.r},
                     {"r2", f.r_squared},
                     {"se_a", f.se_a},
                     {"se_b", f.se_b},
                     {"s", f.s},
                     {"residual", f.residual},
                     {"n", n}};
    if (f.method == fit::FitMethod::PerpendicularOffsets)
        out["vertical_line"] = f.vertical_line;
    return out;
}

struct Cli {
    CLI::App app{"Coverage-area estimation, node-position fitting and cell simulation"};
    std::uint64_t global_seed = 42;
    CLI::Option* global_seed_opt = nullptr;
    std::string output_mode;  // empty, "json" or "csv"
    bool quiet = false;
};

void setup_mc(Cli& cli) {
    auto* mc_cmd = cli.app.add_subcommand("mc", "Monte Carlo estimators");
    mc_cmd->require_subcommand(1);

    struct McArgs {
        std::uint64_t samples = 0;
        std::uint64_t seed = 42;
        std::uint64_t streams = 1;
        std::string fn;
        double b1 = 0.0;
        double b2 = 1.0;
        double height = 1.0;
        std::uint64_t total = 0;
    };
    auto args = std::make_shared<McArgs>();

    // A subcommand's own --seed wins; otherwise a global --seed applies.
    const auto config = [&cli, args](CLI::Option* seed_opt) -> mc::McConfig {
        std::uint64_t seed = args->seed;
        if (seed_opt->count() == 0 && cli.global_seed_opt->count() > 0)
            seed = cli.global_seed;
        return {args->samples, seed, args->streams};
    };

    auto* pi = mc_cmd->add_subcommand("pi", "Estimate pi from the circle-in-square ratio");
    pi->add_option("--samples", args->samples, "Number of sampled points")->required();
    CLI::Option* pi_seed = pi->add_option("--seed", args->seed, "RNG seed");
    pi->add_option("--streams", args->streams, "Independent sub-streams");
    pi->callback([&cli, args, config, pi_seed] {
        print_record(estimate_json(mc::estimate_pi(config(pi_seed))), cli.output_mode);
    });

    const auto add_fn_options = [args](CLI::App* cmd) -> CLI::Option* {
        cmd->add_option("--fn", args->fn, "poly:c0,c1,... or builtin:NAME")->required();
        cmd->add_option("--b1", args->b1, "Domain lower bound")->required();
        cmd->add_option("--b2", args->b2, "Domain upper bound")->required();
        cmd->add_option("--height", args->height, "Height bound a with f <= a")->required();
        cmd->add_option("--samples", args->samples, "Number of sampled points")->required();
        CLI::Option* seed = cmd->add_option("--seed", args->seed, "RNG seed");
        cmd->add_option("--streams", args->streams, "Independent sub-streams");
        return seed;
    };

    auto* integrate = mc_cmd->add_subcommand("integrate", "Estimate the integral of f by rejection sampling");
    CLI::Option* integrate_seed = add_fn_options(integrate);
    integrate->callback([&cli, args, config, integrate_seed] {
        const auto f = parse_function(args->fn, args->b1, args->b2, args->height);
        print_record(estimate_json(mc::estimate_area_under_curve(f, config(integrate_seed))),
                     cli.output_mode);
    });

    auto* nodes = mc_cmd->add_subcommand("nodes", "Expected in-region node count");
    nodes->add_option("--total", args->total, "Total node count N_t")->required();
    CLI::Option* nodes_seed = add_fn_options(nodes);
    nodes->callback([&cli, args, config, nodes_seed] {
        const auto f = parse_function(args->fn, args->b1, args->b2, args->height);
        print_record(
            estimate_json(mc::expected_nodes_detail(args->total, f, config(nodes_seed))),
            cli.output_mode);
    });
}

void setup_coverage(Cli& cli) {
    struct CoverageArgs {
        std::string center;
        double radius = 1.0;
        std::string cells_path;
        double epsilon = 1e-9;
    };
    auto args = std::make_shared<CoverageArgs>();

    auto* cmd = cli.app.add_subcommand("coverage", "Classify cells against a circular region");
    cmd->add_option("--center", args->center, "Region center as X,Y")->required();
    cmd->add_option("--radius", args->radius, "Region radius R")->required();
    cmd->add_option("--cells", args->cells_path, "CSV of cells with header id,x,y")->required();
    cmd->add_option("--epsilon", args->epsilon, "Boundary band half-width");
    cmd->callback([&cli, args] {
        const coverage::CoverageRegion region{parse_point_flag("--center", args->center),
                                              args->radius};
        const auto table = read_csv_file(args->cells_path, {"id", "x", "y"});
        if (cli.output_mode == "json") {
            ordered_json out = ordered_json::array();
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                const auto& row = table.rows[i];
                const Point2D cell{csv::parse_double(row[1], table.line_numbers[i]),
                                   csv::parse_double(row[2], table.line_numbers[i])};
                const auto m = coverage::classify_cell(region, cell, args->epsilon);
                out.push_back(ordered_json{{"id", row[0]},
                                           {"score", m.score},
                                           {"membership", coverage::to_string(m.membership)}});
            }
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "id,score,membership\n";
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                const auto& row = table.rows[i];
                const Point2D cell{csv::parse_double(row[1], table.line_numbers[i]),
                                   csv::parse_double(row[2], table.line_numbers[i])};
                const auto m = coverage::classify_cell(region, cell, args->epsilon);
                std::cout << row[0] << ',' << fmt_number(m.score) << ','
                          << coverage::to_string(m.membership) << "\n";
            }
        }
    });
}

void setup_fit(Cli& cli) {
    struct FitArgs {
        std::string method;
        std::string input;
        std::string emit_line;
        std::string range;
        std::uint64_t steps = 100;
    };
    auto args = std::make_shared<FitArgs>();

    auto* cmd = cli.app.add_subcommand("fit", "Least-squares line fitting");
    cmd->add_option("--method", args->method, "vertical or perpendicular")
        ->required()
        ->check(CLI::IsMember({"vertical", "perpendicular"}));
    cmd->add_option("--input", args->input, "CSV of points with header x,y")->required();
    auto* emit = cmd->add_option("--emit-line", args->emit_line,
                                 "Write sampled line points to this CSV ('-' for stdout)");
    auto* range = cmd->add_option("--range", args->range,
                                  "Sampling interval X1:X2 for --emit-line");
    emit->needs(range);
    range->needs(emit);
    cmd->add_option("--steps", args->steps, "Number of sampled line points");
    cmd->callback([&cli, args] {
        // Validate the emit-line flags before any output is produced.
        std::pair<double, double> bounds{0.0, 0.0};
        if (!args->emit_line.empty()) {
            if (args->steps < 2)
                throw DomainError("bad_flag", "--steps must be >= 2");
            bounds = parse_range_flag(args->range);
        }

        const auto table = read_csv_file(args->input, {"x", "y"});
        std::vector<Point2D> points;
        points.reserve(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            points.push_back({csv::parse_double(table.rows[i][0], table.line_numbers[i]),
                              csv::parse_double(table.rows[i][1], table.line_numbers[i])});
        const auto f = args->method == "vertical" ? fit::fit_vertical(points)
                                                  : fit::fit_perpendicular(points);
        print_record(fit_json(f, points.size()), cli.output_mode);

        if (!args->emit_line.empty()) {
            const auto [lo, hi] = bounds;
            CsvSink sink(args->emit_line);
            sink.stream() << "x,y\n";
            for (std::uint64_t i = 0; i < args->steps; ++i) {
                const double t = lo + (hi - lo) * static_cast<double>(i) /
                                          static_cast<double>(args->steps - 1);
                // A vertical line is sampled along y at the fitted x.
                const double x = f.vertical_line ? f.intercept : t;
                const double y = f.vertical_line ? t : f.intercept + f.slope * t;
                sink.stream() << fmt_number(x) << ',' << fmt_number(y) << "\n";
            }
        }
    });
}

void setup_exp(Cli& cli) {
    auto* exp_cmd = cli.app.add_subcommand("exp", "Exponential growth/decay models");
    exp_cmd->require_subcommand(1);

    struct ExpArgs {
        std::string model;
        std::string input;
        double capacity = 0.0;
        CLI::Option* capacity_opt = nullptr;
        std::string kind;
        double scale = 1.0;
        double rate = 1.0;
        double t = 0.0;
        double t1 = 0.0;
        double t2 = 1.0;
        std::uint64_t steps = 100;
        std::string out;
    };
    auto args = std::make_shared<ExpArgs>();

    auto* fit_cmd = exp_cmd->add_subcommand("fit", "Fit a model to a time series");
    fit_cmd->add_option("--model", args->model, "growth-decay or modified")
        ->required()
        ->check(CLI::IsMember({"growth-decay", "modified"}));
    fit_cmd->add_option("--input", args->input, "CSV of samples with header t,y")->required();
    args->capacity_opt = fit_cmd->add_option("--capacity", args->capacity,
                                             "Capacity N (modified model only)");
    fit_cmd->callback([&cli, args] {
        const auto table = read_csv_file(args->input, {"t", "y"});
        exp_models::TimeSeries series;
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            series.push_back({csv::parse_double(table.rows[i][0], table.line_numbers[i]),
                              csv::parse_double(table.rows[i][1], table.line_numbers[i])});
        exp_models::ExpModel model;
        if (args->model == "modified") {
            if (args->capacity_opt->count() == 0)
                throw DomainError("bad_flag", "--capacity is required for the modified model");
            model = exp_models::fit_modified_growth(series, args->capacity);
        } else {
            model = exp_models::fit_growth_decay(series);
        }
        print_record(ordered_json{{"kind", exp_models::to_string(model.kind)},
                                  {"scale", model.scale},
                                  {"rate", model.rate}},
                     cli.output_mode);
    });

    auto* eval_cmd = exp_cmd->add_subcommand("eval", "Evaluate a model at one time");
    eval_cmd->add_option("--kind", args->kind, "growth, decay or modified")->required();
    eval_cmd->add_option("--scale", args->scale, "y0 or capacity N")->required();
    eval_cmd->add_option("--rate", args->rate, "Rate k > 0")->required();
    eval_cmd->add_option("--t", args->t, "Time")->required();
    eval_cmd->callback([args] {
        const exp_models::ExpModel model{parse_kind_flag(args->kind), args->scale, args->rate};
        std::cout << fmt_number(exp_models::evaluate(model, args->t)) << "\n";
    });

    auto* curve_cmd = exp_cmd->add_subcommand("curve", "Emit model curve samples as CSV");
    curve_cmd->add_option("--kind", args->kind, "growth, decay or modified")->required();
    curve_cmd->add_option("--scale", args->scale, "y0 or capacity N")->required();
    curve_cmd->add_option("--rate", args->rate, "Rate k > 0")->required();
    curve_cmd->add_option("--t1", args->t1, "Start time")->required();
    curve_cmd->add_option("--t2", args->t2, "End time")->required();
    curve_cmd->add_option("--steps", args->steps, "Number of samples");
    curve_cmd->add_option("--out", args->out, "Output CSV path ('-' for stdout)")->required();
    curve_cmd->callback([args] {
        if (args->steps < 2)
            throw DomainError("bad_flag", "--steps must be >= 2");
        const exp_models::ExpModel model{parse_kind_flag(args->kind), args->scale, args->rate};
        CsvSink sink(args->out);
        sink.stream() << "t,y\n";
        for (std::uint64_t i = 0; i < args->steps; ++i) {
            const double t = args->t1 + (args->t2 - args->t1) * static_cast<double>(i) /
                                      static_cast<double>(args->steps - 1);
            sink.stream() << fmt_number(t) << ',' << fmt_number(exp_models::evaluate(model, t))
                          << "\n";
        }
    });
}

void setup_predict(Cli& cli) {
    auto* predict = cli.app.add_subcommand("predict", "Geometric-mean position prediction");
    predict->require_subcommand(1);

    struct PredictArgs {
        double t1 = 0.0;
        double p1 = 1.0;
        double t2 = 1.0;
        double p2 = 1.0;
    };
    auto args = std::make_shared<PredictArgs>();

    const auto add_pair = [args](CLI::App* cmd) {
        cmd->add_option("--t1", args->t1, "First time")->required();
        cmd->add_option("--p1", args->p1, "First position")->required();
        cmd->add_option("--t2", args->t2, "Second time")->required();
        cmd->add_option("--p2", args->p2, "Second position")->required();
    };

    auto* midway = predict->add_subcommand("midway", "Position at the midway time");
    add_pair(midway);
    midway->callback([&cli, args] {
        const auto s = prediction::predict_midway({args->t1, args->p1}, {args->t2, args->p2});
        print_record(ordered_json{{"t", s.t}, {"p", s.p}}, cli.output_mode);
    });

    auto* extreme = predict->add_subcommand("extreme", "Next equidistant position");
    add_pair(extreme);
    extreme->callback([&cli, args] {
        const auto s =
            prediction::predict_extrapolated({args->t1, args->p1}, {args->t2, args->p2});
        print_record(ordered_json{{"t", s.t}, {"p", s.p}}, cli.output_mode);
    });

    auto* means = predict->add_subcommand("means", "AM, HM and GM of two times");
    means->add_option("--t1", args->t1, "First time")->required();
    means->add_option("--t2", args->t2, "Second time")->required();
    means->callback([&cli, args] {
        const auto m = prediction::am_hm_gm(args->t1, args->t2);
        print_record(ordered_json{{"am", m.am}, {"hm", m.hm}, {"gm", m.gm}}, cli.output_mode);
    });
}

void setup_sim(Cli& cli) {
    struct SimArgs {
        std::string events_path;
        std::uint64_t ips = 0;
        std::uint64_t cells = 0;
        std::string log_path = "-";
    };
    auto args = std::make_shared<SimArgs>();

    auto* cmd = cli.app.add_subcommand("sim", "Replay a join/leave event script");
    cmd->add_option("--events", args->events_path, "CSV with header time,op,cell,node")
        ->required();
    cmd->add_option("--ips", args->ips, "Total IP addresses m")->required();
    cmd->add_option("--cells", args->cells, "Cell count n")->required();
    cmd->add_option("--log", args->log_path,
                    "Event-log CSV destination ('-' for stdout, the default)");
    cmd->callback([&cli, args] {
        const auto table = read_csv_file(args->events_path, {"time", "op", "cell", "node"});
        std::vector<cellnet::Event> events;
        events.reserve(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const std::size_t line = table.line_numbers[i];
            cellnet::Event event;
            event.time = csv::parse_uint(row[0], line);
            if (row[1] == "join")
                event.op = cellnet::EventOp::Join;
            else if (row[1] == "leave")
                event.op = cellnet::EventOp::Leave;
            else
                throw DomainError("malformed_csv", "line " + std::to_string(line) +
                                                       ": op must be join or leave, got '" +
                                                       row[1] + "'");
            event.cell = static_cast<int>(csv::parse_uint(row[2], line));
            if (row[3].empty())
                throw DomainError("malformed_csv",
                                  "line " + std::to_string(line) + ": node must be nonempty");
            event.node = row[3];
            events.push_back(std::move(event));
        }

        const auto allocation = coverage::partition_ips(args->ips, args->cells);
        if (allocation.warning && !cli.quiet)
            std::cerr << "warning: " << allocation.total_ips << " addresses over "
                      << allocation.cells << " cells leaves every cell empty\n";
        const auto result =
            cellnet::run_script(events, allocation, static_cast<int>(args->cells));

        ordered_json cells = ordered_json::array();
        for (const auto& cell : result.cells) {
            ordered_json ips = ordered_json::object();
            for (const auto& node : cell.members) ips[node] = cell.table.entries.at(node);
            ordered_json free_list = ordered_json::array();
            for (const auto ip : cell.free_ips) free_list.push_back(ip);
            cells.push_back(ordered_json{
                {"id", cell.cell_id},
                {"leader", cell.leader ? ordered_json(*cell.leader) : ordered_json(nullptr)},
                {"version", cell.table.version},
                {"members", cell.members},
                {"ips", std::move(ips)},
                {"free", std::move(free_list)}});
        }
        std::cout << ordered_json{{"cells", std::move(cells)},
                                  {"per_cell", allocation.per_cell},
                                  {"remainder", allocation.remainder}}
                         .dump()
                  << "\n";

        CsvSink sink(args->log_path);
        sink.stream() << "time,op,cell,node,result,leader,version,ip\n";
        for (const auto& entry : result.log) {
            sink.stream() << entry.time << ',' << cellnet::to_string(entry.op) << ','
                          << entry.cell << ',' << entry.node << ',' << entry.result << ','
                          << (entry.leader ? *entry.leader : std::string{}) << ','
                          << entry.version << ',' << entry.ip << "\n";
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    cli.app.set_version_flag("--version",
                             std::string("node-sense ") + kVersion + " (rng: SplitMix64)");
    cli.global_seed_opt =
        cli.app.add_option("--seed", cli.global_seed,
                           "Default RNG seed for sampling subcommands");
    cli.app.add_option("--output", cli.output_mode, "Record output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cli.app.add_flag("--quiet", cli.quiet, "Suppress warnings on stderr");
    cli.app.require_subcommand(1);

    setup_mc(cli);
    setup_coverage(cli);
    setup_fit(cli);
    setup_exp(cli);
    setup_predict(cli);
    setup_sim(cli);

    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return cli.app.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.app.exit(e);
        return 2;
    } catch (const DomainError& e) {
        std::cerr << ordered_json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << ordered_json{{"error", "internal_error"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
    return 0;
}
