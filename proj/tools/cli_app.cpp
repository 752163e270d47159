#include "cli_app.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "flowshop/evaluator.hpp"
#include "flowshop/markov.hpp"
#include "flowshop/rounds.hpp"
#include "flowshop/search.hpp"
#include "flowshop/serialize.hpp"

namespace flowshop::cli {

namespace {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw CLI::ValidationError("--format", "expected one of table, csv, json");
}

// Shortest exact representation; used everywhere a machine reads the value.
std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

// Six significant digits for the human tables.
std::string fmt_human(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
}

std::string join_schedule(const Schedule& schedule) {
    std::string out;
    for (int job : schedule.to_one_based()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(job);
    }
    return out;
}

Schedule parse_schedule(const std::string& text) {
    std::vector<int> order;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream part(token);
        int value = 0;
        while (part >> value) order.push_back(value);
        if (!part.eof()) throw std::invalid_argument("bad schedule token '" + token + "'");
    }
    if (order.empty()) throw std::invalid_argument("empty schedule");
    return Schedule::from_one_based(order);
}

void print_kv(std::ostream& out, std::string_view key, std::string_view value) {
    out << std::left << std::setw(24) << key << value << "\n";
}

// Key/value rows shared by the table and csv renderers: csv keeps exact
// doubles, the table shows them at human precision.
struct KvRows {
    struct Row {
        std::string key;
        std::string exact;
        std::string human;
    };
    std::vector<Row> rows;

    void add(std::string key, std::string value) { rows.push_back({std::move(key), value, value}); }
    void add(std::string key, double value) {
        rows.push_back({std::move(key), fmt(value), fmt_human(value)});
    }
    void add_list(std::string key, const std::vector<double>& values) {
        std::string exact;
        std::string human;
        for (double v : values) {
            if (!exact.empty()) {
                exact += ' ';
                human += ' ';
            }
            exact += fmt(v);
            human += fmt_human(v);
        }
        rows.push_back({std::move(key), std::move(exact), std::move(human)});
    }
};

void emit_kv(std::ostream& out, Format format, const KvRows& kv) {
    if (format == Format::Csv) {
        out << "key,value\n";
        for (const auto& row : kv.rows) {
            const bool quote = row.exact.find(',') != std::string::npos ||
                               row.exact.find(' ') != std::string::npos;
            out << row.key << ',' << (quote ? "\"" + row.exact + "\"" : row.exact) << "\n";
        }
    } else {
        for (const auto& row : kv.rows) print_kv(out, row.key, row.human);
    }
}

FlowshopInstance load_with_ps(const std::string& path, std::optional<double> ps_flag) {
    FlowshopInstance instance = load_instance(path);
    if (ps_flag) instance.failure = FailureModel(*ps_flag);
    return instance;
}

std::string descriptor(const FlowshopInstance& instance) {
    return std::to_string(instance.timing.jobs()) + "/" + std::to_string(instance.timing.machines()) +
           "/P/F";
}

// ---- solve ----------------------------------------------------------------

struct SolveOptions {
    std::string instance_path;
    std::string algorithm = "benchmark";
    std::string objective = "completion-time";
    std::string mode = "frobenius";
    std::optional<double> ps;
    bool cap_override = false;
    int threads = 0;
    Format format = Format::Table;
};

SearchResult run_algorithm(const FlowshopInstance& instance, const std::string& algorithm,
                           const std::string& objective, const std::string& mode,
                           const SearchLimits& limits) {
    if (algorithm == "benchmark")
        return brute_force(instance, objective_from_label(objective), limits);
    if (algorithm == "alg1") return algorithm1(instance, limits);
    if (algorithm == "alg2") return algorithm2(instance);
    if (algorithm == "alg3") return algorithm3(instance, limits);
    if (algorithm == "alg4")
        return algorithm4(instance, mode == "literal" ? Alg4Mode::Literal : Alg4Mode::Frobenius,
                          limits);
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

void render_search_result(std::ostream& out, Format format, const SearchResult& result) {
    if (format == Format::Json) {
        out << to_json(result).dump(2) << "\n";
        return;
    }
    KvRows kv;
    kv.add("objective", std::string(objective_label(result.objective)));
    kv.add("permutations_examined", std::to_string(result.permutations_examined));
    kv.add("best_schedule", join_schedule(result.best_schedule));
    kv.add("best_ct", result.best_value);
    if (result.best_criterion) kv.add("best_criterion", *result.best_criterion);
    kv.add("worst_schedule", join_schedule(result.worst_schedule));
    kv.add("worst_ct", result.worst_value);
    if (result.worst_criterion) kv.add("worst_criterion", *result.worst_criterion);
    emit_kv(out, format, kv);
}

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
    const FlowshopInstance instance = load_with_ps(opt.instance_path, opt.ps);
    SearchLimits limits;
    limits.override_caps = opt.cap_override;
    limits.threads = opt.threads;
    const SearchResult result =
        run_algorithm(instance, opt.algorithm, opt.objective, opt.mode, limits);
    render_search_result(out, opt.format, result);
    return 0;
}

// ---- evaluate --------------------------------------------------------------

struct EvaluateOptions {
    std::string instance_path;
    std::string schedule;
    std::optional<double> ps;
    Format format = Format::Table;
};

int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out) {
    const FlowshopInstance instance = load_with_ps(opt.instance_path, opt.ps);
    const Schedule schedule = parse_schedule(opt.schedule);
    const ScheduleEvaluation eval = evaluate_schedule(instance, schedule);

    if (opt.format == Format::Json) {
        nlohmann::json doc = to_json(eval);
        if (instance.has_failures())
            doc["weights"] = to_json(weight_series(instance.timing.machines(),
                                                   instance.timing.jobs(), *instance.failure))
                                 .at("descending");
        out << doc.dump(2) << "\n";
        return 0;
    }

    KvRows kv;
    kv.add("schedule", join_schedule(eval.schedule));
    kv.add("ct_no_fail", eval.ct_no_fail);
    if (eval.ct_with_fail) kv.add("ct_with_fail", *eval.ct_with_fail);
    if (eval.weighted) kv.add("weighted_ct", *eval.weighted);
    kv.add_list("stages", eval.stages.values);
    for (const auto& tl : eval.timelines) {
        const std::string label = "machine_" + std::to_string(tl.machine + 1);
        kv.add(label + "_total", tl.total_time);
        kv.add(label + "_wait", tl.total_wait);
    }
    if (instance.has_failures())
        kv.add_list("weights_descending",
                    weight_series(instance.timing.machines(), instance.timing.jobs(),
                                  *instance.failure)
                        .descending);
    emit_kv(out, opt.format, kv);
    return 0;
}

// ---- simulate --------------------------------------------------------------

struct SimulateOptions {
    std::string instance_path;
    std::string schedule;
    std::optional<double> ps;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    Format format = Format::Table;
};

int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
    const FlowshopInstance instance = load_with_ps(opt.instance_path, opt.ps);
    const Schedule schedule = parse_schedule(opt.schedule);
    const FailureModel failure = instance.failure.value_or(FailureModel(1.0));
    const SimStats stats = simulate_ct(instance.timing, schedule, failure, opt.trials, opt.seed);
    const double analytic = analytic_ct(instance.timing, schedule, failure);

    if (opt.format == Format::Json) {
        nlohmann::json doc = to_json(stats);
        doc["analytic_ct"] = analytic;
        out << doc.dump(2) << "\n";
        return 0;
    }
    KvRows kv;
    kv.add("trials", std::to_string(stats.trials));
    kv.add("seed", std::to_string(stats.seed));
    kv.add("mean_ct", stats.mean_ct);
    kv.add("variance", stats.variance);
    kv.add("standard_error", stats.standard_error);
    kv.add("analytic_ct", analytic);
    emit_kv(out, opt.format, kv);
    return 0;
}

// ---- bench -----------------------------------------------------------------

struct BenchOptions {
    std::string instance_path;
    std::vector<std::string> algorithms;
    bool include_all_jobs = false;
    bool algorithms_explicit = false;
    std::optional<double> ps;
    bool cap_override = false;
    int threads = 0;
    Format format = Format::Table;
};

struct BenchRow {
    std::string algorithm;
    SearchResult result;
    double wall_ms = 0.0;
};

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    const FlowshopInstance instance = load_with_ps(opt.instance_path, opt.ps);
    SearchLimits limits;
    limits.override_caps = opt.cap_override;
    limits.threads = opt.threads;

    std::vector<std::string> algorithms = opt.algorithms;
    if (algorithms.empty()) algorithms = {"benchmark", "alg1", "alg2", "alg3", "alg4"};

    std::vector<BenchRow> rows;
    for (const std::string& name : algorithms) {
        const auto start = std::chrono::steady_clock::now();
        try {
            SearchResult result =
                run_algorithm(instance, name, "completion-time", "frobenius", limits);
            const auto stop = std::chrono::steady_clock::now();
            rows.push_back({name, std::move(result),
                            std::chrono::duration<double, std::milli>(stop - start).count()});
        } catch (const cap_exceeded&) {
            if (name == "benchmark" && !opt.algorithms_explicit) {
                err << "note: skipping benchmark row, N exceeds the exhaustive cap\n";
                continue;
            }
            throw;
        }
    }
    if (opt.include_all_jobs) {
        // Criterion scans over every permutation, endpoints free.
        for (const auto& [name, objective] :
             {std::pair<std::string, Objective>{"alg3-iaj", Objective::WaitDifference},
              std::pair<std::string, Objective>{"alg4-iaj", Objective::FirstLastFrobenius}}) {
            const auto start = std::chrono::steady_clock::now();
            SearchResult result = brute_force(instance, objective, limits);
            const auto stop = std::chrono::steady_clock::now();
            rows.push_back({name, std::move(result),
                            std::chrono::duration<double, std::milli>(stop - start).count()});
        }
    }

    if (opt.format == Format::Json) {
        nlohmann::json doc;
        doc["instance"] = descriptor(instance);
        nlohmann::json list = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json entry = to_json(row.result);
            entry["algorithm"] = row.algorithm;
            entry["wall_ms"] = row.wall_ms;
            list.push_back(std::move(entry));
        }
        doc["rows"] = std::move(list);
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (opt.format == Format::Csv) {
        out << "algorithm,min_ct,max_ct,criterion,permutations_examined,wall_ms\n";
        for (const auto& row : rows) {
            out << row.algorithm << ',' << fmt(row.result.best_value) << ','
                << fmt(row.result.worst_value) << ','
                << (row.result.best_criterion ? fmt(*row.result.best_criterion) : "") << ','
                << row.result.permutations_examined << ',' << fmt(row.wall_ms) << "\n";
        }
        return 0;
    }
    out << "instance " << descriptor(instance) << "\n";
    out << std::left << std::setw(12) << "algorithm" << std::setw(12) << "min_ct" << std::setw(12)
        << "max_ct" << std::setw(14) << "criterion" << std::setw(16) << "permutations"
        << "wall_ms\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(12) << row.algorithm << std::setw(12)
            << fmt_human(row.result.best_value) << std::setw(12)
            << fmt_human(row.result.worst_value) << std::setw(14)
            << (row.result.best_criterion ? fmt_human(*row.result.best_criterion) : "-")
            << std::setw(16) << row.result.permutations_examined << fmt_human(row.wall_ms)
            << "\n";
    }
    return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
    std::string mode;
    std::string range;
    std::string instance_path;
    std::string schedule;
    int jobs = 10;
    int machines = 3;
    bool cap_override = false;
    int threads = 0;
    Format format = Format::Table;
};

std::vector<double> parse_range(const std::string& text) {
    double begin = 0.0;
    double end = 0.0;
    double step = 1.0;
    std::istringstream in(text);
    std::string token;
    std::vector<double> parts;
    while (std::getline(in, token, ':')) parts.push_back(std::stod(token));
    if (parts.size() < 2 || parts.size() > 3)
        throw std::invalid_argument("range must be begin:end or begin:end:step");
    begin = parts[0];
    end = parts[1];
    if (parts.size() == 3) step = parts[2];
    if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
    if (end < begin) throw std::invalid_argument("empty range");
    std::vector<double> values;
    const auto count = static_cast<std::size_t>(std::floor((end - begin) / step + 1e-9)) + 1;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) values.push_back(begin + static_cast<double>(i) * step);
    return values;
}

int int_value(double v, const char* what) {
    const double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-9 || rounded < 1.0)
        throw std::invalid_argument(std::string(what) + " sweep needs positive integers");
    return static_cast<int>(rounded);
}

void emit_series(std::ostream& out, Format format, const std::string& x_name,
                 const std::vector<std::array<double, 3>>& rows, bool has_max) {
    if (format == Format::Json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json entry{{x_name, row[0]}, {"min_ct", row[1]}};
            if (has_max) entry["max_ct"] = row[2];
            list.push_back(std::move(entry));
        }
        out << list.dump(2) << "\n";
        return;
    }
    const char sep = format == Format::Csv ? ',' : ' ';
    const auto render = format == Format::Csv ? fmt : fmt_human;
    if (format == Format::Csv)
        out << x_name << (has_max ? ",min_ct,max_ct" : ",ct") << "\n";
    else
        out << x_name << (has_max ? " min_ct max_ct" : " ct") << "\n";
    for (const auto& row : rows) {
        out << render(row[0]) << sep << render(row[1]);
        if (has_max) out << sep << render(row[2]);
        out << "\n";
    }
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
    const std::vector<double> range = parse_range(opt.range);
    SearchLimits limits;
    limits.override_caps = opt.cap_override;
    limits.threads = opt.threads;
    std::vector<std::array<double, 3>> rows;

    if (opt.mode == "machines") {
        // Equal-time case: every schedule ties, so the extremes coincide and
        // the identity order evaluates them.
        for (double v : range) {
            const int machines = int_value(v, "machines");
            const TimingMatrix timing(machines, opt.jobs,
                                      std::vector<double>(static_cast<std::size_t>(machines) * opt.jobs,
                                                          1.0));
            const double ct = ct_no_fail(timing, Schedule::identity(opt.jobs));
            rows.push_back({static_cast<double>(machines), ct, ct});
        }
        emit_series(out, opt.format, "machines", rows, true);
        return 0;
    }
    if (opt.mode == "jobs") {
        // Distinct inserted jobs: job j runs for j time units on every machine.
        for (double v : range) {
            const int jobs = int_value(v, "jobs");
            std::vector<double> entries;
            entries.reserve(static_cast<std::size_t>(opt.machines) * jobs);
            for (int i = 0; i < opt.machines; ++i)
                for (int j = 0; j < jobs; ++j) entries.push_back(j + 1.0);
            const FlowshopInstance instance{TimingMatrix(opt.machines, jobs, std::move(entries)), {}};
            const SearchResult result = brute_force(instance, Objective::CompletionTime, limits);
            rows.push_back({static_cast<double>(jobs), result.best_value, result.worst_value});
        }
        emit_series(out, opt.format, "jobs", rows, true);
        return 0;
    }
    if (opt.mode == "ps" || opt.mode == "pf") {
        if (opt.instance_path.empty())
            throw std::invalid_argument("ps/pf sweeps need --instance");
        FlowshopInstance instance = load_instance(opt.instance_path);
        instance.failure.reset();
        const Schedule schedule = opt.schedule.empty()
                                      ? brute_force(instance, Objective::CompletionTime, limits)
                                            .best_schedule
                                      : parse_schedule(opt.schedule);
        const double base = ct_no_fail(instance.timing, schedule);
        for (double v : range) {
            const double ps = opt.mode == "ps" ? v : 1.0 - v;
            if (!(ps > 0.0) || ps > 1.0)
                throw std::invalid_argument("probability out of range in sweep");
            rows.push_back({v, base / ps, 0.0});
        }
        emit_series(out, opt.format, opt.mode, rows, false);
        return 0;
    }
    throw std::invalid_argument("unknown sweep mode '" + opt.mode + "'");
}

// ---- rounds ----------------------------------------------------------------

struct RoundsOptions {
    std::string instance_path;
    std::string schedule;
    std::optional<double> ps;
    Format format = Format::Table;
};

int cmd_rounds(const RoundsOptions& opt, std::ostream& out) {
    const FlowshopInstance instance = load_with_ps(opt.instance_path, opt.ps);
    const Schedule schedule = parse_schedule(opt.schedule);
    const RoundsReport report = machine_rounds(instance, schedule);

    if (opt.format == Format::Json) {
        out << to_json(report).dump(2) << "\n";
        return 0;
    }
    if (opt.format == Format::Csv) {
        out << "machine,total_time,idle_budget,rounds,below_one\n";
        for (const auto& entry : report.machines)
            out << entry.machine + 1 << ',' << fmt(entry.total_time) << ','
                << fmt(entry.idle_budget) << ',' << fmt(entry.rounds) << ','
                << (entry.below_one ? "true" : "false") << "\n";
        return 0;
    }
    out << std::left << std::setw(9) << "machine" << std::setw(14) << "total_time" << std::setw(14)
        << "idle_budget" << std::setw(12) << "rounds" << "below_one\n";
    for (const auto& entry : report.machines) {
        out << std::left << std::setw(9) << entry.machine + 1 << std::setw(14)
            << fmt_human(entry.total_time) << std::setw(14) << fmt_human(entry.idle_budget)
            << std::setw(12) << fmt_human(entry.rounds) << (entry.below_one ? "yes" : "no")
            << "\n";
    }
    out << "monotone nonincreasing: " << (report.monotone_nonincreasing ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation flowshop completion-time toolkit"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    EvaluateOptions eval_opt;
    SimulateOptions sim_opt;
    BenchOptions bench_opt;
    SweepOptions sweep_opt;
    RoundsOptions rounds_opt;
    std::string solve_format = "table";
    std::string eval_format = "table";
    std::string sim_format = "table";
    std::string bench_format = "table";
    std::string sweep_format = "table";
    std::string rounds_format = "table";

    CLI::App* solve = app.add_subcommand("solve", "Search for optimal and worst schedules");
    solve->add_option("--instance", solve_opt.instance_path, "instance file")->required();
    solve->add_option("--algorithm", solve_opt.algorithm,
                      "benchmark, alg1, alg2, alg3 or alg4");
    solve->add_option("--objective", solve_opt.objective, "benchmark scan objective");
    solve->add_option("--mode", solve_opt.mode, "alg4 mode: literal or frobenius")
        ->check(CLI::IsMember({"literal", "frobenius"}));
    solve->add_option("--ps", solve_opt.ps, "success probability override");
    solve->add_flag("--cap-override", solve_opt.cap_override, "lift the factorial caps");
    solve->add_option("--threads", solve_opt.threads, "scan worker count (0 = auto)");
    solve->add_option("--format", solve_format, "table, csv or json");

    CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate one schedule");
    evaluate->add_option("--instance", eval_opt.instance_path, "instance file")->required();
    evaluate->add_option("--schedule", eval_opt.schedule, "1-based job order")->required();
    evaluate->add_option("--ps", eval_opt.ps, "success probability override");
    evaluate->add_option("--format", eval_format, "table, csv or json");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo completion time");
    simulate->add_option("--instance", sim_opt.instance_path, "instance file")->required();
    simulate->add_option("--schedule", sim_opt.schedule, "1-based job order")->required();
    simulate->add_option("--ps", sim_opt.ps, "success probability override");
    simulate->add_option("--trials", sim_opt.trials, "trial count");
    simulate->add_option("--seed", sim_opt.seed, "generator seed");
    simulate->add_option("--format", sim_format, "table, csv or json");

    CLI::App* bench = app.add_subcommand("bench", "Compare the search algorithms");
    bench->add_option("--instance", bench_opt.instance_path, "instance file")->required();
    bench->add_option("--algorithms", bench_opt.algorithms, "subset to run")->delimiter(',');
    bench->add_flag("--include-all-jobs", bench_opt.include_all_jobs,
                    "add endpoint-free criterion scans for alg3/alg4");
    bench->add_option("--ps", bench_opt.ps, "success probability override");
    bench->add_flag("--cap-override", bench_opt.cap_override, "lift the factorial caps");
    bench->add_option("--threads", bench_opt.threads, "scan worker count (0 = auto)");
    bench->add_option("--format", bench_format, "table, csv or json");

    CLI::App* sweep = app.add_subcommand("sweep", "Emit completion-time series");
    sweep->add_option("--mode", sweep_opt.mode, "machines, jobs, ps or pf")->required();
    sweep->add_option("--range", sweep_opt.range, "begin:end[:step]")->required();
    sweep->add_option("--instance", sweep_opt.instance_path, "instance file (ps/pf modes)");
    sweep->add_option("--schedule", sweep_opt.schedule, "fixed schedule (ps/pf modes)");
    sweep->add_option("--jobs", sweep_opt.jobs, "job count for the machines sweep");
    sweep->add_option("--machines", sweep_opt.machines, "machine count for the jobs sweep");
    sweep->add_flag("--cap-override", sweep_opt.cap_override, "lift the factorial caps");
    sweep->add_option("--threads", sweep_opt.threads, "scan worker count (0 = auto)");
    sweep->add_option("--format", sweep_format, "table, csv or json");

    CLI::App* rounds = app.add_subcommand("rounds", "Machine re-usage rounds");
    rounds->add_option("--instance", rounds_opt.instance_path, "instance file")->required();
    rounds->add_option("--schedule", rounds_opt.schedule, "1-based job order")->required();
    rounds->add_option("--ps", rounds_opt.ps, "success probability override");
    rounds->add_option("--format", rounds_format, "table, csv or json");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("flowshop");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(solve)) {
            solve_opt.format = parse_format(solve_format);
            return cmd_solve(solve_opt, out);
        }
        if (app.got_subcommand(evaluate)) {
            eval_opt.format = parse_format(eval_format);
            return cmd_evaluate(eval_opt, out);
        }
        if (app.got_subcommand(simulate)) {
            sim_opt.format = parse_format(sim_format);
            return cmd_simulate(sim_opt, out);
        }
        if (app.got_subcommand(bench)) {
            bench_opt.format = parse_format(bench_format);
            bench_opt.algorithms_explicit = !bench_opt.algorithms.empty();
            return cmd_bench(bench_opt, out, err);
        }
        if (app.got_subcommand(sweep)) {
            sweep_opt.format = parse_format(sweep_format);
            return cmd_sweep(sweep_opt, out);
        }
        if (app.got_subcommand(rounds)) {
            rounds_opt.format = parse_format(rounds_format);
            return cmd_rounds(rounds_opt, out);
        }
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace flowshop::cli
