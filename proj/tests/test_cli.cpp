#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli_app.hpp"
#include "support.hpp"

using flowshop::cli::run_cli;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::filesystem::path data_dir() {
    const auto dir = std::filesystem::path("cli_test_data");
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = data_dir() / name;
    std::ofstream file(path);
    file << content;
    return path.string();
}

std::string ref3_path() {
    static const std::string path = [] {
        std::ostringstream out;
        out << "# machines=3 jobs=10\n";
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 10; ++j) {
                if (j) out << ',';
                out << testsupport::kRefEntries[i * 10 + j];
            }
            out << '\n';
        }
        return write_file("ref3.csv", out.str());
    }();
    return path;
}

const std::string kBestScheduleFlag = "10,4,5,9,7,2,8,3,6,1";

}  // namespace

TEST_CASE("solve alg1 reproduces the reference optimum") {
    const CliRun result = run({"solve", "--instance", ref3_path(), "--algorithm", "alg1"});
    REQUIRE(result.code == 0);
    CHECK(result.out.find("10 3 5 9 2 8 4 7 6 1") != std::string::npos);
    CHECK(result.out.find("40.3") != std::string::npos);
    CHECK(result.out.find("40320") != std::string::npos);
}

TEST_CASE("solve benchmark json output on a small instance") {
    const std::string path = write_file("small.csv", "3,1,2\n2,3,1\n");
    const CliRun result = run(
        {"solve", "--instance", path, "--algorithm", "benchmark", "--format", "json"});
    REQUIRE(result.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("objective") == "completion-time");
    CHECK(doc.at("permutations_examined") == 6);
    CHECK(doc.at("best_value").get<double>() <= doc.at("worst_value").get<double>());
    CHECK(doc.at("best_schedule").size() == 3);

    const CliRun criterion = run({"solve", "--instance", path, "--algorithm", "benchmark",
                                  "--objective", "wait-difference", "--format", "json"});
    REQUIRE(criterion.code == 0);
    const nlohmann::json cdoc = nlohmann::json::parse(criterion.out);
    CHECK(cdoc.at("objective") == "wait-difference");
    CHECK(cdoc.contains("best_criterion"));
    CHECK(cdoc.at("best_criterion").get<double>() <= cdoc.at("worst_criterion").get<double>());
}

TEST_CASE("solve propagates endpoint and cap errors with distinct exit codes") {
    const std::string one_job = write_file("one_job.csv", "5\n2\n");
    const CliRun endpoints = run({"solve", "--instance", one_job, "--algorithm", "alg1"});
    CHECK(endpoints.code == 1);
    CHECK(endpoints.err.find("cannot fix both endpoints") != std::string::npos);

    std::string big = "1,2,3,4,5,6,7,8,9,10,11\n";
    const std::string big_path = write_file("big.csv", big + big);
    const CliRun capped = run({"solve", "--instance", big_path, "--algorithm", "benchmark"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("cap") != std::string::npos);

    const CliRun missing = run({"solve", "--instance", "no_such_file.csv"});
    CHECK(missing.code == 1);

    const CliRun bad_usage = run({"solve"});
    CHECK(bad_usage.code == 1);

    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("evaluate emits the full evaluation") {
    const CliRun table =
        run({"evaluate", "--instance", ref3_path(), "--schedule", kBestScheduleFlag});
    REQUIRE(table.code == 0);
    CHECK(table.out.find("ct_no_fail") != std::string::npos);
    CHECK(table.out.find("40.3") != std::string::npos);

    const CliRun json_run = run({"evaluate", "--instance", ref3_path(), "--schedule",
                                 kBestScheduleFlag, "--ps", "0.5", "--format", "json"});
    REQUIRE(json_run.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json_run.out);
    CHECK(doc.at("ct_no_fail").get<double>() == doctest::Approx(40.3).epsilon(1e-12));
    CHECK(doc.at("ct_with_fail").get<double>() == doctest::Approx(80.6).epsilon(1e-12));
    CHECK(doc.at("weighted_ct").get<double>() == doctest::Approx(80.6).epsilon(1e-12));
    CHECK(doc.at("stages").size() == 12);
    CHECK(doc.at("machine_totals").size() == 3);
    CHECK(doc.at("machine_waits")[0].get<double>() == 0.0);
    CHECK(doc.at("weights").size() == 12);

    const CliRun ps_one = run({"evaluate", "--instance", ref3_path(), "--schedule",
                               kBestScheduleFlag, "--ps", "1.0", "--format", "json"});
    const nlohmann::json one = nlohmann::json::parse(ps_one.out);
    CHECK(one.at("ct_with_fail") == one.at("ct_no_fail"));
    CHECK_FALSE(one.contains("weighted_ct"));

    const CliRun bad = run({"evaluate", "--instance", ref3_path(), "--schedule", "1,2,3"});
    CHECK(bad.code == 1);
}

TEST_CASE("simulate matches the analytic value and validates flags") {
    const CliRun exact = run({"simulate", "--instance", ref3_path(), "--schedule",
                              kBestScheduleFlag, "--ps", "1.0", "--trials", "100", "--seed", "3",
                              "--format", "json"});
    REQUIRE(exact.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(exact.out);
    CHECK(doc.at("variance").get<double>() == 0.0);
    CHECK(doc.at("mean").get<double>() == doctest::Approx(40.3).epsilon(1e-12));
    CHECK(doc.at("analytic_ct").get<double>() == doctest::Approx(40.3).epsilon(1e-12));

    const CliRun banded = run({"simulate", "--instance", ref3_path(), "--schedule",
                               kBestScheduleFlag, "--ps", "0.8", "--trials", "20000", "--seed",
                               "7", "--format", "json"});
    REQUIRE(banded.code == 0);
    const nlohmann::json band = nlohmann::json::parse(banded.out);
    CHECK(std::abs(band.at("mean").get<double>() - band.at("analytic_ct").get<double>()) <=
          4 * band.at("standard_error").get<double>());

    const CliRun zero = run({"simulate", "--instance", ref3_path(), "--schedule",
                             kBestScheduleFlag, "--trials", "0"});
    CHECK(zero.code == 1);
    const CliRun bad_ps = run({"simulate", "--instance", ref3_path(), "--schedule",
                               kBestScheduleFlag, "--ps", "1.5"});
    CHECK(bad_ps.code == 1);
}

TEST_CASE("rounds reports the reference values and guards failures") {
    const CliRun table = run({"rounds", "--instance", ref3_path(), "--schedule", kBestScheduleFlag});
    REQUIRE(table.code == 0);
    CHECK(table.out.find("1.3754") != std::string::npos);
    CHECK(table.out.find("monotone nonincreasing: yes") != std::string::npos);

    const CliRun json_run = run({"rounds", "--instance", ref3_path(), "--schedule",
                                 kBestScheduleFlag, "--format", "json"});
    const nlohmann::json doc = nlohmann::json::parse(json_run.out);
    CHECK(doc.at("machines")[0].at("rounds").get<double>() == doctest::Approx(1.3754).epsilon(1e-3));
    CHECK(doc.at("machines")[1].at("rounds").get<double>() == doctest::Approx(1.2426).epsilon(1e-3));
    CHECK(doc.at("machines")[2].at("rounds").get<double>() == 1.0);

    const CliRun refused =
        run({"rounds", "--instance", ref3_path(), "--schedule", kBestScheduleFlag, "--ps", "0.8"});
    CHECK(refused.code == 1);
    CHECK(refused.err.find("out of scope") != std::string::npos);
}

TEST_CASE("bench emits one row per algorithm") {
    const std::string path = write_file("bench.csv", "3,1,2,4\n2,3,1,5\n1,2,3,4\n");
    const CliRun csv = run({"bench", "--instance", path, "--format", "csv"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "algorithm,min_ct,max_ct,criterion,permutations_examined,wall_ms");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 5);

    const CliRun iaj = run({"bench", "--instance", path, "--algorithms", "alg3,alg4",
                            "--include-all-jobs", "--format", "csv"});
    REQUIRE(iaj.code == 0);
    CHECK(iaj.out.find("alg3-iaj") != std::string::npos);
    CHECK(iaj.out.find("alg4-iaj") != std::string::npos);

    // Constant matrix: every algorithm lands on the same completion time.
    const std::string flat = write_file("flat.csv", "2,2,2,2\n2,2,2,2\n");
    const CliRun tie = run({"bench", "--instance", flat, "--format", "csv"});
    REQUIRE(tie.code == 0);
    std::istringstream tie_lines(tie.out);
    std::string tie_header;
    std::getline(tie_lines, tie_header);
    std::vector<double> min_cts;
    for (std::string line; std::getline(tie_lines, line);) {
        const auto first_comma = line.find(',');
        const auto second_comma = line.find(',', first_comma + 1);
        min_cts.push_back(std::stod(line.substr(first_comma + 1, second_comma - first_comma - 1)));
    }
    REQUIRE(min_cts.size() == 5);
    for (double ct : min_cts) CHECK(ct == doctest::Approx(10.0).epsilon(1e-13));
}

TEST_CASE("sweep series") {
    const CliRun machines = run({"sweep", "--mode", "machines", "--range", "2:4", "--format",
                                 "csv"});
    REQUIRE(machines.code == 0);
    CHECK(machines.out == "machines,min_ct,max_ct\n2,11,11\n3,12,12\n4,13,13\n");

    const CliRun jobs = run({"sweep", "--mode", "jobs", "--range", "1:3", "--machines", "2",
                             "--format", "csv"});
    REQUIRE(jobs.code == 0);
    CHECK(jobs.out.rfind("jobs,min_ct,max_ct\n", 0) == 0);

    const std::string path = write_file("sweep.csv", "3,1,2\n2,3,1\n");
    const CliRun ps = run({"sweep", "--mode", "ps", "--range", "0.5:1.0:0.25", "--instance", path,
                           "--schedule", "1,2,3", "--format", "csv"});
    REQUIRE(ps.code == 0);
    std::istringstream lines(ps.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "ps,ct");
    std::vector<double> cts;
    for (std::string line; std::getline(lines, line);)
        cts.push_back(std::stod(line.substr(line.find(',') + 1)));
    REQUIRE(cts.size() == 3);
    CHECK(cts[0] == doctest::Approx(2 * cts[2]).epsilon(1e-12));  // halving check

    const CliRun pf = run({"sweep", "--mode", "pf", "--range", "0:0.5:0.5", "--instance", path,
                           "--schedule", "1,2,3", "--format", "csv"});
    REQUIRE(pf.code == 0);
    std::istringstream pf_lines(pf.out);
    std::getline(pf_lines, header);
    CHECK(header == "pf,ct");
    std::string base_row, doubled_row;
    std::getline(pf_lines, base_row);
    std::getline(pf_lines, doubled_row);
    const double base_ct = std::stod(base_row.substr(base_row.find(',') + 1));
    const double doubled_ct = std::stod(doubled_row.substr(doubled_row.find(',') + 1));
    CHECK(doubled_ct == doctest::Approx(2 * base_ct).epsilon(1e-12));

    const CliRun empty = run({"sweep", "--mode", "ps", "--range", "0.9:0.1", "--instance", path});
    CHECK(empty.code == 1);
    CHECK(empty.err.find("empty range") != std::string::npos);

    const CliRun bad_mode = run({"sweep", "--mode", "volume", "--range", "1:2"});
    CHECK(bad_mode.code == 1);
}

TEST_CASE("thread count and alg4 mode flags are plumbed through") {
    const CliRun serial = run({"solve", "--instance", ref3_path(), "--algorithm", "alg1",
                               "--threads", "1", "--format", "json"});
    const CliRun threaded = run({"solve", "--instance", ref3_path(), "--algorithm", "alg1",
                                 "--threads", "3", "--format", "json"});
    REQUIRE(serial.code == 0);
    REQUIRE(threaded.code == 0);
    CHECK(serial.out == threaded.out);

    const CliRun literal = run({"solve", "--instance", ref3_path(), "--algorithm", "alg4",
                                "--mode", "literal", "--format", "json"});
    REQUIRE(literal.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(literal.out);
    CHECK(doc.at("objective") == "first-last-literal");
    CHECK(doc.contains("best_criterion"));
}

TEST_SUITE_END();
