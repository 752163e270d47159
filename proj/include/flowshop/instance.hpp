#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flowshop {

/// Joint processing+setup durations T(i,j): row = machine, column = job in
/// input order. Indices are 0-based in code; user-facing I/O is 1-based.
class TimingMatrix {
public:
    TimingMatrix(int machines, int jobs, std::vector<double> row_major);

    int machines() const noexcept { return machines_; }
    int jobs() const noexcept { return jobs_; }

    double at(int machine, int job) const;
    const std::vector<double>& raw() const noexcept { return entries_; }

    std::vector<double> row(int machine) const;
    double row_sum(int machine) const;

    friend bool operator==(const TimingMatrix&, const TimingMatrix&) = default;

private:
    int machines_ = 0;
    int jobs_ = 0;
    std::vector<double> entries_;  // row-major, machines_ x jobs_
};

/// A processing order: position -> job index, a permutation of 0..N-1.
class Schedule {
public:
    explicit Schedule(std::vector<int> order);

    static Schedule identity(int jobs);
    static Schedule from_one_based(const std::vector<int>& order);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    int job_at(int position) const;
    const std::vector<int>& order() const noexcept { return order_; }
    std::vector<int> to_one_based() const;
    Schedule inverse() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    std::vector<int> order_;
};

/// Per-job delivery failure model: a job repeats until it succeeds, each
/// attempt succeeding independently with probability p_success.
struct FailureModel {
    double p_success = 1.0;

    explicit FailureModel(double ps);
    double p_failure() const noexcept { return 1.0 - p_success; }

    friend bool operator==(const FailureModel&, const FailureModel&) = default;
};

struct FlowshopInstance {
    TimingMatrix timing;
    std::optional<FailureModel> failure;  // absent => no-failure regime

    double p_success() const noexcept { return failure ? failure->p_success : 1.0; }
    bool has_failures() const noexcept { return failure && failure->p_success < 1.0; }
};

/// The shifted M x (M+N-1) layout: row i carries the first-job durations of
/// machines 0..i-1, then its own row, padded with zeros on the right.
class StaircaseMatrix {
public:
    StaircaseMatrix(int machines, std::vector<double> row_major);

    int machines() const noexcept { return machines_; }
    int columns() const noexcept { return columns_; }
    double at(int row, int col) const;

private:
    int machines_ = 0;
    int columns_ = 0;
    std::vector<double> entries_;
};

/// Column k of the result is column order[k] of the input.
TimingMatrix apply_schedule(const TimingMatrix& timing, const Schedule& schedule);

StaircaseMatrix staircase_layout(const TimingMatrix& timing);

/// Parses either the CSV form (one machine per line, optional
/// `# machines=M jobs=N ps=P` header) or the JSON object form.
FlowshopInstance parse_instance(std::string_view text);
FlowshopInstance load_instance(const std::string& path);

/// Serializes to the JSON object form (the default on-disk representation).
std::string serialize_instance(const FlowshopInstance& instance);

}  // namespace flowshop
