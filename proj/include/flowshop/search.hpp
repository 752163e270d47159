#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "flowshop/instance.hpp"

namespace flowshop {

enum class Objective {
    CompletionTime,      // stage sum, scaled by 1/p_success under failures
    WaitDifference,      // total_wait(last machine) - total_wait(one before)
    FirstLastLiteral,    // first-machine row sum minus last-machine sum over N-1 jobs
    FirstLastFrobenius,  // gap between first/last machine cumulative diagonals
    MinMaxGreedy,        // label of the greedy min-max construction
};

std::string_view objective_label(Objective objective);
Objective objective_from_label(std::string_view label);

/// Raised when a scan would exceed the configured factorial caps.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    int full_cap = 10;       // largest N for N! scans
    int interior_cap = 12;   // largest N for (N-2)! scans
    bool override_caps = false;
    int threads = 0;         // 0 = hardware concurrency
};

struct SearchResult {
    Objective objective = Objective::CompletionTime;
    Schedule best_schedule;
    double best_value = 0.0;  // completion time of the winning schedule
    Schedule worst_schedule;
    double worst_value = 0.0;
    std::optional<double> best_criterion;   // set when the objective is a criterion
    std::optional<double> worst_criterion;
    std::uint64_t permutations_examined = 0;
};

/// Job with the smallest first-machine duration; ties pick the lowest index.
int select_first_job(const TimingMatrix& timing);

/// Job with the smallest last-machine duration, skipping the first-job pick;
/// refuses when there is only one job.
int select_last_job(const TimingMatrix& timing);

/// Exact extremes of the objective over all N! schedules. Ties resolve to
/// the lexicographically smallest schedule.
SearchResult brute_force(const FlowshopInstance& instance,
                         Objective objective = Objective::CompletionTime,
                         const SearchLimits& limits = {});

/// Endpoints fixed by the first/last selection rules, exhaustive (N-2)!
/// scan of the interior by completion time.
SearchResult algorithm1(const FlowshopInstance& instance, const SearchLimits& limits = {});

/// Greedy min-max construction: endpoints fixed, then each interior slot
/// takes the job minimizing the partial anti-diagonal maximum.
SearchResult algorithm2(const FlowshopInstance& instance);

/// Endpoints fixed, interior scan minimizing the wait difference between
/// the last two machines.
SearchResult algorithm3(const FlowshopInstance& instance, const SearchLimits& limits = {});

enum class Alg4Mode { Literal, Frobenius };

/// Endpoints fixed, interior scan minimizing the first/last machine gap.
/// The literal difference is constant over interiors once the endpoints are
/// fixed, so Frobenius is the default mode.
SearchResult algorithm4(const FlowshopInstance& instance, Alg4Mode mode = Alg4Mode::Frobenius,
                        const SearchLimits& limits = {});

/// Diagonal matrix of one machine's cumulative scheduled durations; shift 1
/// prepends a zero (the handoff lag to the next machine).
struct DiagonalCumulative {
    int machine = 0;
    int shift = 0;
    std::vector<double> diagonal;
};

DiagonalCumulative cumulative_diagonal(const TimingMatrix& timing, const Schedule& schedule,
                                       int machine, int shift);

/// Frobenius norm of the difference of two cumulative diagonals.
double frobenius_gap(const DiagonalCumulative& a, const DiagonalCumulative& b);

/// Scan core shared by the exhaustive modes: evaluates the objective over
/// every arrangement prefix + perm(pool) + suffix. Exposed so callers can
/// run endpoint-free criterion scans.
SearchResult exhaustive_scan(const FlowshopInstance& instance, Objective objective,
                             const std::vector<int>& prefix, std::vector<int> pool,
                             const std::vector<int>& suffix, const SearchLimits& limits = {});

}  // namespace flowshop
