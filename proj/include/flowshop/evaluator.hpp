#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flowshop/instance.hpp"

namespace flowshop {

// The completion-time model sums per-stage maxima. Stage s (0-based,
// s = 0..M+N-2) is the anti-diagonal of the scheduled matrix: the set of
// (machine, position) pairs with machine + position == s, i.e. the jobs
// running in parallel while the line is s steps into the flow. The stage
// duration is the maximum entry of that set.

/// Per-stage maxima for the full machine set.
struct StageTimes {
    int machines = 0;
    int jobs = 0;
    std::vector<double> values;  // length machines + jobs - 1

    int count() const noexcept { return static_cast<int>(values.size()); }
    double sum() const;
};

/// Active (machine, position) pairs of a stage, all 0-based.
std::vector<std::pair<int, int>> stage_members(int machines, int jobs, int stage);

StageTimes stage_times(const TimingMatrix& timing, const Schedule& schedule);

/// Sum of the stage maxima.
double ct_no_fail(const TimingMatrix& timing, const Schedule& schedule);

/// Expected completion time when every stage repeats until success:
/// ct_no_fail / p_success.
double ct_with_fail(const TimingMatrix& timing, const Schedule& schedule,
                    const FailureModel& failure);

/// Stage weights p^s / (1-p)^(s+1) induced by the failure probabilities,
/// listed highest-weight (last stage) first.
struct WeightSeries {
    int machines = 0;
    int jobs = 0;
    std::vector<double> descending;

    double for_stage(int stage) const;  // 0-based stage index
};

WeightSeries weight_series(int machines, int jobs, const FailureModel& failure);

/// Weighted stage sum; coincides with ct_with_fail when p_success = 0.5.
double weighted_ct(const TimingMatrix& timing, const Schedule& schedule,
                   const FailureModel& failure);

struct StageSlot {
    double processing = 0.0;
    double wait = 0.0;
};

/// Processing-plus-waiting account of one machine: its stage span covers
/// stages 0..jobs+machine-1, with stage maxima restricted to machines
/// 0..machine.
struct MachineTimeline {
    int machine = 0;
    double total_time = 0.0;
    double total_wait = 0.0;
    std::vector<StageSlot> per_stage;
};

std::vector<MachineTimeline> machine_timelines(const TimingMatrix& timing,
                                               const Schedule& schedule);

/// Consecutive-machine wait gaps: entry i = total_wait(i+1) - total_wait(i).
/// Empty for a single machine.
std::vector<double> waiting_diffs(const std::vector<MachineTimeline>& timelines);

/// Split form of the stage sum: last-machine last job, the first-job column
/// of machines 0..M-2, and the stage maxima through the last machine.
/// Requires strictly increasing columns (T(i,j) > T(i-1,j) down every
/// scheduled column); refuses otherwise.
double ct_split_special(const TimingMatrix& timing, const Schedule& schedule);

struct ScheduleEvaluation {
    Schedule schedule;
    StageTimes stages;
    double ct_no_fail = 0.0;
    std::optional<double> ct_with_fail;  // present when a failure model is set
    std::optional<double> weighted;      // present when 0 < p_success < 1
    std::vector<MachineTimeline> timelines;
};

ScheduleEvaluation evaluate_schedule(const FlowshopInstance& instance, const Schedule& schedule);

}  // namespace flowshop
