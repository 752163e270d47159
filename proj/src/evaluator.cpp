#include "flowshop/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace flowshop {

namespace {

void check_pair(const TimingMatrix& timing, const Schedule& schedule) {
    if (schedule.size() != timing.jobs())
        throw std::invalid_argument("schedule length does not match job count");
}

// Max over the stage anti-diagonal, machines capped at `top` (inclusive).
double stage_max(const TimingMatrix& timing, std::span<const int> order, int stage, int top) {
    const int jobs = timing.jobs();
    const int lo = std::max(0, stage - jobs + 1);
    const int hi = std::min(top, stage);
    double best = 0.0;
    for (int i = lo; i <= hi; ++i) best = std::max(best, timing.at(i, order[stage - i]));
    return best;
}

}  // namespace

double StageTimes::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<std::pair<int, int>> stage_members(int machines, int jobs, int stage) {
    if (machines < 1 || jobs < 1) throw std::invalid_argument("empty instance");
    if (stage < 0 || stage > machines + jobs - 2) throw std::out_of_range("stage index out of range");
    std::vector<std::pair<int, int>> members;
    for (int i = std::max(0, stage - jobs + 1); i <= std::min(machines - 1, stage); ++i)
        members.emplace_back(i, stage - i);
    return members;
}

StageTimes stage_times(const TimingMatrix& timing, const Schedule& schedule) {
    check_pair(timing, schedule);
    const int machines = timing.machines();
    const int jobs = timing.jobs();
    StageTimes result{machines, jobs, {}};
    result.values.reserve(machines + jobs - 1);
    for (int s = 0; s < machines + jobs - 1; ++s)
        result.values.push_back(stage_max(timing, schedule.order(), s, machines - 1));
    return result;
}

double ct_no_fail(const TimingMatrix& timing, const Schedule& schedule) {
    check_pair(timing, schedule);
    const int machines = timing.machines();
    double total = 0.0;
    for (int s = 0; s < machines + timing.jobs() - 1; ++s)
        total += stage_max(timing, schedule.order(), s, machines - 1);
    return total;
}

double ct_with_fail(const TimingMatrix& timing, const Schedule& schedule,
                    const FailureModel& failure) {
    return ct_no_fail(timing, schedule) / failure.p_success;
}

double WeightSeries::for_stage(int stage) const {
    const int count = static_cast<int>(descending.size());
    if (stage < 0 || stage >= count) throw std::out_of_range("stage index out of range");
    return descending[count - 1 - stage];
}

WeightSeries weight_series(int machines, int jobs, const FailureModel& failure) {
    if (machines < 1 || jobs < 1) throw std::invalid_argument("empty instance");
    if (failure.p_success >= 1.0)
        throw std::invalid_argument("weights undefined at p_s=1");
    const double ps = failure.p_success;
    const double pf = failure.p_failure();
    WeightSeries series{machines, jobs, {}};
    series.descending.reserve(machines + jobs - 1);
    for (int s = machines + jobs - 2; s >= 0; --s)
        series.descending.push_back(std::pow(ps, s) / std::pow(pf, s + 1));
    return series;
}

double weighted_ct(const TimingMatrix& timing, const Schedule& schedule,
                   const FailureModel& failure) {
    const StageTimes stages = stage_times(timing, schedule);
    const WeightSeries weights = weight_series(timing.machines(), timing.jobs(), failure);
    double total = 0.0;
    for (int s = 0; s < stages.count(); ++s) total += weights.for_stage(s) * stages.values[s];
    return total;
}

std::vector<MachineTimeline> machine_timelines(const TimingMatrix& timing,
                                               const Schedule& schedule) {
    check_pair(timing, schedule);
    const int machines = timing.machines();
    const int jobs = timing.jobs();
    std::vector<MachineTimeline> timelines;
    timelines.reserve(machines);
    for (int i = 0; i < machines; ++i) {
        MachineTimeline tl;
        tl.machine = i;
        tl.per_stage.reserve(jobs + i);
        for (int s = 0; s < jobs + i; ++s) {
            const double value = stage_max(timing, schedule.order(), s, i);
            StageSlot slot;
            if (s >= i) {  // machine i runs position s - i at this stage
                slot.processing = timing.at(i, schedule.job_at(s - i));
                slot.wait = value - slot.processing;
            } else {  // still waiting on the predecessors' first jobs
                slot.wait = value;
            }
            tl.total_time += value;
            tl.total_wait += slot.wait;
            tl.per_stage.push_back(slot);
        }
        timelines.push_back(std::move(tl));
    }
    return timelines;
}

std::vector<double> waiting_diffs(const std::vector<MachineTimeline>& timelines) {
    if (timelines.empty()) throw std::invalid_argument("no timelines");
    std::vector<double> diffs;
    diffs.reserve(timelines.size() - 1);
    for (std::size_t i = 0; i + 1 < timelines.size(); ++i)
        diffs.push_back(timelines[i + 1].total_wait - timelines[i].total_wait);
    return diffs;
}

double ct_split_special(const TimingMatrix& timing, const Schedule& schedule) {
    check_pair(timing, schedule);
    const int machines = timing.machines();
    const int jobs = timing.jobs();
    for (int j = 0; j < jobs; ++j) {
        const int job = schedule.job_at(j);
        for (int i = 1; i < machines; ++i)
            if (!(timing.at(i, job) > timing.at(i - 1, job)))
                throw std::invalid_argument("monotone-columns condition not met");
    }
    // The split is exact only when the first M-1 stages are dominated by the
    // first-job column; monotone columns alone do not force that, so refuse
    // rather than return a sum that breaks the stage-sum identity.
    for (int s = 0; s + 1 < machines; ++s)
        if (stage_max(timing, schedule.order(), s, machines - 1) != timing.at(s, schedule.job_at(0)))
            throw std::invalid_argument(
                "monotone-columns condition not met: early stages are not first-job dominated");

    // Accumulated in stage order so the result matches ct_no_fail bit for bit.
    double total = 0.0;
    for (int i = 0; i < machines - 1; ++i) total += timing.at(i, schedule.job_at(0));
    for (int s = machines - 1; s <= machines + jobs - 3; ++s)
        total += stage_max(timing, schedule.order(), s, machines - 1);
    total += timing.at(machines - 1, schedule.job_at(jobs - 1));
    return total;
}

ScheduleEvaluation evaluate_schedule(const FlowshopInstance& instance, const Schedule& schedule) {
    ScheduleEvaluation eval{schedule, stage_times(instance.timing, schedule), 0.0, {}, {}, {}};
    eval.ct_no_fail = eval.stages.sum();
    eval.timelines = machine_timelines(instance.timing, schedule);
    if (instance.failure) {
        eval.ct_with_fail = eval.ct_no_fail / instance.failure->p_success;
        if (instance.failure->p_success < 1.0)
            eval.weighted = weighted_ct(instance.timing, schedule, *instance.failure);
    }
    return eval;
}

}  // namespace flowshop
