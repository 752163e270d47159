#include "flowshop/rounds.hpp"

#include <stdexcept>

#include "flowshop/evaluator.hpp"

namespace flowshop {

RoundsReport machine_rounds(const FlowshopInstance& instance, const Schedule& schedule) {
    if (instance.has_failures())
        throw std::invalid_argument("rounds with failures is out of scope");

    const std::vector<MachineTimeline> timelines = machine_timelines(instance.timing, schedule);
    const int machines = instance.timing.machines();
    const double completion = timelines.back().total_time;
    const int first_job = schedule.job_at(0);

    RoundsReport report;
    report.machines.reserve(machines);
    double claimed_first_slots = 0.0;  // sum of R_k * T(k, first scheduled job)
    for (int i = 0; i < machines; ++i) {
        const double total = timelines[i].total_time;
        if (!(total > 0.0))
            throw std::invalid_argument("machine " + std::to_string(i + 1) +
                                        " has zero total time; rounds undefined");
        MachineRounds entry;
        entry.machine = i;
        entry.total_time = total;
        if (i == machines - 1) {
            entry.rounds = 1.0;  // the last machine runs exactly one batch
            entry.idle_budget = 0.0;
        } else {
            entry.idle_budget = completion - total - claimed_first_slots;
            entry.rounds = 1.0 + entry.idle_budget / total;
            entry.below_one = entry.rounds < 1.0;
        }
        claimed_first_slots += entry.rounds * instance.timing.at(i, first_job);
        report.machines.push_back(entry);
    }

    for (std::size_t i = 0; i + 1 < report.machines.size(); ++i)
        if (report.machines[i].rounds < report.machines[i + 1].rounds)
            report.monotone_nonincreasing = false;
    return report;
}

}  // namespace flowshop
