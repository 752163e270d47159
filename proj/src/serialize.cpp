#include "flowshop/serialize.hpp"

namespace flowshop {

nlohmann::json to_json(const ScheduleEvaluation& evaluation) {
    nlohmann::json doc;
    doc["schedule"] = evaluation.schedule.to_one_based();
    doc["stages"] = evaluation.stages.values;
    doc["ct_no_fail"] = evaluation.ct_no_fail;
    if (evaluation.ct_with_fail) doc["ct_with_fail"] = *evaluation.ct_with_fail;
    if (evaluation.weighted) doc["weighted_ct"] = *evaluation.weighted;
    std::vector<double> totals;
    std::vector<double> waits;
    totals.reserve(evaluation.timelines.size());
    waits.reserve(evaluation.timelines.size());
    for (const auto& tl : evaluation.timelines) {
        totals.push_back(tl.total_time);
        waits.push_back(tl.total_wait);
    }
    doc["machine_totals"] = std::move(totals);
    doc["machine_waits"] = std::move(waits);
    return doc;
}

nlohmann::json to_json(const SearchResult& result) {
    nlohmann::json doc;
    doc["objective"] = objective_label(result.objective);
    doc["best_schedule"] = result.best_schedule.to_one_based();
    doc["best_value"] = result.best_value;
    doc["worst_schedule"] = result.worst_schedule.to_one_based();
    doc["worst_value"] = result.worst_value;
    if (result.best_criterion) doc["best_criterion"] = *result.best_criterion;
    if (result.worst_criterion) doc["worst_criterion"] = *result.worst_criterion;
    doc["permutations_examined"] = result.permutations_examined;
    return doc;
}

nlohmann::json to_json(const SimStats& stats) {
    return nlohmann::json{{"trials", stats.trials},
                          {"mean", stats.mean_ct},
                          {"variance", stats.variance},
                          {"standard_error", stats.standard_error},
                          {"seed", stats.seed}};
}

nlohmann::json to_json(const RoundsReport& report) {
    nlohmann::json machines = nlohmann::json::array();
    for (const auto& entry : report.machines) {
        machines.push_back({{"machine", entry.machine + 1},
                            {"total_time", entry.total_time},
                            {"idle_budget", entry.idle_budget},
                            {"rounds", entry.rounds},
                            {"below_one", entry.below_one}});
    }
    return nlohmann::json{{"machines", std::move(machines)},
                          {"monotone_nonincreasing", report.monotone_nonincreasing}};
}

nlohmann::json to_json(const WeightSeries& series) {
    return nlohmann::json{{"machines", series.machines},
                          {"jobs", series.jobs},
                          {"descending", series.descending}};
}

}  // namespace flowshop
