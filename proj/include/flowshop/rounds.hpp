#pragma once

#include <vector>

#include "flowshop/instance.hpp"

namespace flowshop {

struct MachineRounds {
    int machine = 0;          // 0-based
    double total_time = 0.0;  // processing plus waiting
    double idle_budget = 0.0;
    double rounds = 0.0;
    bool below_one = false;
};

struct RoundsReport {
    std::vector<MachineRounds> machines;
    bool monotone_nonincreasing = true;  // observed ordering, not a guarantee
};

/// Re-usage accounting in the no-failure regime: each machine's idle budget
/// within one completion time, net of the first-job slots claimed by earlier
/// machines' extra rounds. The last machine runs exactly one round by
/// definition; intermediate machines can come out below one and are flagged
/// rather than clamped.
RoundsReport machine_rounds(const FlowshopInstance& instance, const Schedule& schedule);

}  // namespace flowshop
