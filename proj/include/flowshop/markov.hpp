#pragma once

#include <cstdint>
#include <vector>

#include "flowshop/evaluator.hpp"
#include "flowshop/instance.hpp"

namespace flowshop {

/// Row-stochastic transition matrix of an absorbing chain whose last state
/// is the absorbing END state.
class ChainMatrix {
public:
    ChainMatrix(int size, std::vector<double> row_major);

    int size() const noexcept { return size_; }
    double at(int row, int col) const;

private:
    int size_ = 0;
    std::vector<double> entries_;
};

/// The stage chain: states 0..M+N-2 stay put with probability p_failure and
/// advance with p_success; state M+N-1 is absorbing.
ChainMatrix build_chain(int machines, int jobs, const FailureModel& failure);

/// The per-machine chain over one machine's N jobs plus its own absorbing
/// state. Provided for inspection; the stage chain drives all computations.
ChainMatrix build_machine_chain(int jobs, const FailureModel& failure);

/// Expected number of steps spent in each transient state when starting in
/// state 0, from the fundamental matrix (I - Q)^-1 of the transient block.
std::vector<double> expected_stage_visits(const ChainMatrix& chain);

/// Stage durations weighted by expected visits; agrees with ct_with_fail.
double analytic_ct(const TimingMatrix& timing, const Schedule& schedule,
                   const FailureModel& failure);

struct SimStats {
    std::uint64_t trials = 0;
    double mean_ct = 0.0;
    double variance = 0.0;
    double standard_error = 0.0;
    std::uint64_t seed = 0;
};

/// Monte Carlo completion time: every stage repeats with a geometric attempt
/// count (success probability p_success). Deterministic for a fixed seed;
/// the generator contract is documented in the README.
SimStats simulate_ct(const TimingMatrix& timing, const Schedule& schedule,
                     const FailureModel& failure, std::uint64_t trials, std::uint64_t seed);

}  // namespace flowshop
