#pragma once

#include <random>
#include <vector>

#include "flowshop/instance.hpp"

namespace testsupport {

// Reference 10-job / 7-machine benchmark instance. The first three rows form
// the 10/3 case used throughout the golden tests.
inline const std::vector<double> kRefEntries = {
    3,   6,   2,   1,   2, 3, 4, 5, 3, 0.3,  //
    0.8, 4.5, 1,   0.5, 2, 3, 4, 2, 6, 0.1,  //
    1,   2,   3,   4,   7, 2, 4, 5, 8, 1.4,  //
    2,   0.9, 1,   0.5, 7, 4, 3, 5, 7, 1.4,  //
    0.1, 0.9, 5,   0.5, 7, 4, 2, 5, 8, 6,    //
    2,   4,   1.1, 1.5, 7, 8, 3, 5, 7, 1.4,  //
    0.1, 0.9, 5,   0.5, 6, 4, 9, 5, 2, 6,
};

inline flowshop::TimingMatrix ref_timing(int machines) {
    return flowshop::TimingMatrix(
        machines, 10,
        std::vector<double>(kRefEntries.begin(), kRefEntries.begin() + machines * 10));
}

inline flowshop::FlowshopInstance ref_instance(int machines) {
    return flowshop::FlowshopInstance{ref_timing(machines), {}};
}

// Known extremes of the 10/3 case.
inline const std::vector<int> kBestOrder = {10, 4, 5, 9, 7, 2, 8, 3, 6, 1};
inline const std::vector<int> kWorstOrder = {9, 10, 6, 7, 5, 3, 1, 2, 4, 8};
inline constexpr double kBestCt = 40.3;
inline constexpr double kWorstCt = 60.5;

// Platform-independent uniform draw on [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline flowshop::TimingMatrix random_timing(std::mt19937_64& rng, int machines, int jobs,
                                            double lo = 0.1, double hi = 10.0) {
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(machines) * jobs);
    for (int i = 0; i < machines * jobs; ++i) entries.push_back(uniform(rng, lo, hi));
    return flowshop::TimingMatrix(machines, jobs, std::move(entries));
}

inline flowshop::Schedule random_schedule(std::mt19937_64& rng, int jobs) {
    std::vector<int> order(jobs);
    for (int i = 0; i < jobs; ++i) order[i] = i;
    for (int i = jobs - 1; i > 0; --i)
        std::swap(order[i], order[uniform_int(rng, 0, i)]);
    return flowshop::Schedule(std::move(order));
}

}  // namespace testsupport
