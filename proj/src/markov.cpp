#include "flowshop/markov.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace flowshop {

namespace {

constexpr double kRowSumTolerance = 1e-12;

ChainMatrix birth_chain(int states, const FailureModel& failure) {
    const int n = states + 1;  // transient states plus END
    std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < states; ++k) {
        entries[static_cast<std::size_t>(k) * n + k] = failure.p_failure();
        entries[static_cast<std::size_t>(k) * n + k + 1] = failure.p_success;
    }
    entries[static_cast<std::size_t>(n - 1) * n + n - 1] = 1.0;
    return ChainMatrix(n, std::move(entries));
}

}  // namespace

ChainMatrix::ChainMatrix(int size, std::vector<double> row_major)
    : size_(size), entries_(std::move(row_major)) {
    if (size_ < 2) throw std::invalid_argument("chain needs at least one transient state");
    if (entries_.size() != static_cast<std::size_t>(size_) * size_)
        throw std::invalid_argument("chain entry count does not match size");
    for (int r = 0; r < size_; ++r) {
        double sum = 0.0;
        for (int c = 0; c < size_; ++c) {
            const double p = entries_[static_cast<std::size_t>(r) * size_ + c];
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("transition probability outside [0,1]");
            sum += p;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance)
            throw std::invalid_argument("chain row does not sum to 1");
    }
}

double ChainMatrix::at(int row, int col) const {
    if (row < 0 || row >= size_ || col < 0 || col >= size_)
        throw std::out_of_range("chain index out of range");
    return entries_[static_cast<std::size_t>(row) * size_ + col];
}

ChainMatrix build_chain(int machines, int jobs, const FailureModel& failure) {
    if (machines < 1 || jobs < 1) throw std::invalid_argument("empty instance");
    return birth_chain(machines + jobs - 1, failure);
}

ChainMatrix build_machine_chain(int jobs, const FailureModel& failure) {
    if (jobs < 1) throw std::invalid_argument("empty instance");
    return birth_chain(jobs, failure);
}

std::vector<double> expected_stage_visits(const ChainMatrix& chain) {
    const int transient = chain.size() - 1;
    if (chain.at(transient, transient) != 1.0)
        throw std::invalid_argument("last chain state is not absorbing");

    // Solve (I - Q)^T x = e_0; x is then the first row of the fundamental
    // matrix, i.e. the expected visit counts starting from state 0.
    const int n = transient;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[static_cast<std::size_t>(r) * n + c] = (r == c ? 1.0 : 0.0) - chain.at(c, r);
    std::vector<double> x(n, 0.0);
    x[0] = 1.0;

    // Gaussian elimination with partial pivoting.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[static_cast<std::size_t>(perm[r]) * n + col]) >
                std::abs(a[static_cast<std::size_t>(perm[pivot]) * n + col]))
                pivot = r;
        std::swap(perm[col], perm[pivot]);
        const double diag = a[static_cast<std::size_t>(perm[col]) * n + col];
        if (std::abs(diag) < 1e-300) throw std::runtime_error("singular transient block");
        for (int r = col + 1; r < n; ++r) {
            const double factor = a[static_cast<std::size_t>(perm[r]) * n + col] / diag;
            if (factor == 0.0) continue;
            for (int c = col; c < n; ++c)
                a[static_cast<std::size_t>(perm[r]) * n + c] -=
                    factor * a[static_cast<std::size_t>(perm[col]) * n + c];
            x[perm[r]] -= factor * x[perm[col]];
        }
    }
    std::vector<double> solution(n, 0.0);
    for (int row = n - 1; row >= 0; --row) {
        double value = x[perm[row]];
        for (int c = row + 1; c < n; ++c)
            value -= a[static_cast<std::size_t>(perm[row]) * n + c] * solution[c];
        solution[row] = value / a[static_cast<std::size_t>(perm[row]) * n + row];
    }
    return solution;
}

double analytic_ct(const TimingMatrix& timing, const Schedule& schedule,
                   const FailureModel& failure) {
    const StageTimes stages = stage_times(timing, schedule);
    const std::vector<double> visits =
        expected_stage_visits(build_chain(timing.machines(), timing.jobs(), failure));
    double total = 0.0;
    for (int s = 0; s < stages.count(); ++s) total += stages.values[s] * visits[s];
    return total;
}

SimStats simulate_ct(const TimingMatrix& timing, const Schedule& schedule,
                     const FailureModel& failure, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    const StageTimes stages = stage_times(timing, schedule);
    const double ps = failure.p_success;
    const double log_fail = ps < 1.0 ? std::log1p(-ps) : 0.0;

    std::mt19937_64 rng(seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t t = 1; t <= trials; ++t) {
        double total = 0.0;
        for (double stage : stages.values) {
            double attempts = 1.0;
            if (ps < 1.0) {
                // Inversion sampling of the geometric attempt count:
                // ceil(ln u / ln(1 - ps)) with u uniform on (0, 1].
                const double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
                attempts = std::max(1.0, std::ceil(std::log(u) / log_fail));
            }
            total += attempts * stage;
        }
        const double delta = total - mean;
        mean += delta / static_cast<double>(t);
        m2 += delta * (total - mean);
    }

    SimStats stats;
    stats.trials = trials;
    stats.seed = seed;
    stats.mean_ct = mean;
    stats.variance = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
    stats.standard_error = std::sqrt(stats.variance / static_cast<double>(trials));
    return stats;
}

}  // namespace flowshop
