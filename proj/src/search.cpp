#include "flowshop/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <thread>

#include "flowshop/evaluator.hpp"

namespace flowshop {

namespace {

std::uint64_t factorial(std::size_t n) {
    if (n > 20) throw cap_exceeded("permutation count exceeds 64-bit range (N > 20)");
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

// Stage sum with machines capped at `top`; top = M-1 gives the full sum.
double stage_sum(const TimingMatrix& timing, std::span<const int> order, int top) {
    const int jobs = timing.jobs();
    double total = 0.0;
    for (int s = 0; s < jobs + top; ++s) {
        const int lo = std::max(0, s - jobs + 1);
        const int hi = std::min(top, s);
        double best = 0.0;
        for (int i = lo; i <= hi; ++i) best = std::max(best, timing.at(i, order[s - i]));
        total += best;
    }
    return total;
}

// Objective evaluator usable concurrently from scan workers.
class Scorer {
public:
    Scorer(const TimingMatrix& timing, Objective objective, double ct_scale)
        : timing_(timing), objective_(objective), ct_scale_(ct_scale) {
        if (objective_ == Objective::WaitDifference || objective_ == Objective::FirstLastLiteral ||
            objective_ == Objective::FirstLastFrobenius) {
            if (timing.machines() < 2)
                throw std::invalid_argument("criterion undefined for a single machine");
        }
        if (objective_ == Objective::WaitDifference) {
            own_diff_ = timing.row_sum(timing.machines() - 1) - timing.row_sum(timing.machines() - 2);
        }
        if (objective_ == Objective::FirstLastLiteral) {
            first_row_sum_ = timing.row_sum(0);
            last_row_sum_ = timing.row_sum(timing.machines() - 1);
        }
    }

    double completion_time(std::span<const int> order) const {
        return stage_sum(timing_, order, timing_.machines() - 1) * ct_scale_;
    }

    // Scores are unscaled so that tie sets are identical for every failure
    // probability; the 1/p_success factor only touches reported values.
    double score(std::span<const int> order) const {
        switch (objective_) {
            case Objective::CompletionTime:
                return stage_sum(timing_, order, timing_.machines() - 1);
            case Objective::WaitDifference:
                // wait(M-1) - wait(M-2) = full stage sum - capped stage sum - own-row gap
                return stage_sum(timing_, order, timing_.machines() - 1) -
                       stage_sum(timing_, order, timing_.machines() - 2) - own_diff_;
            case Objective::FirstLastLiteral:
                return first_row_sum_ -
                       (last_row_sum_ - timing_.at(timing_.machines() - 1, order.back()));
            case Objective::FirstLastFrobenius: {
                // Squared Frobenius gap of the first/last cumulative diagonals;
                // the monotone square root is applied on the reported value.
                double first_prefix = 0.0;
                double last_prefix = 0.0;
                double sum = 0.0;
                const int last = timing_.machines() - 1;
                for (std::size_t k = 0; k < order.size(); ++k) {
                    first_prefix += timing_.at(0, order[k]);
                    const double diff = first_prefix - last_prefix;
                    sum += diff * diff;
                    last_prefix += timing_.at(last, order[k]);
                }
                return sum;
            }
            case Objective::MinMaxGreedy:
                break;
        }
        throw std::invalid_argument("objective is not scannable");
    }

    bool criterion_objective() const { return objective_ != Objective::CompletionTime; }

    double reported_criterion(double raw_score) const {
        return objective_ == Objective::FirstLastFrobenius ? std::sqrt(raw_score) : raw_score;
    }

private:
    const TimingMatrix& timing_;
    Objective objective_;
    double ct_scale_ = 1.0;
    double own_diff_ = 0.0;
    double first_row_sum_ = 0.0;
    double last_row_sum_ = 0.0;
};

struct BlockExtremes {
    double min_score = std::numeric_limits<double>::infinity();
    double max_score = -std::numeric_limits<double>::infinity();
    std::vector<int> min_order;
    std::vector<int> max_order;
};

// Arrangement of `pool` (sorted ascending) at lexicographic rank `rank`.
std::vector<int> nth_permutation(std::vector<int> pool, std::uint64_t rank) {
    std::vector<int> out;
    out.reserve(pool.size());
    while (!pool.empty()) {
        const std::uint64_t block = factorial(pool.size() - 1);
        const std::size_t index = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[index]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
    }
    return out;
}

// Scans `count` consecutive arrangements beginning with the one already in
// `order`. The pool slice advances with next_permutation, so the enumeration
// is lexicographic and the first extreme seen is the lexicographically
// smallest among ties.
BlockExtremes scan_block(const Scorer& scorer, std::vector<int> order, std::size_t pool_offset,
                         std::size_t pool_size, std::uint64_t count) {
    BlockExtremes extremes;
    const auto begin = order.begin() + static_cast<std::ptrdiff_t>(pool_offset);
    const auto end = begin + static_cast<std::ptrdiff_t>(pool_size);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i > 0) std::next_permutation(begin, end);
        const double s = scorer.score(order);
        if (s < extremes.min_score) {
            extremes.min_score = s;
            extremes.min_order = order;
        }
        if (s > extremes.max_score) {
            extremes.max_score = s;
            extremes.max_order = order;
        }
    }
    return extremes;
}

SearchResult finish_result(const Scorer& scorer, Objective objective,
                           const BlockExtremes& extremes, std::uint64_t examined) {
    SearchResult result{objective,
                        Schedule(extremes.min_order),
                        0.0,
                        Schedule(extremes.max_order),
                        0.0,
                        {},
                        {},
                        examined};
    result.best_value = scorer.completion_time(extremes.min_order);
    result.worst_value = scorer.completion_time(extremes.max_order);
    if (scorer.criterion_objective()) {
        result.best_criterion = scorer.reported_criterion(extremes.min_score);
        result.worst_criterion = scorer.reported_criterion(extremes.max_score);
    }
    return result;
}

std::vector<int> interior_jobs(int jobs, int first, int last) {
    std::vector<int> pool;
    pool.reserve(jobs - 2);
    for (int j = 0; j < jobs; ++j)
        if (j != first && j != last) pool.push_back(j);
    return pool;
}

}  // namespace

std::string_view objective_label(Objective objective) {
    switch (objective) {
        case Objective::CompletionTime: return "completion-time";
        case Objective::WaitDifference: return "wait-difference";
        case Objective::FirstLastLiteral: return "first-last-literal";
        case Objective::FirstLastFrobenius: return "first-last-frobenius";
        case Objective::MinMaxGreedy: return "min-max-greedy";
    }
    return "unknown";
}

Objective objective_from_label(std::string_view label) {
    if (label == "completion-time") return Objective::CompletionTime;
    if (label == "wait-difference") return Objective::WaitDifference;
    if (label == "first-last-literal") return Objective::FirstLastLiteral;
    if (label == "first-last-frobenius") return Objective::FirstLastFrobenius;
    if (label == "min-max-greedy") return Objective::MinMaxGreedy;
    throw std::invalid_argument("unknown objective label: " + std::string(label));
}

int select_first_job(const TimingMatrix& timing) {
    int best = 0;
    for (int j = 1; j < timing.jobs(); ++j)
        if (timing.at(0, j) < timing.at(0, best)) best = j;
    return best;
}

int select_last_job(const TimingMatrix& timing) {
    if (timing.jobs() < 2) throw std::invalid_argument("cannot fix both endpoints");
    const int first = select_first_job(timing);
    const int last_machine = timing.machines() - 1;
    int best = -1;
    for (int j = 0; j < timing.jobs(); ++j) {
        if (j == first) continue;
        if (best < 0 || timing.at(last_machine, j) < timing.at(last_machine, best)) best = j;
    }
    return best;
}

SearchResult exhaustive_scan(const FlowshopInstance& instance, Objective objective,
                             const std::vector<int>& prefix, std::vector<int> pool,
                             const std::vector<int>& suffix, const SearchLimits& limits) {
    const Scorer scorer(instance.timing, objective,
                        instance.failure ? 1.0 / instance.failure->p_success : 1.0);
    std::sort(pool.begin(), pool.end());
    const std::uint64_t total = factorial(pool.size());

    std::vector<int> base;
    base.reserve(prefix.size() + pool.size() + suffix.size());
    base.insert(base.end(), prefix.begin(), prefix.end());
    base.insert(base.end(), pool.begin(), pool.end());
    base.insert(base.end(), suffix.begin(), suffix.end());

    int threads = limits.threads > 0 ? limits.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    const std::uint64_t block_count =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), std::max<std::uint64_t>(total, 1));

    std::vector<BlockExtremes> blocks(block_count);
    if (block_count <= 1 || total < 4096) {
        blocks[0] = scan_block(scorer, base, prefix.size(), pool.size(), total);
    } else {
        // Contiguous lexicographic rank ranges per worker; merging in block
        // order keeps ties resolved toward the lexicographically smallest.
        std::vector<std::thread> workers;
        workers.reserve(block_count);
        for (std::uint64_t b = 0; b < block_count; ++b) {
            const std::uint64_t begin = total / block_count * b + std::min(b, total % block_count);
            const std::uint64_t end =
                total / block_count * (b + 1) + std::min(b + 1, total % block_count);
            workers.emplace_back([&, b, begin, end] {
                std::vector<int> order = base;
                const std::vector<int> arrangement = nth_permutation(pool, begin);
                std::copy(arrangement.begin(), arrangement.end(),
                          order.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
                blocks[b] = scan_block(scorer, std::move(order), prefix.size(), pool.size(),
                                       end - begin);
            });
        }
        for (auto& w : workers) w.join();
    }

    BlockExtremes merged = blocks.front();
    for (std::size_t b = 1; b < blocks.size(); ++b) {
        if (blocks[b].min_score < merged.min_score) {
            merged.min_score = blocks[b].min_score;
            merged.min_order = blocks[b].min_order;
        }
        if (blocks[b].max_score > merged.max_score) {
            merged.max_score = blocks[b].max_score;
            merged.max_order = blocks[b].max_order;
        }
    }
    return finish_result(scorer, objective, merged, total);
}

SearchResult brute_force(const FlowshopInstance& instance, Objective objective,
                         const SearchLimits& limits) {
    if (objective == Objective::MinMaxGreedy)
        throw std::invalid_argument("min-max-greedy is a construction, not a scan objective");
    const int jobs = instance.timing.jobs();
    if (jobs > limits.full_cap && !limits.override_caps)
        throw cap_exceeded("N=" + std::to_string(jobs) + " exceeds the exhaustive cap of " +
                           std::to_string(limits.full_cap) +
                           " (override the cap, or use the greedy algorithm)");
    std::vector<int> pool(jobs);
    std::iota(pool.begin(), pool.end(), 0);
    return exhaustive_scan(instance, objective, {}, std::move(pool), {}, limits);
}

SearchResult algorithm1(const FlowshopInstance& instance, const SearchLimits& limits) {
    const int jobs = instance.timing.jobs();
    const int first = select_first_job(instance.timing);
    const int last = select_last_job(instance.timing);
    if (jobs - 2 > limits.interior_cap && !limits.override_caps)
        throw cap_exceeded("interior size " + std::to_string(jobs - 2) +
                           " exceeds the scan cap of " + std::to_string(limits.interior_cap) +
                           " (override the cap, or use the greedy algorithm)");
    return exhaustive_scan(instance, Objective::CompletionTime, {first},
                           interior_jobs(jobs, first, last), {last}, limits);
}

SearchResult algorithm2(const FlowshopInstance& instance) {
    const TimingMatrix& timing = instance.timing;
    const int jobs = timing.jobs();
    const int machines = timing.machines();
    const int first = select_first_job(timing);
    const int last = select_last_job(timing);

    std::vector<int> order{first};
    std::vector<bool> used(jobs, false);
    used[first] = true;
    used[last] = true;
    for (int position = 1; position < jobs - 1; ++position) {
        int pick = -1;
        double pick_score = std::numeric_limits<double>::infinity();
        for (int candidate = 0; candidate < jobs; ++candidate) {
            if (used[candidate]) continue;
            // Partial anti-diagonal through this slot: the candidate on the
            // first machine against the already placed jobs moving down.
            double score = timing.at(0, candidate);
            for (int depth = 1; depth <= std::min(position, machines - 1); ++depth)
                score = std::max(score, timing.at(depth, order[position - depth]));
            if (score < pick_score) {
                pick_score = score;
                pick = candidate;
            }
        }
        order.push_back(pick);
        used[pick] = true;
    }
    order.push_back(last);

    const Scorer scorer(timing, Objective::CompletionTime,
                        instance.failure ? 1.0 / instance.failure->p_success : 1.0);
    const double value = scorer.completion_time(order);
    Schedule schedule(order);
    return SearchResult{Objective::MinMaxGreedy, schedule, value, schedule, value, {}, {}, 1};
}

SearchResult algorithm3(const FlowshopInstance& instance, const SearchLimits& limits) {
    if (instance.timing.machines() < 2)
        throw std::invalid_argument("wait-difference criterion undefined for a single machine");
    const int jobs = instance.timing.jobs();
    const int first = select_first_job(instance.timing);
    const int last = select_last_job(instance.timing);
    if (jobs - 2 > limits.interior_cap && !limits.override_caps)
        throw cap_exceeded("interior size " + std::to_string(jobs - 2) +
                           " exceeds the scan cap of " + std::to_string(limits.interior_cap));
    return exhaustive_scan(instance, Objective::WaitDifference, {first},
                           interior_jobs(jobs, first, last), {last}, limits);
}

SearchResult algorithm4(const FlowshopInstance& instance, Alg4Mode mode,
                        const SearchLimits& limits) {
    if (instance.timing.machines() < 2)
        throw std::invalid_argument("first-last criterion undefined for a single machine");
    const int jobs = instance.timing.jobs();
    const int first = select_first_job(instance.timing);
    const int last = select_last_job(instance.timing);
    if (jobs - 2 > limits.interior_cap && !limits.override_caps)
        throw cap_exceeded("interior size " + std::to_string(jobs - 2) +
                           " exceeds the scan cap of " + std::to_string(limits.interior_cap));
    const Objective objective = mode == Alg4Mode::Literal ? Objective::FirstLastLiteral
                                                          : Objective::FirstLastFrobenius;
    return exhaustive_scan(instance, objective, {first}, interior_jobs(jobs, first, last), {last},
                           limits);
}

DiagonalCumulative cumulative_diagonal(const TimingMatrix& timing, const Schedule& schedule,
                                       int machine, int shift) {
    if (machine < 0 || machine >= timing.machines())
        throw std::invalid_argument("machine index out of range");
    if (shift != 0 && shift != 1) throw std::invalid_argument("shift must be 0 or 1");
    if (schedule.size() != timing.jobs())
        throw std::invalid_argument("schedule length does not match job count");
    DiagonalCumulative out{machine, shift, {}};
    out.diagonal.reserve(timing.jobs());
    double prefix = 0.0;
    for (int k = 0; k < timing.jobs(); ++k) {
        if (shift == 1) {
            out.diagonal.push_back(prefix);
            prefix += timing.at(machine, schedule.job_at(k));
        } else {
            prefix += timing.at(machine, schedule.job_at(k));
            out.diagonal.push_back(prefix);
        }
    }
    return out;
}

double frobenius_gap(const DiagonalCumulative& a, const DiagonalCumulative& b) {
    if (a.diagonal.size() != b.diagonal.size())
        throw std::invalid_argument("size mismatch between cumulative diagonals");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.diagonal.size(); ++k) {
        const double diff = a.diagonal[k] - b.diagonal[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace flowshop
