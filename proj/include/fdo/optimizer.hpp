#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fdo/problem.hpp"
#include "fdo/rng.hpp"

namespace fdo {

enum class Variant { fdo, mifdo };

std::string to_string(Variant v);
std::optional<Variant> variant_from_string(const std::string& name);

/// One scout bee: a candidate solution with cached fitness, the pace of its
/// last accepted move, and its personal weight factor wf in [0, 1].
struct Agent {
    std::vector<double> position;
    double fitness = 0.0;
    std::optional<std::vector<double>> saved_pace;
    double wf = 0.0;
};

struct BestRecord {
    std::vector<double> position;
    double fitness = 0.0;
};

struct SwarmState {
    std::vector<Agent> agents;
    std::size_t iter_best = 0;       // index of the best agent of the current iteration
    BestRecord best_ever;
    std::size_t t = 0;               // iteration counter
    std::uint64_t eval_count = 0;
    std::uint64_t non_finite_evals = 0;
};

/// Inputs of one agent-step: fitness weight, step scalar, Lambda and the
/// agent's weight factor.
struct StepContext {
    double fw = 0.0;      // in [0, 1]
    double r = 0.0;       // in [-1, 1]
    double lambda = 0.0;  // 0 for plain FDO
    double wf = 0.0;
};

struct OptimizerConfig {
    Variant variant = Variant::mifdo;
    int population = 30;
    int max_iterations = 500;
    double lambda = 0.1;
    std::pair<double, double> wf_init_range{0.0, 1.0};
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

struct ConvergenceCriteria {
    double epsilon = 1e-12;
    std::optional<double> f_optimal;
};

struct ConvergenceTrace {
    std::vector<double> best_per_iter;             // non-increasing
    std::vector<double> per_iter_delta;            // |best[t] - best[t-1]|, 0 at t=0
    std::vector<double> diversity_per_iter;        // mean distance to centroid
    std::vector<double> exploration_pct_per_iter;  // in [0, 100]
};

enum class StopReason { iteration_limit, target_reached };

struct RunResult {
    BestRecord best;
    ConvergenceTrace trace;
    std::uint64_t eval_count = 0;
    std::uint64_t non_finite_evals = 0;
    double wall_seconds = 0.0;
    int iterations_run = 0;
    double initial_best = 0.0;  // best fitness of the freshly initialized swarm
    StopReason stop_reason = StopReason::iteration_limit;
};

/// Which row of the pace table fired; exposed so independent oracles can
/// check branch selection, not just arithmetic.
enum class PaceBranch {
    own_position_walk,      // pace = x * r
    best_distance_walk,     // pace = (x* - x) * r   (FDO fw = 0 row only)
    weighted_negative_r,    // 0 < fw < 1, r <  0
    weighted_nonnegative_r  // 0 < fw < 1, r >= 0
};

PaceBranch classify_branch(Variant variant, double fw, double r);

/// Fitness weight per the ratio rule with zero-fitness guard, weight-factor
/// subtraction when the raw ratio exceeds wf, and a final clamp into [0, 1].
double fitness_weight(double best_fitness, double current_fitness, double wf);

/// M-IFDO pace: fw in {0, 1} -> x * r; otherwise +/-(x - x*) * fw with the
/// sign chosen by r.
std::vector<double> pace_mifdo(std::span<const double> x, std::span<const double> best,
                               const StepContext& ctx);

/// FDO pace over distance = x* - x: fw = 1 -> x * r; fw = 0 -> distance * r;
/// otherwise +/-distance * fw with the sign chosen by r.
std::vector<double> pace_fdo(std::span<const double> x, std::span<const double> best,
                             const StepContext& ctx);

/// Candidate position before boundary repair: x + pace + lambda on every
/// coordinate.
std::vector<double> propose_candidate(Variant variant, std::span<const double> x,
                                      std::span<const double> best, const StepContext& ctx);

SwarmState initialize_swarm(const Problem& problem, const OptimizerConfig& config,
                            RandomSource& source);

/// One greedy agent update: move, retry with the saved pace, or stay put.
void step_agent(Agent& agent, SwarmState& swarm, const Problem& problem,
                const OptimizerConfig& config, RandomSource& source);

/// Mean Euclidean distance from agents to the population centroid.
double diversity(const SwarmState& swarm);

/// 100 * diversity[t] / max diversity of the run (0 when the run never
/// spread out).  Exploitation is the complement to 100.
double exploration_pct(const ConvergenceTrace& trace, std::size_t t);

using IterationObserver = std::function<void(const SwarmState&)>;

/// Full optimization run: T iterations of (recompute iteration best, step
/// every agent, record trace), with optional early stop when
/// |f_best - f_optimal| < epsilon.  The observer, when set, fires after
/// every iteration.
RunResult run(const Problem& problem, const OptimizerConfig& config,
              const std::optional<ConvergenceCriteria>& criteria, RandomSource& source,
              const IterationObserver& observer = {});

}  // namespace fdo
