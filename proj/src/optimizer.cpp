#include "fdo/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdo {

std::string to_string(Variant v) {
    return v == Variant::fdo ? "fdo" : "mifdo";
}

std::optional<Variant> variant_from_string(const std::string& name) {
    if (name == "fdo") return Variant::fdo;
    if (name == "mifdo" || name == "m-ifdo") return Variant::mifdo;
    return std::nullopt;
}

void OptimizerConfig::validate() const {
    if (population < 1) throw std::invalid_argument("OptimizerConfig: population must be >= 1");
    if (max_iterations < 1) throw std::invalid_argument("OptimizerConfig: max_iterations must be >= 1");
    if (!std::isfinite(lambda)) throw std::invalid_argument("OptimizerConfig: lambda must be finite");
    if (wf_init_range.first < 0.0 || wf_init_range.second > 1.0 ||
        wf_init_range.first > wf_init_range.second)
        throw std::invalid_argument("OptimizerConfig: wf_init_range must be a subinterval of [0, 1]");
}

double fitness_weight(double best_fitness, double current_fitness, double wf) {
    if (current_fitness == 0.0) return 0.0;  // divide-by-zero guard
    double fw = std::fabs(best_fitness / current_fitness);
    if (fw > wf) fw -= wf;
    return std::clamp(fw, 0.0, 1.0);
}

PaceBranch classify_branch(Variant variant, double fw, double r) {
    if (variant == Variant::mifdo) {
        if (fw == 0.0 || fw == 1.0) return PaceBranch::own_position_walk;
    } else {
        if (fw == 1.0) return PaceBranch::own_position_walk;
        if (fw == 0.0) return PaceBranch::best_distance_walk;
    }
    return r < 0.0 ? PaceBranch::weighted_negative_r : PaceBranch::weighted_nonnegative_r;
}

std::vector<double> pace_mifdo(std::span<const double> x, std::span<const double> best,
                               const StepContext& ctx) {
    std::vector<double> pace(x.size());
    switch (classify_branch(Variant::mifdo, ctx.fw, ctx.r)) {
        case PaceBranch::own_position_walk:
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = x[i] * ctx.r;
            break;
        case PaceBranch::weighted_negative_r:
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = (x[i] - best[i]) * ctx.fw * -1.0;
            break;
        default:  // weighted_nonnegative_r
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = (x[i] - best[i]) * ctx.fw;
            break;
    }
    return pace;
}

std::vector<double> pace_fdo(std::span<const double> x, std::span<const double> best,
                             const StepContext& ctx) {
    std::vector<double> pace(x.size());
    switch (classify_branch(Variant::fdo, ctx.fw, ctx.r)) {
        case PaceBranch::own_position_walk:
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = x[i] * ctx.r;
            break;
        case PaceBranch::best_distance_walk:
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = (best[i] - x[i]) * ctx.r;
            break;
        case PaceBranch::weighted_negative_r:
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = (best[i] - x[i]) * ctx.fw * -1.0;
            break;
        default:  // weighted_nonnegative_r
            for (std::size_t i = 0; i < x.size(); ++i) pace[i] = (best[i] - x[i]) * ctx.fw;
            break;
    }
    return pace;
}

std::vector<double> propose_candidate(Variant variant, std::span<const double> x,
                                      std::span<const double> best, const StepContext& ctx) {
    std::vector<double> pace =
        variant == Variant::mifdo ? pace_mifdo(x, best, ctx) : pace_fdo(x, best, ctx);
    for (std::size_t i = 0; i < pace.size(); ++i) pace[i] += x[i] + ctx.lambda * ctx.r;
    return pace;
}

namespace {

std::size_t best_index(const std::vector<Agent>& agents) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < agents.size(); ++i)
        if (agents[i].fitness < agents[best].fitness) best = i;
    return best;
}

void update_best_ever(SwarmState& swarm) {
    const Agent& b = swarm.agents[swarm.iter_best];
    if (swarm.best_ever.position.empty() || b.fitness < swarm.best_ever.fitness) {
        swarm.best_ever.position = b.position;
        swarm.best_ever.fitness = b.fitness;
    }
}

}  // namespace

SwarmState initialize_swarm(const Problem& problem, const OptimizerConfig& config,
                            RandomSource& source) {
    config.validate();
    SwarmState swarm;
    swarm.agents.resize(static_cast<std::size_t>(config.population));
    const Bounds& b = problem.bounds();
    for (Agent& agent : swarm.agents) {
        agent.position.resize(problem.dim());
        for (std::size_t i = 0; i < problem.dim(); ++i)
            agent.position[i] = source.uniform(b.lo[i], b.hi[i]);
        agent.wf = source.uniform(config.wf_init_range.first, config.wf_init_range.second);
        agent.fitness = problem.fitness(agent.position, &source);
        ++swarm.eval_count;
    }
    swarm.iter_best = best_index(swarm.agents);
    update_best_ever(swarm);
    return swarm;
}

void step_agent(Agent& agent, SwarmState& swarm, const Problem& problem,
                const OptimizerConfig& config, RandomSource& source) {
    const Agent& best = swarm.agents[swarm.iter_best];
    StepContext ctx;
    ctx.r = levy_r(source);
    ctx.fw = fitness_weight(best.fitness, agent.fitness, agent.wf);
    ctx.lambda = config.variant == Variant::mifdo ? config.lambda : 0.0;
    ctx.wf = agent.wf;

    std::vector<double> pace =
        config.variant == Variant::mifdo ? pace_mifdo(agent.position, best.position, ctx)
                                         : pace_fdo(agent.position, best.position, ctx);

    std::vector<double> candidate(agent.position.size());
    for (std::size_t i = 0; i < candidate.size(); ++i)
        candidate[i] = agent.position[i] + pace[i] + ctx.lambda * ctx.r;
    candidate = repair(problem, candidate);

    double f = problem.fitness(candidate, &source);
    ++swarm.eval_count;
    if (!std::isfinite(f)) {
        ++swarm.non_finite_evals;
        f = std::numeric_limits<double>::infinity();
    }

    if (f < agent.fitness) {
        agent.position = std::move(candidate);
        agent.fitness = f;
        agent.saved_pace = std::move(pace);
        agent.wf = source.uniform(0.0, agent.wf);
        return;
    }

    // second attempt with the pace of the last accepted move
    if (!agent.saved_pace) return;
    std::vector<double> retry(agent.position.size());
    for (std::size_t i = 0; i < retry.size(); ++i)
        retry[i] = agent.position[i] + (*agent.saved_pace)[i] + ctx.lambda * ctx.r;
    retry = repair(problem, retry);

    double f2 = problem.fitness(retry, &source);
    ++swarm.eval_count;
    if (!std::isfinite(f2)) {
        ++swarm.non_finite_evals;
        return;
    }
    if (f2 < agent.fitness) {
        agent.position = std::move(retry);
        agent.fitness = f2;
        agent.wf = source.uniform(0.0, agent.wf);
    }
}

double diversity(const SwarmState& swarm) {
    const std::size_t p = swarm.agents.size();
    if (p == 0) return 0.0;
    const std::size_t d = swarm.agents.front().position.size();
    std::vector<double> centroid(d, 0.0);
    for (const Agent& a : swarm.agents)
        for (std::size_t i = 0; i < d; ++i) centroid[i] += a.position[i];
    for (double& c : centroid) c /= static_cast<double>(p);
    double sum = 0.0;
    for (const Agent& a : swarm.agents) {
        double sq = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double delta = a.position[i] - centroid[i];
            sq += delta * delta;
        }
        sum += std::sqrt(sq);
    }
    return sum / static_cast<double>(p);
}

double exploration_pct(const ConvergenceTrace& trace, std::size_t t) {
    if (t >= trace.diversity_per_iter.size())
        throw std::invalid_argument("exploration_pct: iteration index out of range");
    const double max_div =
        *std::max_element(trace.diversity_per_iter.begin(), trace.diversity_per_iter.end());
    if (max_div <= 0.0) return 0.0;
    return 100.0 * trace.diversity_per_iter[t] / max_div;
}

RunResult run(const Problem& problem, const OptimizerConfig& config,
              const std::optional<ConvergenceCriteria>& criteria, RandomSource& source,
              const IterationObserver& observer) {
    const auto start = std::chrono::steady_clock::now();
    SwarmState swarm = initialize_swarm(problem, config, source);

    RunResult result;
    result.initial_best = swarm.best_ever.fitness;
    result.stop_reason = StopReason::iteration_limit;

    for (int iter = 0; iter < config.max_iterations; ++iter) {
        swarm.iter_best = best_index(swarm.agents);
        for (Agent& agent : swarm.agents)
            step_agent(agent, swarm, problem, config, source);
        swarm.t = static_cast<std::size_t>(iter) + 1;

        // post-step bookkeeping; agents never worsen, so the swarm minimum
        // is also the best ever seen
        swarm.iter_best = best_index(swarm.agents);
        update_best_ever(swarm);

        const double best_now = swarm.best_ever.fitness;
        const double prev =
            result.trace.best_per_iter.empty() ? best_now : result.trace.best_per_iter.back();
        result.trace.best_per_iter.push_back(best_now);
        result.trace.per_iter_delta.push_back(
            result.trace.best_per_iter.size() == 1 ? 0.0 : std::fabs(best_now - prev));
        result.trace.diversity_per_iter.push_back(diversity(swarm));

        if (observer) observer(swarm);

        if (criteria && criteria->f_optimal &&
            std::fabs(best_now - *criteria->f_optimal) < criteria->epsilon) {
            result.stop_reason = StopReason::target_reached;
            break;
        }
    }

    result.iterations_run = static_cast<int>(result.trace.best_per_iter.size());
    result.trace.exploration_pct_per_iter.resize(result.trace.best_per_iter.size());
    for (std::size_t t = 0; t < result.trace.exploration_pct_per_iter.size(); ++t)
        result.trace.exploration_pct_per_iter[t] = exploration_pct(result.trace, t);

    result.best = swarm.best_ever;
    result.eval_count = swarm.eval_count;
    result.non_finite_evals = swarm.non_finite_evals;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace fdo
