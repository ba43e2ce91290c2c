#include "fdo/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdo {

Bounds Bounds::cube(std::size_t dim, double lo, double hi) {
    Bounds b;
    b.lo.assign(dim, lo);
    b.hi.assign(dim, hi);
    return b;
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

Problem::Problem(std::string name, Bounds bounds, Objective objective)
    : name_(std::move(name)), bounds_(std::move(bounds)), objective_(std::move(objective)) {
    if (bounds_.dim() == 0) throw std::invalid_argument("Problem: dimension must be positive");
    if (bounds_.lo.size() != bounds_.hi.size())
        throw std::invalid_argument("Problem: bound vectors disagree in length");
    for (std::size_t i = 0; i < bounds_.dim(); ++i) {
        if (!std::isfinite(bounds_.lo[i]) || !std::isfinite(bounds_.hi[i]))
            throw std::invalid_argument("Problem: bounds must be finite");
        if (bounds_.lo[i] > bounds_.hi[i])
            throw std::invalid_argument("Problem: inverted bound interval");
    }
}

Problem& Problem::with_constraints(std::vector<Constraint> cs) {
    constraints_ = std::move(cs);
    return *this;
}
Problem& Problem::with_known_optimum(double value) {
    known_optimum_ = value;
    return *this;
}
Problem& Problem::with_optimum_point(std::vector<double> point) {
    optimum_point_ = std::move(point);
    return *this;
}
Problem& Problem::with_stochastic(bool flag) {
    stochastic_ = flag;
    return *this;
}
Problem& Problem::with_penalty_coeff(double coeff) {
    if (!(coeff > 0)) throw std::invalid_argument("Problem: penalty coefficient must be positive");
    penalty_coeff_ = coeff;
    return *this;
}

double Problem::evaluate(std::span<const double> x, RandomSource* source) const {
    if (x.size() != dim())
        throw std::invalid_argument("evaluate: dimension mismatch for problem " + name_);
    return objective_(x, source);
}

double Problem::fitness(std::span<const double> x, RandomSource* source) const {
    return penalized_fitness(*this, x, penalty_coeff_, source);
}

double penalized_fitness(const Problem& problem, std::span<const double> x,
                         double penalty_coeff, RandomSource* source) {
    double value = problem.evaluate(x, source);
    if (problem.constraints().empty()) return value;
    double total = 0.0;
    for (const auto& g : problem.constraints()) total += std::max(0.0, g(x));
    return value + penalty_coeff * total;
}

ConstraintReport check_constraints(const Problem& problem, std::span<const double> x) {
    ConstraintReport report;
    report.violations.reserve(problem.constraints().size());
    for (const auto& g : problem.constraints()) {
        const double v = std::max(0.0, g(x));
        report.violations.push_back(v);
        report.total += v;
    }
    report.feasible = report.total == 0.0;
    return report;
}

std::vector<double> repair(const Problem& problem, std::span<const double> x) {
    if (x.size() != problem.dim()) throw std::invalid_argument("repair: dimension mismatch");
    const Bounds& b = problem.bounds();
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::clamp(out[i], b.lo[i], b.hi[i]);
    return out;
}

GridMinimum brute_force_min(const Problem& problem, int grid_points_per_axis) {
    const std::size_t d = problem.dim();
    if (d > 3) throw std::invalid_argument("brute_force_min: dimension must be <= 3");
    if (grid_points_per_axis < 1) throw std::invalid_argument("brute_force_min: need >= 1 point per axis");
    double total = 1.0;
    for (std::size_t i = 0; i < d; ++i) total *= grid_points_per_axis;
    if (total > 1e7) throw std::invalid_argument("brute_force_min: grid too large");

    const Bounds& b = problem.bounds();
    std::vector<int> idx(d, 0);
    std::vector<double> x(d, 0.0);
    GridMinimum best;
    best.f = std::numeric_limits<double>::infinity();
    while (true) {
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = grid_points_per_axis == 1
                       ? 0.5 * (b.lo[i] + b.hi[i])
                       : b.lo[i] + (b.hi[i] - b.lo[i]) * idx[i] / (grid_points_per_axis - 1);
        }
        const double f = problem.fitness(x);
        if (f < best.f) {
            best.f = f;
            best.x = x;
        }
        std::size_t k = 0;
        while (k < d && ++idx[k] == grid_points_per_axis) idx[k++] = 0;
        if (k == d) break;
    }
    return best;
}

}  // namespace fdo
