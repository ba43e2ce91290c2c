#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdo/rng.hpp"

namespace fdo {

/// Per-coordinate closed box bounds.  All intervals must be finite with
/// lo <= hi.
struct Bounds {
    std::vector<double> lo;
    std::vector<double> hi;

    static Bounds cube(std::size_t dim, double lo, double hi);
    std::size_t dim() const { return lo.size(); }
    bool contains(std::span<const double> x) const;
};

/// Objective callback.  The RandomSource pointer is null for deterministic
/// functions; the one stochastic shipped function (quartic with noise) draws
/// from it when present and omits the noise term when absent.
using Objective = std::function<double(std::span<const double>, RandomSource*)>;

/// Inequality constraint g(x) <= 0; positive return values are violations.
using Constraint = std::function<double(std::span<const double>)>;

struct ConstraintReport {
    std::vector<double> violations;  // max(0, g_j(x)) per constraint
    double total = 0.0;
    bool feasible = true;
};

/// Immutable continuous minimization problem: objective, box bounds,
/// optional inequality constraints and optional known optimum.  Safe to
/// share across concurrent runs.
class Problem {
public:
    Problem(std::string name, Bounds bounds, Objective objective);

    Problem& with_constraints(std::vector<Constraint> cs);
    Problem& with_known_optimum(double value);
    Problem& with_optimum_point(std::vector<double> point);
    Problem& with_stochastic(bool flag);
    Problem& with_penalty_coeff(double coeff);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return bounds_.dim(); }
    const Bounds& bounds() const { return bounds_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    std::optional<double> known_optimum() const { return known_optimum_; }
    const std::optional<std::vector<double>>& optimum_point() const { return optimum_point_; }
    bool stochastic() const { return stochastic_; }
    double penalty_coeff() const { return penalty_coeff_; }

    /// Raw objective value.  Throws std::invalid_argument on dimension
    /// mismatch.
    double evaluate(std::span<const double> x, RandomSource* source = nullptr) const;

    /// Objective plus linear penalty on constraint violations; this is the
    /// value the optimizer minimizes.
    double fitness(std::span<const double> x, RandomSource* source = nullptr) const;

private:
    std::string name_;
    Bounds bounds_;
    Objective objective_;
    std::vector<Constraint> constraints_;
    std::optional<double> known_optimum_;
    std::optional<std::vector<double>> optimum_point_;
    bool stochastic_ = false;
    double penalty_coeff_ = 1e6;
};

/// objective(x) + penalty_coeff * sum_j max(0, g_j(x)).
double penalized_fitness(const Problem& problem, std::span<const double> x,
                         double penalty_coeff, RandomSource* source = nullptr);

ConstraintReport check_constraints(const Problem& problem, std::span<const double> x);

/// Clamp every coordinate into its bound interval (idempotent).
std::vector<double> repair(const Problem& problem, std::span<const double> x);

struct GridMinimum {
    std::vector<double> x;
    double f;
};

/// Exhaustive grid minimum; desk-scale oracle for d <= 3.  Throws on
/// oversized grids (> 10^7 points).
GridMinimum brute_force_min(const Problem& problem, int grid_points_per_axis);

}  // namespace fdo
