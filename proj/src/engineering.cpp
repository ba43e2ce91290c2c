#include "fdo/engineering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace fdo {
namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

double array_factor(const AntennaArrayProblem& problem, std::span<const double> x, double theta) {
    if (x.size() != 4) throw std::invalid_argument("array_factor: expected 4 element positions");
    const double u = std::cos(theta) - std::cos(problem.steering_angle);
    double af = 0.0;
    for (double xi : x) af += std::cos(kTwoPi * xi * u);
    af += std::cos(kTwoPi * problem.fixed_element * u);
    return af;
}

double aaad_violation(const AntennaArrayProblem& problem, std::span<const double> x) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += std::max(0.0, -x[i]) + std::max(0.0, x[i] - problem.box_hi);
        total += std::max(0.0, problem.element_min - x[i]);
        total += std::max(0.0, x[i] - problem.element_max);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            total += std::max(0.0, problem.spacing_min - std::fabs(x[i] - x[j]));
    }
    return total;
}

double aaad_fitness(const AntennaArrayProblem& problem, std::span<const double> x) {
    const int n = problem.grid_samples;
    const double step = kPi / (n - 1);
    std::vector<double> af(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) af[static_cast<std::size_t>(i)] = std::fabs(array_factor(problem, x, i * step));

    // index nearest the steering angle; with the default grid pi/2 is exact
    int center = static_cast<int>(std::lround(problem.steering_angle / step));
    center = std::clamp(center, 0, n - 1);
    const double main_beam = af[static_cast<std::size_t>(center)];

    // main-lobe window: walk outward to the first local minimum on each side
    int right = center;
    while (right + 1 < n && af[static_cast<std::size_t>(right + 1)] <= af[static_cast<std::size_t>(right)]) ++right;
    int left = center;
    while (left - 1 >= 0 && af[static_cast<std::size_t>(left - 1)] <= af[static_cast<std::size_t>(left)]) --left;

    double peak = 0.0;
    bool have_sidelobe = false;
    for (int i = 0; i < n; ++i) {
        if (i >= left && i <= right) continue;
        have_sidelobe = true;
        peak = std::max(peak, af[static_cast<std::size_t>(i)]);
    }

    double sll_db;
    if (!have_sidelobe || main_beam <= 0.0) {
        sll_db = 0.0;  // degenerate pattern; penalties decide
    } else if (peak <= 0.0) {
        sll_db = -200.0;  // nothing measurable outside the main lobe
    } else {
        sll_db = 20.0 * std::log10(peak / main_beam);
    }
    return sll_db + problem.penalty_coeff * aaad_violation(problem, x);
}

Problem make_aaad_problem(const AntennaArrayProblem& spec) {
    return Problem("aaad", Bounds::cube(4, 0.0, spec.box_hi),
                   [spec](std::span<const double> x, RandomSource*) {
                       return aaad_fitness(spec, x);
                   });
}

double pvd_cost(const PressureVesselDesign& d) {
    return 0.6224 * d.shell_thickness * d.radius * d.length +
           1.7781 * d.head_thickness * d.radius * d.radius +
           3.1661 * d.shell_thickness * d.shell_thickness * d.length +
           19.84 * d.shell_thickness * d.shell_thickness * d.radius;
}

std::array<double, 4> pvd_constraints(const PressureVesselDesign& d) {
    return {
        -d.shell_thickness + 0.0193 * d.radius,
        -d.head_thickness + 0.00954 * d.radius,
        -kPi * d.radius * d.radius * d.length - (4.0 / 3.0) * kPi * std::pow(d.radius, 3) +
            1296000.0,
        d.length - 240.0,
    };
}

namespace {

PressureVesselDesign to_design(std::span<const double> x) {
    return PressureVesselDesign{x[0], x[1], x[2], x[3]};
}

}  // namespace

Problem make_pvd_problem() {
    Bounds b;
    b.lo = {0.0625, 0.0625, 10.0, 10.0};
    b.hi = {6.1875, 6.1875, 200.0, 200.0};
    std::vector<Constraint> cs;
    for (int j = 0; j < 4; ++j)
        cs.push_back([j](std::span<const double> x) { return pvd_constraints(to_design(x))[static_cast<std::size_t>(j)]; });
    return Problem("pvd", std::move(b),
                   [](std::span<const double> x, RandomSource*) { return pvd_cost(to_design(x)); })
        .with_constraints(std::move(cs));
}

TspInstance TspInstance::from_points(std::vector<std::array<double, 2>> points) {
    TspInstance inst;
    inst.cities = std::move(points);
    const std::size_t n = inst.cities.size();
    inst.distance.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = inst.cities[i][0] - inst.cities[j][0];
            const double dy = inst.cities[i][1] - inst.cities[j][1];
            const double dist = std::sqrt(dx * dx + dy * dy);
            inst.distance[i][j] = dist;
            inst.distance[j][i] = dist;
        }
    }
    return inst;
}

TspInstance TspInstance::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("tsp: cannot open " + path.string());
    std::size_t n = 0;
    if (!(in >> n) || n == 0) throw std::runtime_error("tsp: bad city count in " + path.string());
    std::vector<std::array<double, 2>> pts(n);
    for (auto& p : pts)
        if (!(in >> p[0] >> p[1]))
            throw std::runtime_error("tsp: truncated coordinate list in " + path.string());
    return from_points(std::move(pts));
}

TspInstance tsp5_instance() {
    return TspInstance::from_points({{0.0, 0.0}, {4.0, 0.5}, {5.0, 3.0}, {2.0, 4.5}, {-1.0, 2.5}});
}

std::vector<std::size_t> decode_random_key(std::span<const double> keys) {
    std::vector<std::size_t> perm(keys.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&keys](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return perm;
}

double tour_length(std::span<const std::size_t> perm, const TspInstance& instance) {
    if (perm.size() != instance.size()) throw std::invalid_argument("tour_length: size mismatch");
    if (perm.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        total += instance.distance[perm[i]][perm[i + 1]];
    total += instance.distance[perm.back()][perm.front()];
    return total;
}

Problem make_tsp_problem(TspInstance instance, std::string name) {
    const std::size_t n = instance.size();
    if (n == 0) throw std::invalid_argument("make_tsp_problem: empty instance");
    auto shared = std::make_shared<TspInstance>(std::move(instance));
    return Problem(std::move(name), Bounds::cube(n, 0.0, 1.0),
                   [shared](std::span<const double> keys, RandomSource*) {
                       const auto perm = decode_random_key(keys);
                       return tour_length(perm, *shared);
                   });
}

}  // namespace fdo
