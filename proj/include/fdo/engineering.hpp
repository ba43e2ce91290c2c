#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "fdo/problem.hpp"

namespace fdo {

/// Four movable elements of a linear antenna array (positions in units of
/// the carrier wavelength) plus one fixed element at 2.25.  The fitness is
/// the peak sidelobe level in dB relative to the main beam, penalized for
/// spacing and range violations.
struct AntennaArrayProblem {
    double steering_angle = 1.5707963267948966;  // broadside, pi/2
    int grid_samples = 1441;                     // theta samples over [0, pi]
    double fixed_element = 2.25;
    double spacing_min = 0.25;
    double element_min = 0.125;
    double element_max = 2.0;
    double box_hi = 2.25;  // every movable element lives in (0, 2.25)
    double penalty_coeff = 1e3;
};

/// Array factor at angle theta: the sum of the five element cosines.
double array_factor(const AntennaArrayProblem& problem, std::span<const double> x, double theta);

/// Peak sidelobe level outside the main-lobe window (delimited by the first
/// nulls around the steering angle) plus penalty terms; lower is better and
/// negative values mean the sidelobes sit below the main beam.
double aaad_fitness(const AntennaArrayProblem& problem, std::span<const double> x);

/// Sum of the spacing / element-range / box violations (0 when feasible).
double aaad_violation(const AntennaArrayProblem& problem, std::span<const double> x);

Problem make_aaad_problem(const AntennaArrayProblem& spec = {});

/// Cylindrical pressure vessel with hemispherical heads; variables are
/// shell thickness, head thickness, inner radius and length.
struct PressureVesselDesign {
    double shell_thickness = 0.0;
    double head_thickness = 0.0;
    double radius = 0.0;
    double length = 0.0;
};

/// Raw material/forming/welding cost of the design (no penalties).
double pvd_cost(const PressureVesselDesign& design);

/// The four standard inequality constraints as g(x) <= 0 values.
std::array<double, 4> pvd_constraints(const PressureVesselDesign& design);

Problem make_pvd_problem();

struct TspInstance {
    std::vector<std::array<double, 2>> cities;
    std::vector<std::vector<double>> distance;

    static TspInstance from_points(std::vector<std::array<double, 2>> points);
    /// Plain text: first line is the city count, then one "x y" pair per line.
    static TspInstance from_file(const std::filesystem::path& path);
    std::size_t size() const { return cities.size(); }
};

/// Fixed 5-city instance used by the benchmark harness.
TspInstance tsp5_instance();

/// Argsort of the keys with ties broken by index; always a valid permutation.
std::vector<std::size_t> decode_random_key(std::span<const double> keys);

/// Closed-tour length (returns to the starting city).
double tour_length(std::span<const std::size_t> perm, const TspInstance& instance);

/// Continuous wrapper: keys in [0, 1]^n, objective is the decoded tour length.
Problem make_tsp_problem(TspInstance instance, std::string name = "tsp");

}  // namespace fdo
