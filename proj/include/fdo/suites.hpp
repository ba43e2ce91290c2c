#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdo/problem.hpp"

namespace fdo {

/// One ingredient of a composite test function: a basic kernel evaluated on
/// shifted, stretched coordinates, weighted by a Gaussian of the distance to
/// its shift, with an additive bias.
struct CompositeComponent {
    std::function<double(std::span<const double>)> basic;
    std::vector<double> shift;
    double sigma = 1.0;    // weight width, > 0
    double stretch = 1.0;  // input is (x - shift) / stretch
    double bias = 0.0;
};

struct CompositeSpec {
    std::vector<CompositeComponent> components;
};

/// Normalized-Gaussian-weight blend of the components (with the usual
/// dominant-weight masking so the blend is clean near each optimum).
double evaluate_composite(const CompositeSpec& spec, std::span<const double> x);

/// Blueprint of one of the composite classical functions (tf14..tf19),
/// exposed so tools and tests can inspect or re-blend the components.
CompositeSpec classical_composite_spec(int tf_number, std::size_t dim = 10);

/// The 19 classical test functions: TF1-TF7 unimodal, TF8-TF13 multimodal,
/// TF14-TF19 composite.  Composite shift data is generated from a fixed
/// internal seed, so the suite is identical across processes.
std::vector<Problem> classical_suite(std::size_t dim = 10);

/// CEC-C06 2019 style suite.  CEC01-CEC03 keep their native dimensions and
/// bounds; CEC04-CEC10 are d=10 on [-100,100], wrapped with a seeded shift
/// and a seeded orthonormal rotation.  Numeric values are not comparable to
/// the official data files (the shifts and rotations here are synthetic).
std::vector<Problem> cec2019_suite(std::uint64_t shift_seed);

/// Plain-text table of (name, dimension, bounds, known optimum).
std::string suite_manifest(const std::vector<Problem>& problems);

}  // namespace fdo
