#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

#include "fdo/engineering.hpp"
#include "fdo/harness.hpp"
#include "fdo/optimizer.hpp"
#include "fdo/problem.hpp"
#include "fdo/rng.hpp"
#include "fdo/stats.hpp"
#include "fdo/suites.hpp"

namespace py = pybind11;

namespace {

fdo::Variant parse_variant(const std::string& name) {
    auto v = fdo::variant_from_string(name);
    if (!v) throw std::invalid_argument("unknown algorithm: " + name);
    return *v;
}

}  // namespace

PYBIND11_MODULE(_fdo, m) {
    m.doc() = "Fitness dependent optimizer (FDO / M-IFDO) core";

    py::class_<fdo::RandomSource>(m, "RandomSource")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
        .def("next_u64", &fdo::RandomSource::next_u64)
        .def("next_double", &fdo::RandomSource::next_double)
        .def("uniform", &fdo::RandomSource::uniform, py::arg("lo"), py::arg("hi"))
        .def("normal", &fdo::RandomSource::normal);

    m.def(
        "levy_r",
        [](fdo::RandomSource& source, double beta) {
            return fdo::levy_r(source, fdo::LevyWalkParams(beta));
        },
        py::arg("source"), py::arg("beta") = 1.5);

    py::class_<fdo::Problem>(m, "Problem")
        .def_property_readonly("name", &fdo::Problem::name)
        .def_property_readonly("dim", &fdo::Problem::dim)
        .def_property_readonly("lower_bounds",
                               [](const fdo::Problem& p) { return p.bounds().lo; })
        .def_property_readonly("upper_bounds",
                               [](const fdo::Problem& p) { return p.bounds().hi; })
        .def_property_readonly("known_optimum", &fdo::Problem::known_optimum)
        .def_property_readonly("optimum_point", &fdo::Problem::optimum_point)
        .def_property_readonly("stochastic", &fdo::Problem::stochastic)
        .def(
            "evaluate",
            [](const fdo::Problem& p, const std::vector<double>& x, fdo::RandomSource* source) {
                return p.evaluate(x, source);
            },
            py::arg("x"), py::arg("source") = nullptr)
        .def(
            "fitness",
            [](const fdo::Problem& p, const std::vector<double>& x, fdo::RandomSource* source) {
                return p.fitness(x, source);
            },
            py::arg("x"), py::arg("source") = nullptr)
        .def("penalized_fitness",
             [](const fdo::Problem& p, const std::vector<double>& x, double coeff) {
                 return fdo::penalized_fitness(p, x, coeff);
             })
        .def("repair",
             [](const fdo::Problem& p, const std::vector<double>& x) { return fdo::repair(p, x); })
        .def("constraint_violations", [](const fdo::Problem& p, const std::vector<double>& x) {
            return fdo::check_constraints(p, x).violations;
        });

    m.def("classical_suite", &fdo::classical_suite, py::arg("dim") = 10);
    m.def("cec2019_suite", &fdo::cec2019_suite, py::arg("shift_seed") = 2019);
    m.def("make_problem", &fdo::make_problem_by_name, py::arg("name"),
          py::arg("dim") = std::nullopt);
    m.def("known_problem_names", &fdo::known_problem_names);
    m.def("brute_force_min", [](const fdo::Problem& p, int grid) {
        auto r = fdo::brute_force_min(p, grid);
        return py::make_tuple(r.x, r.f);
    });

    py::class_<fdo::OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init([](const std::string& variant, int population, int max_iterations,
                         double lambda, std::pair<double, double> wf_init_range,
                         std::uint64_t seed) {
                 fdo::OptimizerConfig c;
                 c.variant = parse_variant(variant);
                 c.population = population;
                 c.max_iterations = max_iterations;
                 c.lambda = lambda;
                 c.wf_init_range = wf_init_range;
                 c.seed = seed;
                 c.validate();
                 return c;
             }),
             py::arg("variant") = "mifdo", py::arg("population") = 30,
             py::arg("max_iterations") = 500, py::arg("lambda_") = 0.1,
             py::arg("wf_init_range") = std::pair<double, double>{0.0, 1.0},
             py::arg("seed") = 0)
        .def_property_readonly("variant",
                               [](const fdo::OptimizerConfig& c) { return fdo::to_string(c.variant); })
        .def_readwrite("population", &fdo::OptimizerConfig::population)
        .def_readwrite("max_iterations", &fdo::OptimizerConfig::max_iterations)
        .def_readwrite("lambda_", &fdo::OptimizerConfig::lambda)
        .def_readwrite("seed", &fdo::OptimizerConfig::seed);

    py::class_<fdo::RunResult>(m, "RunResult")
        .def_property_readonly("best_position",
                               [](const fdo::RunResult& r) { return r.best.position; })
        .def_property_readonly("best_fitness",
                               [](const fdo::RunResult& r) { return r.best.fitness; })
        .def_property_readonly("best_per_iter",
                               [](const fdo::RunResult& r) { return r.trace.best_per_iter; })
        .def_property_readonly("per_iter_delta",
                               [](const fdo::RunResult& r) { return r.trace.per_iter_delta; })
        .def_property_readonly("diversity_per_iter",
                               [](const fdo::RunResult& r) { return r.trace.diversity_per_iter; })
        .def_property_readonly(
            "exploration_pct_per_iter",
            [](const fdo::RunResult& r) { return r.trace.exploration_pct_per_iter; })
        .def_readonly("eval_count", &fdo::RunResult::eval_count)
        .def_readonly("non_finite_evals", &fdo::RunResult::non_finite_evals)
        .def_readonly("wall_seconds", &fdo::RunResult::wall_seconds)
        .def_readonly("iterations_run", &fdo::RunResult::iterations_run)
        .def_readonly("initial_best", &fdo::RunResult::initial_best)
        .def_property_readonly("stop_reason", [](const fdo::RunResult& r) {
            return r.stop_reason == fdo::StopReason::target_reached ? "target_reached"
                                                                    : "iteration_limit";
        });

    m.def(
        "run",
        [](const fdo::Problem& problem, const fdo::OptimizerConfig& config,
           std::optional<double> f_optimal, double epsilon, std::uint64_t stream) {
            std::optional<fdo::ConvergenceCriteria> criteria;
            if (f_optimal) criteria = fdo::ConvergenceCriteria{epsilon, f_optimal};
            fdo::RandomSource source(config.seed, stream);
            return fdo::run(problem, config, criteria, source);
        },
        py::arg("problem"), py::arg("config"), py::arg("f_optimal") = std::nullopt,
        py::arg("epsilon") = 1e-12, py::arg("stream") = 0);

    m.def("fitness_weight", &fdo::fitness_weight, py::arg("best_fitness"),
          py::arg("current_fitness"), py::arg("wf"));
    m.def(
        "propose_candidate",
        [](const std::string& variant, const std::vector<double>& x,
           const std::vector<double>& best, double fw, double r, double lambda, double wf) {
            return fdo::propose_candidate(parse_variant(variant), x, best,
                                          fdo::StepContext{fw, r, lambda, wf});
        },
        py::arg("variant"), py::arg("x"), py::arg("best"), py::arg("fw"), py::arg("r"),
        py::arg("lambda_"), py::arg("wf") = 0.0);

    // statistics
    m.def(
        "describe",
        [](const std::vector<double>& bests, const std::vector<double>& runtimes,
           std::optional<double> threshold) {
            fdo::DescribeResult d = fdo::describe({bests, runtimes, threshold});
            py::dict out;
            out["mean"] = d.mean;
            out["sd"] = d.sd;
            out["best"] = d.best;
            out["worst"] = d.worst;
            out["avg_runtime"] = d.avg_runtime;
            out["n_success"] = d.n_success;
            out["n_failure"] = d.n_failure;
            return out;
        },
        py::arg("final_bests"), py::arg("runtimes") = std::vector<double>{},
        py::arg("success_threshold") = std::nullopt);

    py::class_<fdo::WilcoxonResult>(m, "WilcoxonResult")
        .def_readonly("t_plus", &fdo::WilcoxonResult::t_plus)
        .def_readonly("t_minus", &fdo::WilcoxonResult::t_minus)
        .def_readonly("p_value", &fdo::WilcoxonResult::p_value)
        .def_readonly("alpha", &fdo::WilcoxonResult::alpha)
        .def_readonly("n_effective", &fdo::WilcoxonResult::n_effective)
        .def_property_readonly("win", [](const fdo::WilcoxonResult& r) {
            return fdo::to_string(r.win);
        });

    m.def(
        "wilcoxon_signed_rank",
        [](const std::vector<double>& a, const std::vector<double>& b, double alpha,
           const std::string& method) {
            fdo::WilcoxonMethod wm = fdo::WilcoxonMethod::automatic;
            if (method == "exact") wm = fdo::WilcoxonMethod::exact;
            else if (method == "normal") wm = fdo::WilcoxonMethod::normal_approx;
            else if (method != "auto") throw std::invalid_argument("method: auto, exact or normal");
            return fdo::wilcoxon_signed_rank(a, b, alpha, wm);
        },
        py::arg("a"), py::arg("b"), py::arg("alpha") = 0.05, py::arg("method") = "auto");

    // engineering problems
    py::class_<fdo::TspInstance>(m, "TspInstance")
        .def_static("from_points",
                    [](const std::vector<std::pair<double, double>>& pts) {
                        std::vector<std::array<double, 2>> converted;
                        converted.reserve(pts.size());
                        for (const auto& [x, y] : pts) converted.push_back({x, y});
                        return fdo::TspInstance::from_points(std::move(converted));
                    })
        .def_static("from_file",
                    [](const std::string& path) { return fdo::TspInstance::from_file(path); })
        .def_property_readonly("size", &fdo::TspInstance::size)
        .def_readonly("distance", &fdo::TspInstance::distance);

    m.def("tsp5_instance", &fdo::tsp5_instance);
    m.def("decode_random_key", [](const std::vector<double>& keys) {
        return fdo::decode_random_key(keys);
    });
    m.def("tour_length", [](const std::vector<std::size_t>& perm, const fdo::TspInstance& inst) {
        return fdo::tour_length(perm, inst);
    });
    m.def("make_tsp_problem", [](const fdo::TspInstance& inst, const std::string& name) {
        return fdo::make_tsp_problem(inst, name);
    }, py::arg("instance"), py::arg("name") = "tsp");

    m.def("pvd_cost", [](double ts, double th, double r, double l) {
        return fdo::pvd_cost({ts, th, r, l});
    });
    m.def("pvd_constraints", [](double ts, double th, double r, double l) {
        auto g = fdo::pvd_constraints({ts, th, r, l});
        return std::vector<double>(g.begin(), g.end());
    });

    m.def(
        "array_factor",
        [](const std::vector<double>& x, double theta) {
            return fdo::array_factor(fdo::AntennaArrayProblem{}, x, theta);
        },
        py::arg("x"), py::arg("theta"));
    m.def("aaad_fitness", [](const std::vector<double>& x) {
        return fdo::aaad_fitness(fdo::AntennaArrayProblem{}, x);
    });
}
