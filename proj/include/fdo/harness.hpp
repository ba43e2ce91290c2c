#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fdo/optimizer.hpp"
#include "fdo/problem.hpp"
#include "fdo/stats.hpp"

namespace fdo {

/// One experiment: algorithms x problems x seeded runs.  Defaults follow the
/// benchmark protocol (30 runs, 500 iterations, dimension 10, 30 scout bees,
/// wf drawn from [0, 1]).
struct ExperimentConfig {
    std::vector<std::string> algorithms{"mifdo"};
    std::vector<std::string> problems;
    int runs = 30;
    int iterations = 500;
    int population = 30;
    std::optional<int> dimension;  // classical functions only; default 10
    double lambda = 0.1;
    double alpha = 0.05;
    std::uint64_t base_seed = 0;
    std::string out;
    std::string format = "csv";  // csv | markdown
    int jobs = 1;
    bool no_timing = false;

    void validate() const;  // throws std::invalid_argument naming the bad key
};

/// Parse a JSON config with flat keys mirroring the CLI flags; missing keys
/// keep their defaults.
ExperimentConfig config_from_json(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

std::vector<std::string> known_algorithms();
std::vector<std::string> known_suites();

/// All built-in problem names (classical, CEC, engineering).
std::vector<std::string> known_problem_names();

/// Expand a suite name into its problem list; throws on unknown suites.
std::vector<std::string> expand_suite(const std::string& suite);

/// Instantiate a problem by name ("tf4", "cec07", "pvd", "aaad", "tsp5",
/// "tsp:<path>").  The dimension override applies to the classical
/// functions only.
Problem make_problem_by_name(const std::string& name, std::optional<int> dimension = {});

/// Stable per-run stream seed: base_seed XOR fnv1a(algorithm, problem, run).
std::uint64_t derive_run_seed(std::uint64_t base_seed, const std::string& algorithm,
                              const std::string& problem, int run);

struct CellReport {
    std::string algorithm;
    std::string problem;
    DescribeResult stats;
    double mean_evals = 0.0;
    std::vector<double> final_bests;
    std::vector<double> runtimes;
    int best_run = 0;
    ConvergenceTrace best_trace;
    std::string error;  // non-empty when any run of the cell failed
};

struct ExperimentReport {
    std::vector<CellReport> cells;  // |algorithms| x |problems| rows, algorithm-major
    std::optional<ComparisonTable> comparison;  // present when >= 2 algorithms
};

/// Run the whole experiment.  Runs are executed across `jobs` workers; each
/// run owns its RandomSource, so the report is identical for any worker
/// count.  A failing run is recorded in its cell and never aborts the rest.
ExperimentReport execute(const ExperimentConfig& config);

/// Write the report (CSV or Markdown per config.format) plus one
/// per-iteration trace CSV per cell next to it.  Throws std::runtime_error
/// naming the path when it cannot be written.
void emit_report(const ExperimentReport& report, const ExperimentConfig& config,
                 const std::filesystem::path& path);

/// Trace CSV (iter,best,delta,diversity,exploration_pct) for one run.
void write_trace_csv(const ConvergenceTrace& trace, const std::filesystem::path& path);

}  // namespace fdo
