#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdo/engineering.hpp"
#include "fdo/harness.hpp"
#include "fdo/optimizer.hpp"
#include "fdo/suites.hpp"

namespace {

struct CliOptions {
    std::string algo;
    std::string problem;
    std::string suite;
    std::optional<int> dim;
    std::optional<int> pop;
    std::optional<int> iters;
    std::optional<int> runs;
    std::optional<std::uint64_t> seed;
    std::optional<double> lambda;
    std::optional<double> alpha;
    std::string config_path;
    std::string out;
    std::optional<std::string> format;
    std::optional<int> jobs;
    bool no_timing = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--algo", o.algo, "algorithm name(s), comma separated (fdo, mifdo)");
    cmd->add_option("--problem", o.problem, "problem name(s), comma separated");
    cmd->add_option("--suite", o.suite, "suite name(s): classical, cec2019, engineering");
    cmd->add_option("--dim", o.dim, "dimension override for the classical functions");
    cmd->add_option("--pop", o.pop, "population (scout bees)");
    cmd->add_option("--iters", o.iters, "iteration budget");
    cmd->add_option("--runs", o.runs, "independent runs per (algorithm, problem)");
    cmd->add_option("--seed", o.seed, "base seed");
    cmd->add_option("--lambda", o.lambda, "M-IFDO Lambda");
    cmd->add_option("--alpha", o.alpha, "Wilcoxon significance level");
    cmd->add_option("--config", o.config_path, "JSON config file (flags override it)");
    cmd->add_option("--out", o.out, "output report path");
    cmd->add_option("--format", o.format, "report format: csv or markdown");
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_flag("--no-timing", o.no_timing, "zero out timing fields (byte-stable reports)");
}

fdo::ExperimentConfig build_config(const CliOptions& o) {
    fdo::ExperimentConfig c;
    if (!o.config_path.empty()) c = fdo::load_config(o.config_path);
    if (!o.algo.empty()) {
        c.algorithms.clear();
        std::string item;
        std::stringstream ss(o.algo);
        while (std::getline(ss, item, ','))
            if (!item.empty()) c.algorithms.push_back(item);
    }
    std::vector<std::string> names;
    if (!o.problem.empty()) {
        std::string item;
        std::stringstream ss(o.problem);
        while (std::getline(ss, item, ','))
            if (!item.empty()) names.push_back(item);
    }
    if (!o.suite.empty()) {
        std::string item;
        std::stringstream ss(o.suite);
        while (std::getline(ss, item, ','))
            if (!item.empty())
                for (auto& p : fdo::expand_suite(item)) names.push_back(std::move(p));
    }
    if (!names.empty()) c.problems = std::move(names);
    if (o.dim) c.dimension = *o.dim;
    if (o.pop) c.population = *o.pop;
    if (o.iters) c.iterations = *o.iters;
    if (o.runs) c.runs = *o.runs;
    if (o.seed) c.base_seed = *o.seed;
    if (o.lambda) c.lambda = *o.lambda;
    if (o.alpha) c.alpha = *o.alpha;
    if (!o.out.empty()) c.out = o.out;
    if (o.format) c.format = *o.format;
    if (o.jobs) c.jobs = *o.jobs;
    if (o.no_timing) c.no_timing = true;
    return c;
}

int do_list() {
    std::cout << "algorithms: fdo, mifdo\n\nsuites:\n";
    for (const auto& s : fdo::known_suites()) std::cout << "  " << s << '\n';
    std::cout << "\nproblems:\n";
    std::vector<fdo::Problem> all;
    for (const auto& name : fdo::known_problem_names())
        all.push_back(fdo::make_problem_by_name(name));
    std::cout << fdo::suite_manifest(all);
    std::cout << "\nexternal: tsp:<file> (first line: city count, then one \"x y\" per line)\n";
    return 0;
}

int do_run(const CliOptions& o) {
    fdo::ExperimentConfig c = build_config(o);
    if (c.problems.size() != 1 || c.algorithms.size() != 1)
        throw std::invalid_argument("run: exactly one --algo and one --problem required");
    c.runs = 1;

    fdo::Problem problem = fdo::make_problem_by_name(c.problems.front(), c.dimension);
    fdo::OptimizerConfig oc;
    oc.variant = *fdo::variant_from_string(c.algorithms.front());
    oc.population = c.population;
    oc.max_iterations = c.iterations;
    oc.lambda = c.lambda;
    oc.seed = fdo::derive_run_seed(c.base_seed, c.algorithms.front(), problem.name(), 0);
    fdo::RandomSource source(oc.seed, 0);
    const fdo::RunResult result = fdo::run(problem, oc, std::nullopt, source);

    std::printf("algorithm:  %s\nproblem:    %s (d=%zu)\nbest:       %.10g\n",
                c.algorithms.front().c_str(), problem.name().c_str(), problem.dim(),
                result.best.fitness);
    std::printf("evals:      %llu\niterations: %d\n",
                static_cast<unsigned long long>(result.eval_count), result.iterations_run);
    if (!c.no_timing) std::printf("wall_s:     %.3f\n", result.wall_seconds);
    std::printf("position:  ");
    for (double v : result.best.position) std::printf(" %.10g", v);
    std::printf("\n");

    std::string trace_path = c.out.empty()
                                 ? "trace_" + c.algorithms.front() + "_" + problem.name() + ".csv"
                                 : c.out;
    fdo::write_trace_csv(result.trace, trace_path);
    std::printf("trace:      %s\n", trace_path.c_str());
    return 0;
}

int do_bench(const CliOptions& o, bool require_pair) {
    fdo::ExperimentConfig c = build_config(o);
    if (require_pair && c.algorithms.size() < 2)
        throw std::invalid_argument("compare: at least two --algo entries required");
    if (c.out.empty()) c.out = "report.csv";
    const fdo::ExperimentReport report = fdo::execute(c);
    fdo::emit_report(report, c, c.out);
    std::printf("report:     %s (%zu rows)\n", c.out.c_str(), report.cells.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fitness dependent optimizer benchmark harness (FDO / M-IFDO)"};
    app.require_subcommand(1);

    CliOptions run_opts, bench_opts, compare_opts;
    CLI::App* cmd_run = app.add_subcommand("run", "single run of one algorithm on one problem");
    add_common_flags(cmd_run, run_opts);
    CLI::App* cmd_bench = app.add_subcommand("bench", "multi-run benchmark with CSV/Markdown report");
    add_common_flags(cmd_bench, bench_opts);
    CLI::App* cmd_compare =
        app.add_subcommand("compare", "benchmark two or more algorithms plus Wilcoxon tests");
    add_common_flags(cmd_compare, compare_opts);
    CLI::App* cmd_list = app.add_subcommand("list", "list algorithms and problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_list->parsed()) return do_list();
        if (cmd_run->parsed()) return do_run(run_opts);
        if (cmd_bench->parsed()) return do_bench(bench_opts, false);
        if (cmd_compare->parsed()) return do_bench(compare_opts, true);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
