#include "fdo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fdo/engineering.hpp"
#include "fdo/suites.hpp"

namespace fdo {
namespace {

// CEC shift/rotation data is synthetic; one fixed seed keeps every process
// on the same suite.
constexpr std::uint64_t kCecShiftSeed = 2019;

// success rule: within 1e-2 of the known optimum, when one exists
constexpr double kSuccessMargin = 1e-2;

std::string fmt_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw std::invalid_argument("config: 'algo' must name at least one algorithm");
    for (const auto& a : algorithms)
        if (!variant_from_string(a)) {
            std::string valid;
            for (const auto& v : known_algorithms()) valid += (valid.empty() ? "" : ", ") + v;
            throw std::invalid_argument("config: unknown algorithm '" + a + "' (valid: " + valid + ")");
        }
    if (problems.empty()) throw std::invalid_argument("config: 'problem' must name at least one problem");
    for (const auto& p : problems) make_problem_by_name(p, dimension);  // throws with names
    if (runs < 1) throw std::invalid_argument("config: 'runs' must be >= 1");
    if (iterations < 1) throw std::invalid_argument("config: 'iters' must be >= 1");
    if (population < 1) throw std::invalid_argument("config: 'pop' must be >= 1");
    if (dimension && *dimension < 1) throw std::invalid_argument("config: 'dim' must be >= 1");
    if (!std::isfinite(lambda)) throw std::invalid_argument("config: 'lambda' must be finite");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("config: 'alpha' must be in (0, 1)");
    if (jobs < 1) throw std::invalid_argument("config: 'jobs' must be >= 1");
    if (format != "csv" && format != "markdown")
        throw std::invalid_argument("config: 'format' must be csv or markdown");
}

ExperimentConfig config_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = json_text.empty() ? nlohmann::json::object() : nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    ExperimentConfig c;
    if (j.contains("algo")) c.algorithms = split_csv_list(j.at("algo").get<std::string>());
    std::vector<std::string> names;
    if (j.contains("problem"))
        for (const auto& p : split_csv_list(j.at("problem").get<std::string>())) names.push_back(p);
    if (j.contains("suite"))
        for (const auto& s : split_csv_list(j.at("suite").get<std::string>()))
            for (const auto& p : expand_suite(s)) names.push_back(p);
    if (!names.empty()) c.problems = std::move(names);
    if (j.contains("runs")) c.runs = j.at("runs").get<int>();
    if (j.contains("iters")) c.iterations = j.at("iters").get<int>();
    if (j.contains("pop")) c.population = j.at("pop").get<int>();
    if (j.contains("dim")) c.dimension = j.at("dim").get<int>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<double>();
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
    if (j.contains("seed")) c.base_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
    if (j.contains("no_timing")) c.no_timing = j.at("no_timing").get<bool>();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

std::vector<std::string> known_algorithms() {
    return {"fdo", "mifdo"};
}

std::vector<std::string> known_suites() {
    return {"classical", "cec2019", "engineering"};
}

std::vector<std::string> expand_suite(const std::string& suite) {
    if (suite == "classical") {
        std::vector<std::string> names;
        for (int i = 1; i <= 19; ++i) names.push_back("tf" + std::to_string(i));
        return names;
    }
    if (suite == "cec2019") {
        std::vector<std::string> names;
        for (int i = 1; i <= 10; ++i) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "cec%02d", i);
            names.emplace_back(buf);
        }
        return names;
    }
    if (suite == "engineering") return {"pvd", "aaad", "tsp5"};
    throw std::invalid_argument("config: unknown suite '" + suite +
                                "' (valid: classical, cec2019, engineering)");
}

std::vector<std::string> known_problem_names() {
    std::vector<std::string> names;
    for (const auto& suite : known_suites())
        for (auto& n : expand_suite(suite)) names.push_back(std::move(n));
    return names;
}

Problem make_problem_by_name(const std::string& name, std::optional<int> dimension) {
    const std::size_t dim = static_cast<std::size_t>(dimension.value_or(10));
    if (name.rfind("tsp:", 0) == 0) {
        const std::string path = name.substr(4);
        return make_tsp_problem(TspInstance::from_file(path), "tsp_" + sanitize(path));
    }
    if (name == "tsp5") return make_tsp_problem(tsp5_instance(), "tsp5");
    if (name == "pvd") return make_pvd_problem();
    if (name == "aaad") return make_aaad_problem();
    if (name.rfind("tf", 0) == 0) {
        for (auto& p : classical_suite(dim))
            if (p.name() == name) return p;
    }
    if (name.rfind("cec", 0) == 0) {
        for (auto& p : cec2019_suite(kCecShiftSeed))
            if (p.name() == name) return p;
    }
    std::string valid;
    for (const auto& n : known_problem_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("config: unknown problem '" + name + "' (valid: " + valid +
                                ", tsp:<file>)");
}

std::uint64_t derive_run_seed(std::uint64_t base_seed, const std::string& algorithm,
                              const std::string& problem, int run) {
    std::uint64_t h = fnv1a64(algorithm.data(), algorithm.size());
    h = fnv1a64("/", 1, h);
    h = fnv1a64(problem.data(), problem.size(), h);
    const std::uint64_t r = static_cast<std::uint64_t>(run);
    h = fnv1a64(&r, sizeof(r), h);
    return base_seed ^ h;
}

ExperimentReport execute(const ExperimentConfig& config) {
    config.validate();

    std::vector<Problem> problems;
    problems.reserve(config.problems.size());
    for (const auto& name : config.problems)
        problems.push_back(make_problem_by_name(name, config.dimension));

    struct Unit {
        std::size_t algo;
        std::size_t problem;
        int run;
    };
    std::vector<Unit> units;
    units.reserve(config.algorithms.size() * problems.size() * static_cast<std::size_t>(config.runs));
    for (std::size_t a = 0; a < config.algorithms.size(); ++a)
        for (std::size_t p = 0; p < problems.size(); ++p)
            for (int r = 0; r < config.runs; ++r) units.push_back({a, p, r});

    std::vector<std::optional<RunResult>> results(units.size());
    std::vector<std::string> errors(units.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= units.size()) break;
            const Unit& u = units[i];
            try {
                OptimizerConfig oc;
                oc.variant = *variant_from_string(config.algorithms[u.algo]);
                oc.population = config.population;
                oc.max_iterations = config.iterations;
                oc.lambda = config.lambda;
                oc.seed = derive_run_seed(config.base_seed, config.algorithms[u.algo],
                                          config.problems[u.problem], u.run);
                RandomSource source(oc.seed, static_cast<std::uint64_t>(u.run));
                results[i] = run(problems[u.problem], oc, std::nullopt, source);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const int jobs = std::max(1, config.jobs);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs) - 1);
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    ExperimentReport report;
    std::map<std::string, std::map<std::string, RunBatch>> batches;
    std::size_t unit_index = 0;
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        for (std::size_t p = 0; p < problems.size(); ++p) {
            CellReport cell;
            cell.algorithm = config.algorithms[a];
            cell.problem = problems[p].name();

            RunBatch batch;
            std::vector<std::size_t> kept_units;
            double evals = 0.0;
            for (int r = 0; r < config.runs; ++r, ++unit_index) {
                if (!errors[unit_index].empty()) {
                    if (cell.error.empty()) cell.error = errors[unit_index];
                    continue;
                }
                const RunResult& rr = *results[unit_index];
                batch.final_bests.push_back(rr.best.fitness);
                batch.runtimes.push_back(rr.wall_seconds);
                kept_units.push_back(unit_index);
                evals += static_cast<double>(rr.eval_count);
            }
            if (!batch.final_bests.empty()) {
                if (auto opt = problems[p].known_optimum(); opt && !problems[p].stochastic())
                    batch.success_threshold = *opt + kSuccessMargin;
                cell.stats = describe(batch);
                cell.mean_evals = evals / static_cast<double>(batch.final_bests.size());
                // best run: smallest final best, earliest run on ties
                std::size_t best = 0;
                for (std::size_t r = 1; r < batch.final_bests.size(); ++r)
                    if (batch.final_bests[r] < batch.final_bests[best]) best = r;
                cell.best_run = static_cast<int>(kept_units[best] % static_cast<std::size_t>(config.runs));
                cell.best_trace = results[kept_units[best]]->trace;
                cell.final_bests = batch.final_bests;
                cell.runtimes = batch.runtimes;
            }
            batches[cell.algorithm][cell.problem] = std::move(batch);
            report.cells.push_back(std::move(cell));
        }
    }

    if (config.algorithms.size() >= 2) {
        bool all_complete = true;
        for (const auto& cell : report.cells)
            if (!cell.error.empty()) all_complete = false;
        if (all_complete)
            report.comparison = compare_algorithms(batches, config.algorithms.front(), config.alpha);
    }
    return report;
}

void write_trace_csv(const ConvergenceTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit: cannot write " + path.string());
    out << "iter,best,delta,diversity,exploration_pct\n";
    for (std::size_t t = 0; t < trace.best_per_iter.size(); ++t) {
        out << (t + 1) << ',' << fmt_g(trace.best_per_iter[t]) << ','
            << fmt_g(trace.per_iter_delta[t]) << ',' << fmt_g(trace.diversity_per_iter[t]) << ','
            << fmt_g(trace.exploration_pct_per_iter[t]) << '\n';
    }
}

namespace {

void emit_csv(const ExperimentReport& report, const ExperimentConfig& config, std::ostream& out) {
    out << "algorithm,problem,mean,sd,best,worst,avg_runtime_s,evals,n_success,n_failure\n";
    for (const auto& cell : report.cells) {
        out << cell.algorithm << ',' << cell.problem << ',';
        if (!cell.error.empty()) {
            out << "nan,nan,nan,nan,0,0,na,na\n";
            continue;
        }
        out << fmt_g(cell.stats.mean) << ',' << fmt_g(cell.stats.sd) << ','
            << fmt_g(cell.stats.best) << ',' << fmt_g(cell.stats.worst) << ','
            << fmt_g(config.no_timing ? 0.0 : cell.stats.avg_runtime) << ','
            << fmt_g(cell.mean_evals) << ','
            << (cell.stats.n_success ? std::to_string(*cell.stats.n_success) : "na") << ','
            << (cell.stats.n_failure ? std::to_string(*cell.stats.n_failure) : "na") << '\n';
    }
    if (report.comparison) {
        out << "\nchallenger,problem,p_value,t_plus,t_minus,win\n";
        for (const auto& ch : report.comparison->challengers) {
            for (const auto& row : ch.rows)
                out << ch.challenger << ',' << row.problem << ',' << fmt_g(row.result.p_value)
                    << ',' << fmt_g(row.result.t_plus) << ',' << fmt_g(row.result.t_minus) << ','
                    << to_string(row.result.win) << '\n';
            out << ch.challenger << ",(tally),,,,+" << ch.wins << "/=" << ch.ties << "/-"
                << ch.losses << '\n';
        }
    }
}

void emit_markdown(const ExperimentReport& report, const ExperimentConfig& config,
                   std::ostream& out) {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    for (const auto& cell : report.cells) {
        if (std::find(algorithms.begin(), algorithms.end(), cell.algorithm) == algorithms.end())
            algorithms.push_back(cell.algorithm);
        if (std::find(problems.begin(), problems.end(), cell.problem) == problems.end())
            problems.push_back(cell.problem);
    }
    auto find_cell = [&](const std::string& a, const std::string& p) -> const CellReport* {
        for (const auto& cell : report.cells)
            if (cell.algorithm == a && cell.problem == p) return &cell;
        return nullptr;
    };

    out << "# Benchmark report\n\n| Problem |";
    for (const auto& a : algorithms) out << ' ' << a << " mean | " << a << " sd |";
    out << "\n|---|";
    for (std::size_t i = 0; i < algorithms.size(); ++i) out << "---:|---:|";
    out << '\n';
    for (const auto& p : problems) {
        out << "| " << p << " |";
        for (const auto& a : algorithms) {
            const CellReport* cell = find_cell(a, p);
            if (cell && cell->error.empty())
                out << ' ' << fmt_g(cell->stats.mean) << " | " << fmt_g(cell->stats.sd) << " |";
            else
                out << " nan | nan |";
        }
        out << '\n';
    }

    out << "\n## Runtime and evaluations\n\n| Algorithm | Problem | avg runtime (s) | evals | "
           "success/failure |\n|---|---|---:|---:|---:|\n";
    for (const auto& cell : report.cells) {
        out << "| " << cell.algorithm << " | " << cell.problem << " | "
            << fmt_g(config.no_timing || !cell.error.empty() ? 0.0 : cell.stats.avg_runtime)
            << " | " << fmt_g(cell.mean_evals) << " | "
            << (cell.stats.n_success ? std::to_string(*cell.stats.n_success) : "na") << "/"
            << (cell.stats.n_failure ? std::to_string(*cell.stats.n_failure) : "na") << " |\n";
    }

    if (report.comparison) {
        out << "\n## Wilcoxon signed-rank (alpha=" << fmt_g(config.alpha)
            << ", reference=" << report.comparison->reference << ")\n";
        for (const auto& ch : report.comparison->challengers) {
            out << "\n| Problem | p-value | T+ | T- | Win |\n|---|---:|---:|---:|---:|\n";
            for (const auto& row : ch.rows)
                out << "| " << row.problem << " | " << fmt_g(row.result.p_value) << " | "
                    << fmt_g(row.result.t_plus) << " | " << fmt_g(row.result.t_minus) << " | "
                    << to_string(row.result.win) << " |\n";
            out << "| vs " << ch.challenger << " (+/=/-) | +" << ch.wins << "/=" << ch.ties
                << "/-" << ch.losses << " | | | |\n";
        }
    }
}

}  // namespace

void emit_report(const ExperimentReport& report, const ExperimentConfig& config,
                 const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit: cannot write " + path.string());
    if (config.format == "markdown")
        emit_markdown(report, config, out);
    else
        emit_csv(report, config, out);
    if (!out) throw std::runtime_error("emit: write failed for " + path.string());

    // one per-iteration trace per cell, next to the main report
    std::filesystem::path stem = path;
    stem.replace_extension();
    for (const auto& cell : report.cells) {
        if (!cell.error.empty()) continue;
        std::filesystem::path tpath = stem;
        tpath += "_trace_" + sanitize(cell.algorithm) + "_" + sanitize(cell.problem) + ".csv";
        write_trace_csv(cell.best_trace, tpath);
    }
}

}  // namespace fdo
