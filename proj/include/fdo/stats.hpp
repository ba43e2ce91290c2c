#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdo {

struct RunBatch {
    std::vector<double> final_bests;
    std::vector<double> runtimes;
    std::optional<double> success_threshold;
};

struct DescribeResult {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n-1), 0 for n = 1
    double best = 0.0;
    double worst = 0.0;
    double avg_runtime = 0.0;
    std::optional<int> n_success;  // unset when no threshold was given
    std::optional<int> n_failure;
};

/// The seven per-batch measures: mean, sd, best, worst, average runtime and
/// the success/failure counts against the optional threshold.
DescribeResult describe(const RunBatch& batch);

enum class WilcoxonWin { plus, minus, tie };

std::string to_string(WilcoxonWin win);

struct WilcoxonResult {
    double t_plus = 0.0;
    double t_minus = 0.0;
    double p_value = 1.0;
    double alpha = 0.05;
    WilcoxonWin win = WilcoxonWin::tie;
    int n_effective = 0;  // pairs left after dropping zero differences
};

enum class WilcoxonMethod { automatic, exact, normal_approx };

/// Two-sided Wilcoxon signed-rank test on paired samples.  Zero differences
/// are dropped, tied absolute differences get average ranks.  The p-value is
/// exact (full sign enumeration) for n_effective <= 12 and a tie- and
/// continuity-corrected normal approximation above that.  A win is declared
/// for the side with the smaller median when p < alpha.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    double alpha = 0.05,
                                    WilcoxonMethod method = WilcoxonMethod::automatic);

struct PairwiseRow {
    std::string problem;
    WilcoxonResult result;
};

struct ChallengerSummary {
    std::string challenger;
    std::vector<PairwiseRow> rows;
    int wins = 0;    // reference algorithm better
    int ties = 0;
    int losses = 0;  // challenger better
};

struct ComparisonTable {
    std::string reference;
    std::vector<ChallengerSummary> challengers;
};

/// Wilcoxon comparison of every non-reference algorithm against the
/// reference, per problem, plus win/tie/loss tallies.  Throws when any
/// (algorithm, problem) batch is missing.
ComparisonTable compare_algorithms(
    const std::map<std::string, std::map<std::string, RunBatch>>& batches_by_algorithm,
    const std::string& reference, double alpha = 0.05);

}  // namespace fdo
