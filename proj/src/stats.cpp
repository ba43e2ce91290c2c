#include "fdo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace fdo {
namespace {

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    std::sort(v.begin(), v.end());
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

/// Exact two-sided p by enumerating all sign assignments of the ranks:
/// p = 2 * min(P(T+ <= t), P(T+ >= t)), capped at 1.
double exact_two_sided_p(const std::vector<double>& ranks, double t_plus) {
    const std::size_t n = ranks.size();
    if (n > 25) throw std::invalid_argument("wilcoxon: exact enumeration limited to n <= 25");
    const std::uint64_t total = 1ull << n;
    std::uint64_t count_le = 0, count_ge = 0;
    constexpr double eps = 1e-9;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double t = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) t += ranks[i];
        if (t <= t_plus + eps) ++count_le;
        if (t >= t_plus - eps) ++count_ge;
    }
    const double p =
        2.0 * static_cast<double>(std::min(count_le, count_ge)) / static_cast<double>(total);
    return std::min(1.0, p);
}

/// Normal approximation with tie correction and continuity correction.
double approx_two_sided_p(const std::vector<double>& ranks, double t_plus) {
    const double n = static_cast<double>(ranks.size());
    const double mu = n * (n + 1.0) / 4.0;
    double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    // tie correction: subtract sum(t^3 - t)/48 over groups of tied ranks
    std::vector<double> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i);
        var -= (t * t * t - t) / 48.0;
        i = j;
    }
    if (var <= 0.0) return 1.0;
    double delta = t_plus - mu;
    if (delta > 0.5)
        delta -= 0.5;
    else if (delta < -0.5)
        delta += 0.5;
    else
        delta = 0.0;
    const double z = delta / std::sqrt(var);
    return std::min(1.0, 2.0 * (1.0 - normal_cdf(std::fabs(z))));
}

}  // namespace

std::string to_string(WilcoxonWin win) {
    switch (win) {
        case WilcoxonWin::plus: return "+";
        case WilcoxonWin::minus: return "-";
        default: return "=";
    }
}

DescribeResult describe(const RunBatch& batch) {
    const std::size_t n = batch.final_bests.size();
    if (n == 0) throw std::invalid_argument("describe: empty batch");
    if (!batch.runtimes.empty() && batch.runtimes.size() != n)
        throw std::invalid_argument("describe: runtimes length mismatch");

    DescribeResult r;
    r.mean = std::accumulate(batch.final_bests.begin(), batch.final_bests.end(), 0.0) /
             static_cast<double>(n);
    if (n >= 2) {
        double sq = 0.0;
        for (double v : batch.final_bests) sq += (v - r.mean) * (v - r.mean);
        r.sd = std::sqrt(sq / static_cast<double>(n - 1));
    }
    r.best = *std::min_element(batch.final_bests.begin(), batch.final_bests.end());
    r.worst = *std::max_element(batch.final_bests.begin(), batch.final_bests.end());
    if (!batch.runtimes.empty())
        r.avg_runtime = std::accumulate(batch.runtimes.begin(), batch.runtimes.end(), 0.0) /
                        static_cast<double>(batch.runtimes.size());
    if (batch.success_threshold) {
        int ok = 0;
        for (double v : batch.final_bests)
            if (v <= *batch.success_threshold) ++ok;
        r.n_success = ok;
        r.n_failure = static_cast<int>(n) - ok;
    }
    return r;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    double alpha, WilcoxonMethod method) {
    if (a.size() != b.size())
        throw std::invalid_argument("wilcoxon_signed_rank: samples must be paired");
    if (a.empty()) throw std::invalid_argument("wilcoxon_signed_rank: empty samples");

    WilcoxonResult result;
    result.alpha = alpha;

    std::vector<double> diffs;
    diffs.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) diffs.push_back(d);
    }
    result.n_effective = static_cast<int>(diffs.size());
    if (diffs.empty()) {
        result.p_value = 1.0;
        result.win = WilcoxonWin::tie;
        return result;
    }

    // average ranks over |d|
    const std::size_t n = diffs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&diffs](std::size_t i, std::size_t j) {
        return std::fabs(diffs[i]) < std::fabs(diffs[j]);
    });
    std::vector<double> ranks(n, 0.0);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && std::fabs(diffs[order[j]]) == std::fabs(diffs[order[i]])) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // mean of i+1 .. j
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg_rank;
        i = j;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (diffs[i] > 0.0)
            result.t_plus += ranks[i];
        else
            result.t_minus += ranks[i];
    }

    const bool use_exact = method == WilcoxonMethod::exact ||
                           (method == WilcoxonMethod::automatic && n <= 12);
    result.p_value = use_exact ? exact_two_sided_p(ranks, result.t_plus)
                               : approx_two_sided_p(ranks, result.t_plus);

    if (result.p_value >= alpha) {
        result.win = WilcoxonWin::tie;
    } else {
        // smaller median wins (minimization); rank sums break exact ties
        const double med_a = median_of(std::vector<double>(a.begin(), a.end()));
        const double med_b = median_of(std::vector<double>(b.begin(), b.end()));
        if (med_a < med_b)
            result.win = WilcoxonWin::plus;
        else if (med_a > med_b)
            result.win = WilcoxonWin::minus;
        else
            result.win = result.t_plus < result.t_minus ? WilcoxonWin::plus : WilcoxonWin::minus;
    }
    return result;
}

ComparisonTable compare_algorithms(
    const std::map<std::string, std::map<std::string, RunBatch>>& batches_by_algorithm,
    const std::string& reference, double alpha) {
    auto ref_it = batches_by_algorithm.find(reference);
    if (ref_it == batches_by_algorithm.end())
        throw std::invalid_argument("compare_algorithms: missing reference algorithm " + reference);

    ComparisonTable table;
    table.reference = reference;
    for (const auto& [algo, problems] : batches_by_algorithm) {
        if (algo == reference) continue;
        ChallengerSummary summary;
        summary.challenger = algo;
        for (const auto& [problem, ref_batch] : ref_it->second) {
            auto it = problems.find(problem);
            if (it == problems.end())
                throw std::invalid_argument("compare_algorithms: missing batch for " + algo +
                                            " on " + problem);
            PairwiseRow row;
            row.problem = problem;
            row.result =
                wilcoxon_signed_rank(ref_batch.final_bests, it->second.final_bests, alpha);
            switch (row.result.win) {
                case WilcoxonWin::plus: ++summary.wins; break;
                case WilcoxonWin::minus: ++summary.losses; break;
                default: ++summary.ties; break;
            }
            summary.rows.push_back(std::move(row));
        }
        table.challengers.push_back(std::move(summary));
    }
    return table;
}

}  // namespace fdo
