#pragma once

// Independent reference computations used only by tests. Nothing here may
// call into the code paths it checks.

#include "perfmatrix/metrics.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace perfmatrix::oracle {

/// Largest h with at least h counts >= h, by exhaustive counting (no sort).
inline Count brute_force_h(const std::vector<Count>& counts)
{
    Count best = 0;
    for (Count h = 1; h <= static_cast<Count>(counts.size()); ++h) {
        Count at_least = 0;
        for (Count c : counts) {
            if (c >= h)
                ++at_least;
        }
        if (at_least >= h)
            best = h;
    }
    return best;
}

/// max over i of min(i, c_(i)) on a selection-sorted copy.
inline Count min_rank_h(std::vector<Count> counts)
{
    for (std::size_t i = 0; i < counts.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < counts.size(); ++j) {
            if (counts[j] > counts[best])
                best = j;
        }
        std::swap(counts[i], counts[best]);
    }
    Count h = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        h = std::max(h, std::min(static_cast<Count>(i + 1), counts[i]));
    return h;
}

/// Two-tailed Student-t tail probability by composite Simpson quadrature of
/// the density over [0, |t|].
inline double t_two_tailed_quadrature(double t, double df, int intervals = 200000)
{
    const double norm = std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2))
                        / std::sqrt(df * std::acos(-1.0));
    auto pdf = [&](double x) { return norm * std::pow(1.0 + x * x / df, -(df + 1) / 2); };
    const double a = 0.0, b = std::abs(t);
    const double step = (b - a) / intervals;
    double sum = pdf(a) + pdf(b);
    for (int i = 1; i < intervals; ++i)
        sum += (i % 2 ? 4.0 : 2.0) * pdf(a + i * step);
    const double half_mass = sum * step / 3.0;
    return 1.0 - 2.0 * half_mass;
}

/// Citation counts of length 1..max_len with values 0..max_count, mixing a
/// flat, a skewed, and a zero-heavy regime.
inline std::vector<Count> random_counts(std::mt19937_64& rng, int max_len = 500, int max_count = 1000)
{
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> regime_dist(0, 2);
    const int len = len_dist(rng);
    const int regime = regime_dist(rng);
    std::vector<Count> counts(static_cast<std::size_t>(len));
    std::uniform_int_distribution<int> flat(0, max_count);
    std::exponential_distribution<double> skew(1.0 / 12.0);
    std::bernoulli_distribution zero(0.6);
    for (auto& c : counts) {
        switch (regime) {
        case 0: c = flat(rng); break;
        case 1: c = std::min<Count>(max_count, static_cast<Count>(skew(rng))); break;
        default: c = zero(rng) ? 0 : std::min<Count>(max_count, static_cast<Count>(skew(rng))); break;
        }
    }
    return counts;
}

/// Relative agreement with a scale floor so that values that cancel to
/// near zero are judged against the magnitude of their terms.
inline bool close_rel(double a, double b, double rel, double scale = 0.0)
{
    const double ref = std::max({std::abs(a), std::abs(b), scale});
    return std::abs(a - b) <= rel * ref;
}

} // namespace perfmatrix::oracle
