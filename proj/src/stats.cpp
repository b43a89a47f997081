#include "perfmatrix/stats.hpp"

#include "perfmatrix/errors.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace perfmatrix {

EntityResult evaluate(std::string name, std::string group, const Partition& part)
{
    EntityResult r;
    r.name = std::move(name);
    r.group = std::move(group);
    r.partition = part;
    r.matrix = performance_matrix(part);
    r.bundle = indicator_bundle(part);
    return r;
}

RankTable rank_entities(std::vector<EntityResult> entities, std::string_view key,
                        const EntityFilter& filter, SortOrder order)
{
    return rank_entities(std::move(entities), parse_indicator(key), filter, order);
}

RankTable rank_entities(std::vector<EntityResult> entities, Indicator key,
                        const EntityFilter& filter, SortOrder order)
{
    RankTable table;
    table.sort_key = key;
    table.order = order;
    if (filter) {
        std::erase_if(entities, [&](const EntityResult& e) { return !filter(e); });
    }
    std::stable_sort(entities.begin(), entities.end(),
                     [&](const EntityResult& a, const EntityResult& b) {
                         const double va = a.value(key);
                         const double vb = b.value(key);
                         if (va != vb)
                             return order == SortOrder::descending ? va > vb : va < vb;
                         return a.name < b.name;
                     });
    table.rows = std::move(entities);
    return table;
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw LengthMismatch("correlation: sequences of length " + std::to_string(x.size())
                             + " and " + std::to_string(y.size()));
    if (x.size() < 2)
        throw DegenerateInput("correlation: need at least 2 pairs");
}

} // namespace

double pearson(std::span<const double> x, std::span<const double> y)
{
    check_pair(x, y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateInput("correlation: zero variance");
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<double> midranks(std::span<const double> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]])
            ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y)
{
    check_pair(x, y);
    const auto rx = midranks(x);
    const auto ry = midranks(y);
    return pearson(rx, ry);
}

double significance(double r, std::size_t n)
{
    if (n < 3)
        throw DegenerateInput("significance: need n >= 3 (n=" + std::to_string(n) + ")");
    if (std::abs(r) >= 1.0)
        return 0.0;
    const double df = static_cast<double>(n - 2);
    const double t = std::abs(r) * std::sqrt(df / (1.0 - r * r));
    const boost::math::students_t dist(df);
    return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, t)));
}

std::string significance_stars(double p)
{
    if (p < 0.01)
        return "**";
    if (p < 0.05)
        return "*";
    return {};
}

CorrelationReport correlate_columns(std::span<const NamedColumn> columns)
{
    CorrelationReport report;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t j = i + 1; j < columns.size(); ++j) {
            CorrelationPair pair;
            pair.a = columns[i].name;
            pair.b = columns[j].name;
            pair.n = columns[i].values.size();
            pair.pearson_r = pearson(columns[i].values, columns[j].values);
            pair.spearman_rho = spearman(columns[i].values, columns[j].values);
            if (pair.n >= 3) {
                pair.p_pearson = significance(pair.pearson_r, pair.n);
                pair.p_spearman = significance(pair.spearman_rho, pair.n);
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

} // namespace perfmatrix
