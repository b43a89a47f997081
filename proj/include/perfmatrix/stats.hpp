#pragma once

// Ranking of evaluated entities and Pearson / Spearman correlation between
// indicator columns.

#include "perfmatrix/indicators.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace perfmatrix {

/// One entity after indicator evaluation.
struct EntityResult {
    std::string name;
    std::string group;
    Partition partition;
    PerformanceMatrix matrix;
    IndicatorBundle bundle;

    double value(Indicator id) const noexcept { return indicator_value(id, matrix, bundle); }
};

EntityResult evaluate(std::string name, std::string group, const Partition& part);

enum class SortOrder { descending, ascending };

struct RankTable {
    std::vector<EntityResult> rows;
    Indicator sort_key = Indicator::T;
    SortOrder order = SortOrder::descending;
};

using EntityFilter = std::function<bool(const EntityResult&)>;

/// Filters, then sorts by `key` (stable on ties by name, lexicographic).
/// Throws UnknownIndicator for an unrecognized key.
RankTable rank_entities(std::vector<EntityResult> entities, std::string_view key,
                        const EntityFilter& filter = {},
                        SortOrder order = SortOrder::descending);

RankTable rank_entities(std::vector<EntityResult> entities, Indicator key,
                        const EntityFilter& filter = {},
                        SortOrder order = SortOrder::descending);

/// Sample Pearson correlation. Throws LengthMismatch, or DegenerateInput
/// when n < 2 or either sequence is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// 1-based average ranks; tied values share the mean of their positions.
std::vector<double> midranks(std::span<const double> values);

/// Pearson correlation of midranks.
double spearman(std::span<const double> x, std::span<const double> y);

/// Two-tailed p for a correlation coefficient via t = r*sqrt((n-2)/(1-r^2))
/// on n-2 degrees of freedom. |r| >= 1 yields 0. Throws DegenerateInput
/// when n < 3.
double significance(double r, std::size_t n);

/// "**" for p < .01, "*" for p < .05, otherwise empty.
std::string significance_stars(double p);

struct CorrelationPair {
    std::string a;
    std::string b;
    std::size_t n = 0;
    double pearson_r = 0;
    double spearman_rho = 0;
    std::optional<double> p_pearson;   ///< present when n >= 3
    std::optional<double> p_spearman;
};

struct CorrelationReport {
    std::vector<CorrelationPair> pairs;
};

struct NamedColumn {
    std::string name;
    std::vector<double> values;
};

/// Every unordered pair (i < j) of `columns`, in input order.
CorrelationReport correlate_columns(std::span<const NamedColumn> columns);

} // namespace perfmatrix
