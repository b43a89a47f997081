#pragma once

// Compiled-in reference data: the journal, university and author summary
// records, together with the published matrix values they must reproduce.

#include "perfmatrix/indicators.hpp"
#include "perfmatrix/metrics.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace perfmatrix {

struct CorpusEntry {
    SummaryRecord record;
    std::string group;   ///< "LIS", "multidisciplinary", "university" or "author"
    std::string window;  ///< citation window the record was collected for
};

/// A published value kept as printed ("0.68", "176719", "-2044") so that its
/// displayed precision survives.
struct GoldenCell {
    std::string text;  ///< empty when the cell was not published
    double value = 0;
    int decimals = 0;

    static GoldenCell parse(std::string text);

    bool present() const noexcept { return !text.empty(); }
    /// Half a unit in the last displayed decimal place.
    double tolerance() const noexcept;
    bool matches(double computed) const noexcept;
};

struct GoldenRow {
    std::string set;     ///< "journal-top", "university", "author", "worked-matrix"
    std::string entity;
    int rank = 0;        ///< published position within the entity's group, 0 if unranked
    std::array<GoldenCell, 10> cells;  ///< X1..Z3 then T, in kMatrixCells order
};

struct ReferenceCorpus {
    std::vector<CorpusEntry> journals_2y;
    std::vector<CorpusEntry> other_units;
    std::vector<GoldenRow> expected;

    /// Throws std::out_of_range if absent.
    const CorpusEntry& entry(std::string_view name) const;
    std::vector<CorpusEntry> all_entries() const;
};

/// The embedded corpus. Deterministic; built once.
const ReferenceCorpus& reference_corpus();

/// Replaces a golden cell before comparison, for transcription fixes.
struct GoldenOverride {
    std::string set;
    std::string entity;
    Indicator cell = Indicator::T;
    std::string displayed;
};

struct CellCheck {
    std::string set;
    std::string entity;
    std::string cell;       ///< "X1".."Z3", "T" or "rank"
    std::string displayed;
    double computed = 0;
    double tolerance = 0;
    bool pass = false;
};

struct ReferenceReport {
    std::vector<CellCheck> checks;
    std::size_t failures = 0;

    bool ok() const noexcept { return failures == 0 && !checks.empty(); }
};

/// Recomputes every golden entity from its summary record, compares each
/// published cell under the displayed-precision rule, and checks the
/// published rank of each ranked row against the trace ordering of its group.
ReferenceReport validate_reference(const ReferenceCorpus& corpus,
                                   std::span<const GoldenOverride> overrides = {});

} // namespace perfmatrix
