#pragma once

// h-index and the core / tail / uncited partition of a document set.
//
// A set of P documents ranked by citations splits into three publication
// classes (h-core, h-tail, uncited) and three citation classes (the h*h
// base square under the core, the excess above it, and the tail mass).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace perfmatrix {

using Count = std::int64_t;

/// Per-document citation counts for one entity. Order is irrelevant.
class CitationList {
public:
    /// Throws ValidationError on an empty list or a negative count.
    CitationList(std::string name, std::vector<Count> counts);

    const std::string& name() const noexcept { return name_; }
    std::span<const Count> counts() const noexcept { return counts_; }
    Count size() const noexcept { return static_cast<Count>(counts_.size()); }

    friend bool operator==(const CitationList&, const CitationList&) = default;

private:
    std::string name_;
    std::vector<Count> counts_;
};

/// The five independent numbers (P, Pz, h, C, Ch) describing a set.
struct SummaryRecord {
    std::string name;
    Count P = 0;   ///< publications
    Count Pz = 0;  ///< uncited publications
    Count h = 0;   ///< h-index
    Count C = 0;   ///< citations
    Count Ch = 0;  ///< citations received by the h-core

    friend bool operator==(const SummaryRecord&, const SummaryRecord&) = default;
};

/// Returns the first violated invariant of `rec`, or an empty string.
std::string summary_violation(const SummaryRecord& rec);

/// Throws ValidationError naming the violated invariant.
void validate(const SummaryRecord& rec);

struct Partition {
    Count Pc = 0;  ///< h-core publications (= h)
    Count Pt = 0;  ///< h-tail publications
    Count Pz = 0;  ///< uncited publications
    Count Cc = 0;  ///< base core citations (= h^2)
    Count Ce = 0;  ///< excess core citations
    Count Ct = 0;  ///< h-tail citations
    Count Ch = 0;  ///< all core citations (= Cc + Ce)
    Count P = 0;
    Count C = 0;

    friend bool operator==(const Partition&, const Partition&) = default;
};

Count h_index(const CitationList& list);

Partition partition_from_list(const CitationList& list);

/// Throws ValidationError if `rec` is not a possible record.
Partition partition_from_summary(const SummaryRecord& rec);

/// Collapses a full list to its five-number summary.
SummaryRecord summarize(const CitationList& list);

/// Soft checks: every cited tail paper carries between 1 and h citations,
/// so Pt <= Ct <= Pc*Pt. Never throws.
std::vector<std::string> plausibility_warnings(const Partition& part);

} // namespace perfmatrix
