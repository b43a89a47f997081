#include "perfmatrix/metrics.hpp"

#include "perfmatrix/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace perfmatrix {

CitationList::CitationList(std::string name, std::vector<Count> counts)
    : name_(std::move(name)), counts_(std::move(counts))
{
    if (counts_.empty())
        throw ValidationError("citation list '" + name_ + "' is empty");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0)
            throw ValidationError("citation list '" + name_ + "' has a negative count at position "
                                  + std::to_string(i + 1));
    }
}

namespace {

std::vector<Count> sorted_descending(std::span<const Count> counts)
{
    std::vector<Count> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return sorted;
}

Count h_of_sorted(const std::vector<Count>& sorted)
{
    Count h = 0;
    while (h < static_cast<Count>(sorted.size()) && sorted[static_cast<std::size_t>(h)] >= h + 1)
        ++h;
    return h;
}

} // namespace

Count h_index(const CitationList& list)
{
    return h_of_sorted(sorted_descending(list.counts()));
}

Partition partition_from_list(const CitationList& list)
{
    const auto sorted = sorted_descending(list.counts());
    const Count h = h_of_sorted(sorted);

    Partition part;
    part.P = static_cast<Count>(sorted.size());
    part.C = std::accumulate(sorted.begin(), sorted.end(), Count{0});
    part.Pc = h;
    part.Pz = std::count(sorted.begin(), sorted.end(), Count{0});
    part.Pt = part.P - part.Pc - part.Pz;
    // Documents tied at the boundary value are interchangeable: Ch sums equal values.
    part.Ch = std::accumulate(sorted.begin(), sorted.begin() + h, Count{0});
    part.Cc = h * h;
    part.Ce = part.Ch - part.Cc;
    part.Ct = part.C - part.Ch;
    return part;
}

std::string summary_violation(const SummaryRecord& r)
{
    if (r.P < 1)
        return "P >= 1 (P=" + std::to_string(r.P) + ")";
    if (r.Pz < 0 || r.h < 0 || r.C < 0 || r.Ch < 0)
        return "all fields >= 0";
    if (r.h > r.P)
        return "h <= P (h=" + std::to_string(r.h) + ", P=" + std::to_string(r.P) + ")";
    if (r.Pz > r.P - r.h)
        return "Pz <= P - h (Pz=" + std::to_string(r.Pz) + ", P-h=" + std::to_string(r.P - r.h) + ")";
    if (r.Ch < r.h * r.h)
        return "Ch >= h^2 (Ch=" + std::to_string(r.Ch) + ", h^2=" + std::to_string(r.h * r.h) + ")";
    if (r.Ch > r.C)
        return "Ch <= C (Ch=" + std::to_string(r.Ch) + ", C=" + std::to_string(r.C) + ")";
    if (r.h == 0 && (r.C != 0 || r.Ch != 0))
        return "h = 0 implies C = 0 and Ch = 0 (C=" + std::to_string(r.C) + ")";
    return {};
}

void validate(const SummaryRecord& rec)
{
    if (auto v = summary_violation(rec); !v.empty())
        throw ValidationError("record '" + rec.name + "' violates " + v);
}

Partition partition_from_summary(const SummaryRecord& rec)
{
    validate(rec);
    Partition part;
    part.P = rec.P;
    part.C = rec.C;
    part.Pc = rec.h;
    part.Pz = rec.Pz;
    part.Pt = rec.P - rec.h - rec.Pz;
    part.Cc = rec.h * rec.h;
    part.Ch = rec.Ch;
    part.Ce = rec.Ch - part.Cc;
    part.Ct = rec.C - rec.Ch;
    return part;
}

SummaryRecord summarize(const CitationList& list)
{
    const Partition part = partition_from_list(list);
    return SummaryRecord{list.name(), part.P, part.Pz, part.Pc, part.C, part.Ch};
}

std::vector<std::string> plausibility_warnings(const Partition& part)
{
    std::vector<std::string> warnings;
    if (part.Ct < part.Pt)
        warnings.push_back("tail citations Ct=" + std::to_string(part.Ct)
                           + " below tail size Pt=" + std::to_string(part.Pt)
                           + " (each cited tail paper needs >= 1 citation)");
    if (part.Ct > part.Pc * part.Pt)
        warnings.push_back("tail citations Ct=" + std::to_string(part.Ct)
                           + " above Pc*Pt=" + std::to_string(part.Pc * part.Pt)
                           + " (each tail paper has at most h citations)");
    return warnings;
}

} // namespace perfmatrix
