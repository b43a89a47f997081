#pragma once

// Entity datasets: summary CSV (`name,P,h,Pz,C,Ch`), citations CSV
// (`name,citations` with `;`-separated counts) and a JSON mirror of both.

#include "perfmatrix/metrics.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace perfmatrix {

enum class DatasetFormat { summary_csv, citations_csv, json };

std::string_view to_string(DatasetFormat f) noexcept;

struct DatasetRecord {
    std::variant<SummaryRecord, CitationList> data;
    std::string group;

    const std::string& name() const;
    /// Partition of either record kind.
    Partition partition() const;
    SummaryRecord summary() const;
};

struct Provenance {
    std::string source;
    std::string window;  ///< free text, e.g. "2009-2010"
};

struct DatasetFile {
    DatasetFormat format = DatasetFormat::summary_csv;
    std::vector<DatasetRecord> records;
    Provenance provenance;
};

/// Header must be exactly `name,P,h,Pz,C,Ch`. Errors carry the line number.
DatasetFile parse_summary_csv(std::string_view text, Provenance provenance = {});

DatasetFile parse_citations_csv(std::string_view text, Provenance provenance = {});

/// Either a bare array of records or `{"window": ..., "records": [...]}`.
/// Objects with a `citations` field are citation lists, otherwise summaries.
DatasetFile parse_json(std::string_view text, Provenance provenance = {});

DatasetFile parse_dataset(std::string_view text, DatasetFormat format, Provenance provenance = {});

/// Serializers. The CSV writers reject records of the other kind.
std::string to_summary_csv(const DatasetFile& data);
std::string to_citations_csv(const DatasetFile& data);
std::string to_json(const DatasetFile& data);

/// RFC 4180 style field splitting (quotes, doubled quotes). Exposed for the
/// CLI metric-file reader.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number);

/// Splits text into lines, dropping a UTF-8 BOM and trailing CR.
std::vector<std::string_view> split_lines(std::string_view text);

std::string csv_escape(std::string_view field);

} // namespace perfmatrix
