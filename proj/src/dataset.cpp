#include "perfmatrix/dataset.hpp"

#include "perfmatrix/errors.hpp"

#include "json.hpp"

#include <charconv>
#include <set>

namespace perfmatrix {

using nlohmann::json;

std::string_view to_string(DatasetFormat f) noexcept
{
    switch (f) {
    case DatasetFormat::summary_csv: return "summary";
    case DatasetFormat::citations_csv: return "citations";
    case DatasetFormat::json: return "json";
    }
    return "?";
}

const std::string& DatasetRecord::name() const
{
    return std::visit([](const auto& r) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, SummaryRecord>)
            return r.name;
        else
            return r.name();
    }, data);
}

Partition DatasetRecord::partition() const
{
    return std::visit([](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, SummaryRecord>)
            return partition_from_summary(r);
        else
            return partition_from_list(r);
    }, data);
}

SummaryRecord DatasetRecord::summary() const
{
    return std::visit([](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, SummaryRecord>)
            return r;
        else
            return summarize(r);
    }, data);
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    if (text.starts_with("\xEF\xBB\xBF"))
        text.remove_prefix(3);
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (line.ends_with('\r'))
            line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

Count parse_count(std::string_view field, std::string_view column, std::size_t line)
{
    field = trim(field);
    Count value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end || value < 0)
        throw ParseError(at_line(line) + "column " + std::string(column) + ": '" + std::string(field)
                         + "' is not a non-negative integer");
    return value;
}

void check_header(std::string_view line, const std::vector<std::string>& expected)
{
    const auto fields = split_csv_line(line, 1);
    std::vector<std::string> trimmed;
    for (const auto& f : fields)
        trimmed.emplace_back(trim(f));
    if (trimmed != expected) {
        std::string want;
        for (const auto& e : expected)
            want += (want.empty() ? "" : ",") + e;
        throw ParseError(at_line(1) + "header must be exactly '" + want + "', got '" + std::string(line) + "'");
    }
}

void ensure_unique(std::set<std::string>& seen, const std::string& name, std::size_t line)
{
    if (name.empty())
        throw ParseError(at_line(line) + "empty entity name");
    if (!seen.insert(name).second)
        throw DuplicateEntity(at_line(line) + "duplicate entity '" + name + "'");
}

SummaryRecord checked_summary(SummaryRecord rec, const std::string& where)
{
    if (auto v = summary_violation(rec); !v.empty())
        throw ValidationError(where + "record '" + rec.name + "' violates " + v);
    return rec;
}

std::vector<Count> parse_count_list(std::string_view cell, std::size_t line)
{
    cell = trim(cell);
    if (cell.empty())
        throw ParseError(at_line(line) + "empty citation list");
    std::vector<Count> counts;
    while (true) {
        const auto semi = cell.find(';');
        counts.push_back(parse_count(cell.substr(0, semi), "citations", line));
        if (semi == std::string_view::npos)
            break;
        cell.remove_prefix(semi + 1);
    }
    return counts;
}

} // namespace

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number)
{
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && trim(current).empty() && !was_quoted) {
            current.clear();
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
            was_quoted = false;
        } else {
            current += c;
        }
    }
    if (quoted)
        throw ParseError(at_line(line_number) + "unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(std::string_view field)
{
    const bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos
                              || (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

DatasetFile parse_summary_csv(std::string_view text, Provenance provenance)
{
    const auto lines = split_lines(text);
    if (lines.empty() || is_blank(lines.front()))
        throw ParseError(at_line(1) + "missing header 'name,P,h,Pz,C,Ch'");
    check_header(lines.front(), {"name", "P", "h", "Pz", "C", "Ch"});

    DatasetFile file;
    file.format = DatasetFormat::summary_csv;
    file.provenance = std::move(provenance);
    std::set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (is_blank(lines[i]))
            continue;
        const auto fields = split_csv_line(lines[i], line_no);
        if (fields.size() != 6)
            throw ParseError(at_line(line_no) + "expected 6 fields, got " + std::to_string(fields.size()));
        SummaryRecord rec;
        rec.name = std::string(trim(fields[0]));
        rec.P = parse_count(fields[1], "P", line_no);
        rec.h = parse_count(fields[2], "h", line_no);
        rec.Pz = parse_count(fields[3], "Pz", line_no);
        rec.C = parse_count(fields[4], "C", line_no);
        rec.Ch = parse_count(fields[5], "Ch", line_no);
        ensure_unique(seen, rec.name, line_no);
        file.records.push_back({checked_summary(std::move(rec), at_line(line_no)), {}});
    }
    return file;
}

DatasetFile parse_citations_csv(std::string_view text, Provenance provenance)
{
    const auto lines = split_lines(text);
    if (lines.empty() || is_blank(lines.front()))
        throw ParseError(at_line(1) + "missing header 'name,citations'");
    check_header(lines.front(), {"name", "citations"});

    DatasetFile file;
    file.format = DatasetFormat::citations_csv;
    file.provenance = std::move(provenance);
    std::set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (is_blank(lines[i]))
            continue;
        const auto fields = split_csv_line(lines[i], line_no);
        if (fields.size() != 2)
            throw ParseError(at_line(line_no) + "expected 2 fields, got " + std::to_string(fields.size()));
        std::string name(trim(fields[0]));
        auto counts = parse_count_list(fields[1], line_no);
        ensure_unique(seen, name, line_no);
        file.records.push_back({CitationList(std::move(name), std::move(counts)), {}});
    }
    return file;
}

namespace {

Count json_count(const json& obj, const char* key, std::size_t index)
{
    const std::string where = "record " + std::to_string(index) + ": ";
    if (!obj.contains(key))
        throw ParseError(where + "missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ParseError(where + "field '" + key + "' must be a non-negative integer");
    return v.get<Count>();
}

} // namespace

DatasetFile parse_json(std::string_view text, Provenance provenance)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    const json* records = &doc;
    if (doc.is_object()) {
        if (doc.contains("window") && doc.at("window").is_string() && provenance.window.empty())
            provenance.window = doc.at("window").get<std::string>();
        if (!doc.contains("records"))
            throw ParseError("JSON object must contain a 'records' array");
        records = &doc.at("records");
    }
    if (!records->is_array())
        throw ParseError("JSON dataset must be an array of records");

    DatasetFile file;
    file.format = DatasetFormat::json;
    file.provenance = std::move(provenance);
    std::set<std::string> seen;
    std::size_t index = 0;
    for (const json& obj : *records) {
        ++index;
        const std::string where = "record " + std::to_string(index) + ": ";
        if (!obj.is_object())
            throw ParseError(where + "expected an object");
        if (!obj.contains("name") || !obj.at("name").is_string())
            throw ParseError(where + "missing string field 'name'");
        std::string name = obj.at("name").get<std::string>();
        std::string group;
        if (obj.contains("group")) {
            if (!obj.at("group").is_string())
                throw ParseError(where + "field 'group' must be a string");
            group = obj.at("group").get<std::string>();
        }
        if (name.empty())
            throw ParseError(where + "empty entity name");
        if (!seen.insert(name).second)
            throw DuplicateEntity(where + "duplicate entity '" + name + "'");

        if (obj.contains("citations")) {
            const json& c = obj.at("citations");
            std::vector<Count> counts;
            if (c.is_string()) {
                counts = parse_count_list(c.get<std::string>(), index);
            } else if (c.is_array()) {
                for (const json& v : c) {
                    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                        throw ParseError(where + "citations must be non-negative integers");
                    counts.push_back(v.get<Count>());
                }
                if (counts.empty())
                    throw ParseError(where + "empty citation list");
            } else {
                throw ParseError(where + "'citations' must be an array or a ';'-separated string");
            }
            file.records.push_back({CitationList(std::move(name), std::move(counts)), std::move(group)});
        } else {
            SummaryRecord rec;
            rec.name = std::move(name);
            rec.P = json_count(obj, "P", index);
            rec.h = json_count(obj, "h", index);
            rec.Pz = json_count(obj, "Pz", index);
            rec.C = json_count(obj, "C", index);
            rec.Ch = json_count(obj, "Ch", index);
            file.records.push_back({checked_summary(std::move(rec), where), std::move(group)});
        }
    }
    return file;
}

DatasetFile parse_dataset(std::string_view text, DatasetFormat format, Provenance provenance)
{
    switch (format) {
    case DatasetFormat::summary_csv: return parse_summary_csv(text, std::move(provenance));
    case DatasetFormat::citations_csv: return parse_citations_csv(text, std::move(provenance));
    case DatasetFormat::json: return parse_json(text, std::move(provenance));
    }
    throw ParseError("unknown dataset format");
}

std::string to_summary_csv(const DatasetFile& data)
{
    std::string out = "name,P,h,Pz,C,Ch\n";
    for (const auto& rec : data.records) {
        const auto* s = std::get_if<SummaryRecord>(&rec.data);
        if (!s)
            throw ParseError("summary CSV cannot hold citation list '" + rec.name() + "'");
        out += csv_escape(s->name) + ',' + std::to_string(s->P) + ',' + std::to_string(s->h) + ','
               + std::to_string(s->Pz) + ',' + std::to_string(s->C) + ',' + std::to_string(s->Ch) + '\n';
    }
    return out;
}

std::string to_citations_csv(const DatasetFile& data)
{
    std::string out = "name,citations\n";
    for (const auto& rec : data.records) {
        const auto* list = std::get_if<CitationList>(&rec.data);
        if (!list)
            throw ParseError("citations CSV cannot hold summary record '" + rec.name() + "'");
        std::string cell;
        for (Count c : list->counts())
            cell += (cell.empty() ? "" : ";") + std::to_string(c);
        out += csv_escape(list->name()) + ',' + cell + '\n';
    }
    return out;
}

std::string to_json(const DatasetFile& data)
{
    json records = json::array();
    for (const auto& rec : data.records) {
        json obj;
        if (const auto* s = std::get_if<SummaryRecord>(&rec.data)) {
            obj = {{"name", s->name}, {"P", s->P}, {"h", s->h}, {"Pz", s->Pz}, {"C", s->C}, {"Ch", s->Ch}};
        } else {
            const auto& list = std::get<CitationList>(rec.data);
            obj = {{"name", list.name()},
                   {"citations", std::vector<Count>(list.counts().begin(), list.counts().end())}};
        }
        if (!rec.group.empty())
            obj["group"] = rec.group;
        records.push_back(std::move(obj));
    }
    if (data.provenance.window.empty())
        return records.dump(2) + "\n";
    json doc = {{"window", data.provenance.window}, {"records", std::move(records)}};
    return doc.dump(2) + "\n";
}

} // namespace perfmatrix
