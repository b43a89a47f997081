#include "cli.hpp"

#include "perfmatrix/dataset.hpp"
#include "perfmatrix/errors.hpp"
#include "perfmatrix/format.hpp"
#include "perfmatrix/reference.hpp"
#include "perfmatrix/stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace perfmatrix::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
    std::string input;
    bool reference = false;
    std::string format;
    std::string output = "table";
    std::string key = "T";
    bool positive_only = false;
    bool mask_x3 = false;
    int precision = 4;
    std::string group;
    std::string metric_file;
    std::string metric_column;
    std::string window;
    std::size_t top = 0;
    std::vector<std::string> columns;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DatasetFormat resolve_format(const Config& cfg)
{
    if (cfg.format == "summary")
        return DatasetFormat::summary_csv;
    if (cfg.format == "citations")
        return DatasetFormat::citations_csv;
    if (cfg.format == "json")
        return DatasetFormat::json;
    if (cfg.format.empty())
        return cfg.input.ends_with(".json") ? DatasetFormat::json : DatasetFormat::summary_csv;
    throw UsageError("unknown --format '" + cfg.format + "'");
}

void require_one_source(const Config& cfg)
{
    if (cfg.input.empty() == !cfg.reference)
        throw UsageError("exactly one input source is required: --input PATH or --reference");
}

std::vector<EntityResult> load_entities(const Config& cfg, std::ostream& err)
{
    require_one_source(cfg);
    std::vector<EntityResult> entities;
    auto add = [&](const std::string& name, const std::string& group, const Partition& part) {
        if (!cfg.group.empty() && cfg.group != group)
            return;
        for (const auto& w : plausibility_warnings(part))
            err << "warning: " << name << ": " << w << '\n';
        entities.push_back(evaluate(name, group, part));
    };

    if (cfg.reference) {
        for (const auto& e : reference_corpus().all_entries())
            add(e.record.name, e.group, partition_from_summary(e.record));
        return entities;
    }
    const std::string text = read_file(cfg.input);
    const DatasetFile data = parse_dataset(text, resolve_format(cfg), {cfg.input, cfg.window});
    for (const auto& rec : data.records)
        add(rec.name(), rec.group, rec.partition());
    return entities;
}

// Human-readable, right-aligned table. The first column is left-aligned.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void render(std::ostream& out) const
    {
        std::vector<std::size_t> width(headers_.size(), 0);
        auto widen = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        };
        widen(headers_);
        for (const auto& r : rows_)
            widen(r);
        auto line = [&](const std::vector<std::string>& row) {
            std::string text;
            for (std::size_t i = 0; i < row.size(); ++i) {
                const std::string pad(width[i] - row[i].size(), ' ');
                if (i > 0)
                    text += "  ";
                text += i == 0 ? row[i] + pad : pad + row[i];
            }
            while (!text.empty() && text.back() == ' ')
                text.pop_back();
            out << text << '\n';
        };
        line(headers_);
        for (const auto& r : rows_)
            line(r);
    }

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

bool masked(Indicator id, const Config& cfg) { return cfg.mask_x3 && id == Indicator::X3; }

std::vector<std::string> csv_header(bool with_rank)
{
    std::vector<std::string> h;
    if (with_rank)
        h.emplace_back("rank");
    for (const char* c : {"name", "group", "P", "Pz", "h", "C", "Ch"})
        h.emplace_back(c);
    for (Indicator id : kMatrixCells)
        h.emplace_back(to_string(id));
    for (const char* c : {"I3X", "I3Y", "sign"})
        h.emplace_back(c);
    return h;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? "," : "") << csv_escape(fields[i]);
    out << '\n';
}

std::vector<std::string> csv_fields(const EntityResult& e, const Config& cfg, std::size_t rank)
{
    std::vector<std::string> f;
    if (rank > 0)
        f.push_back(std::to_string(rank));
    const Partition& p = e.partition;
    f.push_back(e.name);
    f.push_back(e.group);
    for (Count c : {p.P, p.Pz, p.Pc, p.C, p.Ch})
        f.push_back(std::to_string(c));
    for (Indicator id : kMatrixCells)
        f.push_back(masked(id, cfg) ? "" : format_full(e.value(id)));
    f.push_back(format_full(e.bundle.I3X));
    f.push_back(format_full(e.bundle.I3Y));
    f.emplace_back(to_string(e.bundle.sign));
    return f;
}

ojson json_entity(const EntityResult& e, const Config& cfg, std::size_t rank)
{
    ojson obj;
    if (rank > 0)
        obj["rank"] = rank;
    obj["name"] = e.name;
    if (!e.group.empty())
        obj["group"] = e.group;
    const Partition& p = e.partition;
    obj["P"] = p.P;
    obj["Pz"] = p.Pz;
    obj["h"] = p.Pc;
    obj["C"] = p.C;
    obj["Ch"] = p.Ch;
    for (Indicator id : kMatrixCells) {
        if (masked(id, cfg))
            obj[std::string(to_string(id))] = nullptr;
        else
            obj[std::string(to_string(id))] = e.value(id);
    }
    obj["I3X"] = e.bundle.I3X;
    obj["I3Y"] = e.bundle.I3Y;
    obj["sign"] = to_string(e.bundle.sign);
    return obj;
}

void emit_entities(std::ostream& out, const std::vector<EntityResult>& entities, const Config& cfg,
                   bool ranked)
{
    if (cfg.output == "csv") {
        write_csv_row(out, csv_header(ranked));
        for (std::size_t i = 0; i < entities.size(); ++i)
            write_csv_row(out, csv_fields(entities[i], cfg, ranked ? i + 1 : 0));
        return;
    }
    if (cfg.output == "json") {
        ojson arr = ojson::array();
        for (std::size_t i = 0; i < entities.size(); ++i)
            arr.push_back(json_entity(entities[i], cfg, ranked ? i + 1 : 0));
        out << arr.dump(2) << '\n';
        return;
    }
    std::vector<std::string> headers = {"name"};
    if (ranked)
        headers.emplace_back("rank");
    headers.emplace_back("h");
    for (Indicator id : kMatrixCells)
        headers.emplace_back(to_string(id));
    headers.emplace_back("I3X");
    headers.emplace_back("I3Y");
    headers.emplace_back("sign");
    TextTable table(headers);
    for (std::size_t i = 0; i < entities.size(); ++i) {
        const EntityResult& e = entities[i];
        std::vector<std::string> row;
        row.push_back(e.name);
        if (ranked)
            row.push_back(std::to_string(i + 1));
        row.push_back(std::to_string(e.bundle.h));
        for (Indicator id : kMatrixCells)
            row.push_back(masked(id, cfg) ? "-" : format_significant(e.value(id), cfg.precision));
        row.push_back(format_significant(e.bundle.I3X, cfg.precision));
        row.push_back(format_significant(e.bundle.I3Y, cfg.precision));
        row.emplace_back(to_string(e.bundle.sign));
        table.add(std::move(row));
    }
    table.render(out);
}

void check_output(const Config& cfg)
{
    if (cfg.output != "table" && cfg.output != "csv" && cfg.output != "json")
        throw UsageError("unknown --output '" + cfg.output + "' (expected table, csv or json)");
}

int cmd_compute(const Config& cfg, std::ostream& out, std::ostream& err)
{
    check_output(cfg);
    emit_entities(out, load_entities(cfg, err), cfg, false);
    return kExitOk;
}

EntityFilter positive_filter(const Config& cfg)
{
    if (!cfg.positive_only)
        return {};
    return [](const EntityResult& e) { return e.bundle.T > 0.0; };
}

int cmd_rank(const Config& cfg, std::ostream& out, std::ostream& err)
{
    check_output(cfg);
    const Indicator key = parse_indicator(cfg.key);
    RankTable table = rank_entities(load_entities(cfg, err), key, positive_filter(cfg));
    if (cfg.top > 0 && table.rows.size() > cfg.top)
        table.rows.resize(cfg.top);
    emit_entities(out, table.rows, cfg, true);
    return kExitOk;
}

struct MetricTable {
    std::vector<std::string> columns;
    std::vector<std::string> names;  ///< file order
    std::map<std::string, std::vector<double>> values;
};

// `name,<metric>[,<metric>...]` with numeric cells.
MetricTable read_metric_file(const std::string& path)
{
    const std::string text = read_file(path);
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError(path + ": empty metric file");
    const auto header = split_csv_line(lines.front(), 1);
    if (header.size() < 2 || header.front() != "name")
        throw ParseError(path + ": line 1: header must be 'name,<metric>[,...]'");

    MetricTable table;
    table.columns.assign(header.begin() + 1, header.end());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (lines[i].find_first_not_of(" \t") == std::string_view::npos)
            continue;
        const auto fields = split_csv_line(lines[i], line_no);
        if (fields.size() != header.size())
            throw ParseError(path + ": line " + std::to_string(line_no) + ": expected "
                             + std::to_string(header.size()) + " fields");
        std::vector<double> row;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            double v = 0;
            const auto& s = fields[c];
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
                throw ParseError(path + ": line " + std::to_string(line_no) + ": '" + s
                                 + "' is not a number");
            row.push_back(v);
        }
        if (!table.values.emplace(fields[0], std::move(row)).second)
            throw DuplicateEntity(path + ": line " + std::to_string(line_no) + ": duplicate entity '"
                                  + fields[0] + "'");
        table.names.push_back(fields[0]);
    }
    return table;
}

std::size_t metric_column_index(const MetricTable& metrics, const std::string& wanted)
{
    if (wanted.empty())
        return 0;
    const auto it = std::find(metrics.columns.begin(), metrics.columns.end(), wanted);
    if (it == metrics.columns.end())
        throw UsageError("metric file has no column '" + wanted + "'");
    return static_cast<std::size_t>(it - metrics.columns.begin());
}

int cmd_correlate(const Config& cfg, std::ostream& out, std::ostream& err)
{
    check_output(cfg);
    std::vector<Indicator> indicator_columns;
    for (const auto& c : cfg.columns.empty() ? std::vector<std::string>{"T"} : cfg.columns)
        indicator_columns.push_back(parse_indicator(c));

    std::vector<EntityResult> entities = load_entities(cfg, err);
    std::sort(entities.begin(), entities.end(),
              [](const EntityResult& a, const EntityResult& b) { return a.name < b.name; });

    std::vector<NamedColumn> columns;
    for (Indicator id : indicator_columns)
        columns.push_back({std::string(to_string(id)), {}});

    if (!cfg.metric_file.empty()) {
        const MetricTable metrics = read_metric_file(cfg.metric_file);
        std::set<std::string> known;
        for (const auto& e : entities)
            known.insert(e.name);
        std::vector<std::string> unknown;
        for (const auto& n : metrics.names) {
            if (!known.contains(n))
                unknown.push_back(n);
        }
        if (!unknown.empty()) {
            std::string list;
            for (const auto& n : unknown)
                list += (list.empty() ? "" : ", ") + n;
            throw JoinError("metric file names not found in input: " + list);
        }
        std::vector<std::size_t> picked;
        if (cfg.metric_column.empty()) {
            for (std::size_t i = 0; i < metrics.columns.size(); ++i)
                picked.push_back(i);
        } else {
            picked.push_back(metric_column_index(metrics, cfg.metric_column));
        }
        for (std::size_t i : picked)
            columns.push_back({metrics.columns[i], {}});

        std::erase_if(entities, [&](const EntityResult& e) {
            if (metrics.values.contains(e.name))
                return false;
            err << "warning: " << e.name << ": no row in metric file, excluded\n";
            return true;
        });
        for (const auto& e : entities) {
            const auto& row = metrics.values.at(e.name);
            for (std::size_t k = 0; k < picked.size(); ++k)
                columns[indicator_columns.size() + k].values.push_back(row[picked[k]]);
        }
    }
    for (std::size_t k = 0; k < indicator_columns.size(); ++k) {
        for (const auto& e : entities)
            columns[k].values.push_back(e.value(indicator_columns[k]));
    }
    if (columns.size() < 2)
        throw UsageError("correlate needs at least two columns (--columns and/or --metric-file)");

    const CorrelationReport report = correlate_columns(columns);
    auto p_text = [](const std::optional<double>& p, bool human) {
        if (!p)
            return std::string();
        if (!human)
            return format_full(*p);
        return *p < 1e-4 ? std::string("<0.0001") : format_significant(*p, 3);
    };
    auto stars = [](const std::optional<double>& p) {
        return p ? significance_stars(*p) : std::string();
    };

    if (cfg.output == "json") {
        ojson arr = ojson::array();
        for (const auto& pr : report.pairs) {
            ojson o;
            o["a"] = pr.a;
            o["b"] = pr.b;
            o["n"] = pr.n;
            o["pearson_r"] = pr.pearson_r;
            o["p_pearson"] = pr.p_pearson ? ojson(*pr.p_pearson) : ojson(nullptr);
            o["pearson_stars"] = stars(pr.p_pearson);
            o["spearman_rho"] = pr.spearman_rho;
            o["p_spearman"] = pr.p_spearman ? ojson(*pr.p_spearman) : ojson(nullptr);
            o["spearman_stars"] = stars(pr.p_spearman);
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    const std::vector<std::string> headers = {"a", "b", "n", "pearson_r", "p_pearson", "pearson_stars",
                                              "spearman_rho", "p_spearman", "spearman_stars"};
    const bool human = cfg.output == "table";
    TextTable table(headers);
    if (!human)
        write_csv_row(out, headers);
    for (const auto& pr : report.pairs) {
        std::vector<std::string> row = {
            pr.a,
            pr.b,
            std::to_string(pr.n),
            human ? format_significant(pr.pearson_r, cfg.precision) : format_full(pr.pearson_r),
            p_text(pr.p_pearson, human),
            stars(pr.p_pearson),
            human ? format_significant(pr.spearman_rho, cfg.precision) : format_full(pr.spearman_rho),
            p_text(pr.p_spearman, human),
            stars(pr.p_spearman)};
        if (human)
            table.add(std::move(row));
        else
            write_csv_row(out, row);
    }
    if (human)
        table.render(out);
    return kExitOk;
}

int cmd_plot_data(const Config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.metric_file.empty())
        throw UsageError("plot-data requires --metric-file PATH");
    const MetricTable metrics = read_metric_file(cfg.metric_file);
    const std::size_t column = metric_column_index(metrics, cfg.metric_column);

    const RankTable ranked = rank_entities(load_entities(cfg, err), Indicator::T, positive_filter(cfg));
    std::set<std::string> seen;
    std::vector<std::pair<const EntityResult*, double>> rows;
    for (const auto& e : ranked.rows) {
        seen.insert(e.name);
        const auto it = metrics.values.find(e.name);
        if (it == metrics.values.end()) {
            err << "warning: unmatched input entity '" << e.name << "'\n";
            continue;
        }
        rows.emplace_back(&e, it->second[column]);
    }
    for (const auto& n : metrics.names) {
        if (!seen.contains(n))
            err << "warning: unmatched metric entity '" << n << "'\n";
    }
    if (rows.empty() && !ranked.rows.empty())
        throw JoinError("no entity names matched between input and metric file");

    out << "name,T,metric\n";
    for (const auto& [e, metric] : rows)
        out << csv_escape(e->name) << ',' << format_full(e->bundle.T) << ',' << format_full(metric) << '\n';
    return kExitOk;
}

int cmd_validate_reference(const Config& cfg, std::ostream& out)
{
    check_output(cfg);
    const ReferenceReport report = validate_reference(reference_corpus());
    if (cfg.output == "json") {
        ojson arr = ojson::array();
        for (const auto& c : report.checks) {
            arr.push_back({{"set", c.set}, {"entity", c.entity}, {"cell", c.cell},
                           {"displayed", c.displayed}, {"computed", c.computed},
                           {"tolerance", c.tolerance}, {"pass", c.pass}});
        }
        ojson doc = {{"checks", std::move(arr)},
                     {"total", report.checks.size()},
                     {"failures", report.failures}};
        out << doc.dump(2) << '\n';
    } else if (cfg.output == "csv") {
        write_csv_row(out, {"status", "set", "entity", "cell", "displayed", "computed", "tolerance"});
        for (const auto& c : report.checks) {
            write_csv_row(out, {c.pass ? "PASS" : "FAIL", c.set, c.entity, c.cell, c.displayed,
                                format_full(c.computed), format_full(c.tolerance)});
        }
    } else {
        TextTable table({"status", "set", "entity", "cell", "displayed", "computed", "tolerance"});
        for (const auto& c : report.checks) {
            table.add({c.pass ? "PASS" : "FAIL", c.set, c.entity, c.cell, c.displayed,
                       format_significant(c.computed, 8), format_full(c.tolerance)});
        }
        table.render(out);
        out << (report.ok() ? "OK" : "FAILED") << ": " << report.checks.size() - report.failures << " of "
            << report.checks.size() << " checks passed\n";
    }
    return report.ok() ? kExitOk : kExitFailure;
}

void add_source_options(CLI::App* sub, Config& cfg)
{
    sub->add_option("--input", cfg.input, "Dataset file");
    sub->add_flag("--reference", cfg.reference, "Use the embedded reference corpus");
    sub->add_option("--format", cfg.format, "Input format: summary|citations|json")
        ->check(CLI::IsMember({"summary", "citations", "json"}));
    sub->add_option("--window", cfg.window, "Citation window label recorded as provenance");
    sub->add_option("--group", cfg.group, "Keep only entities of this group");
}

void add_output_options(CLI::App* sub, Config& cfg)
{
    sub->add_option("--output", cfg.output, "Output format: table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--precision", cfg.precision, "Significant figures in tables")
        ->check(CLI::Range(1, 17));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Performance matrix, academic trace and I3-style indicators from citation data",
                 "perfmatrix"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Full matrix, trace and indicators per entity");
    add_source_options(compute, cfg);
    add_output_options(compute, cfg);
    compute->add_flag("--mask-x3", cfg.mask_x3, "Hide X3 in the output");

    auto* rank = app.add_subcommand("rank", "Rank entities by an indicator");
    add_source_options(rank, cfg);
    add_output_options(rank, cfg);
    rank->add_option("--key", cfg.key, "T|h|I3X|I3Y|X1..Z3");
    rank->add_flag("--positive-only", cfg.positive_only, "Keep only entities with T > 0");
    rank->add_flag("--mask-x3", cfg.mask_x3, "Hide X3 in the output");
    rank->add_option("--top", cfg.top, "Keep the first N rows");

    auto* correlate = app.add_subcommand("correlate", "Pearson and Spearman correlations between columns");
    add_source_options(correlate, cfg);
    add_output_options(correlate, cfg);
    correlate->add_option("--columns", cfg.columns, "Indicator columns (default T)")->delimiter(',');
    correlate->add_option("--metric-file", cfg.metric_file, "CSV 'name,<metric>...' joined by name");
    correlate->add_option("--metric-column", cfg.metric_column, "Use only this metric-file column");

    auto* validate = app.add_subcommand("validate-reference",
                                        "Recompute the reference corpus against the published values");
    validate->add_option("--output", cfg.output, "Output format: table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    auto* plot = app.add_subcommand("plot-data", "Emit name,T,metric rows for external plotting");
    add_source_options(plot, cfg);
    plot->add_option("--metric-file", cfg.metric_file, "CSV 'name,<metric>...' joined by name");
    plot->add_option("--metric-column", cfg.metric_column, "Metric-file column (default: first)");
    plot->add_flag("--positive-only", cfg.positive_only, "Keep only entities with T > 0");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("perfmatrix");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(cfg, out, err);
        if (rank->parsed())
            return cmd_rank(cfg, out, err);
        if (correlate->parsed())
            return cmd_correlate(cfg, out, err);
        if (validate->parsed())
            return cmd_validate_reference(cfg, out);
        if (plot->parsed())
            return cmd_plot_data(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownIndicator& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace perfmatrix::cli
