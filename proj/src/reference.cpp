#include "perfmatrix/reference.hpp"

#include "perfmatrix/errors.hpp"
#include "perfmatrix/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

namespace perfmatrix {

namespace {

struct RawGolden {
    const char* set;
    const char* entity;
    int rank;
    std::array<const char*, 10> cells;
};

// Columns: name, P, Pz, h, C, Ch (SummaryRecord field order).
const CorpusEntry kJournals[] = {
    {{"MIS Quart", 88, 6, 20, 1133, 575}, "LIS", "2009-2010"},
    {{"J Informetr", 105, 5, 18, 1132, 574}, "LIS", "2009-2010"},
    {{"J Am Med Inform Assn", 247, 26, 24, 2243, 810}, "LIS", "2009-2010"},
    {{"Annu Rev Inform Sci", 24, 5, 7, 159, 129}, "LIS", "2009-2010"},
    {{"J Inf Technol", 69, 18, 8, 227, 107}, "LIS", "2009-2010"},
    {{"Int J Comp-Supp Coll", 45, 9, 10, 276, 170}, "LIS", "2009-2010"},
    {{"Inform Manage-Amster", 99, 8, 13, 662, 251}, "LIS", "2009-2010"},
    {{"J Comput-Mediat Comm", 93, 10, 12, 583, 284}, "LIS", "2009-2010"},
    {{"Inform Syst Res", 87, 10, 13, 572, 272}, "LIS", "2009-2010"},
    {{"J Am Soc Inf Sci Tec", 487, 138, 20, 2404, 712}, "LIS", "2009-2010"},
    {{"Inform Syst J", 56, 11, 9, 274, 140}, "LIS", "2009-2010"},
    {{"Scientometrics", 425, 45, 17, 2247, 435}, "LIS", "2009-2010"},
    {{"MIS Q Exec", 41, 13, 6, 119, 60}, "LIS", "2009-2010"},
    {{"J Assoc Inf Syst", 69, 12, 8, 286, 128}, "LIS", "2009-2010"},
    {{"Libr Inform Sci Res", 85, 29, 10, 263, 128}, "LIS", "2009-2010"},
    {{"J Health Commun", 193, 38, 12, 776, 219}, "LIS", "2009-2010"},
    {{"Telecommun Policy", 131, 29, 10, 475, 147}, "LIS", "2009-2010"},
    {{"Int J Inform Manage", 159, 64, 11, 569, 186}, "LIS", "2009-2010"},
    {{"Eur J Inform Syst", 99, 10, 9, 365, 126}, "LIS", "2009-2010"},
    {{"Int J Geogr Inf Sci", 175, 32, 13, 795, 241}, "LIS", "2009-2010"},
    {{"J Strategic Inf Syst", 43, 10, 7, 175, 97}, "LIS", "2009-2010"},
    {{"Gov Inform Q", 161, 57, 13, 642, 269}, "LIS", "2009-2010"},
    {{"J Manage Inform Syst", 89, 21, 10, 368, 168}, "LIS", "2009-2010"},
    {{"J Inf Sci", 97, 16, 9, 391, 124}, "LIS", "2009-2010"},
    {{"J Knowl Manag", 132, 14, 10, 548, 172}, "LIS", "2009-2010"},
    {{"Inform Soc", 80, 33, 6, 155, 53}, "LIS", "2009-2010"},
    {{"Inform Process Manag", 121, 27, 9, 432, 150}, "LIS", "2009-2010"},
    {{"Soc Sci Comput Rev", 72, 23, 8, 224, 101}, "LIS", "2009-2010"},
    {{"J Doc", 133, 62, 7, 273, 85}, "LIS", "2009-2010"},
    {{"Serials Rev", 93, 63, 4, 64, 18}, "LIS", "2009-2010"},
    {{"J Med Libr Assoc", 170, 86, 8, 287, 76}, "LIS", "2009-2010"},
    {{"Online Inform Rev", 193, 105, 10, 360, 128}, "LIS", "2009-2010"},
    {{"Health Info Libr J", 96, 30, 6, 235, 91}, "LIS", "2009-2010"},
    {{"Learn Publ", 132, 80, 6, 178, 72}, "LIS", "2009-2010"},
    {{"Res Evaluat", 77, 25, 6, 186, 65}, "LIS", "2009-2010"},
    {{"Coll Res Libr", 155, 109, 5, 124, 51}, "LIS", "2009-2010"},
    {{"Libr Quart", 74, 49, 4, 71, 29}, "LIS", "2009-2010"},
    {{"Inform Res", 169, 153, 3, 23, 10}, "LIS", "2009-2010"},
    {{"Portal-Libr Acad", 91, 61, 4, 83, 36}, "LIS", "2009-2010"},
    {{"Inform Organ-Uk", 27, 4, 5, 68, 32}, "LIS", "2009-2010"},
    {{"Inform Technol Peopl", 39, 10, 5, 83, 37}, "LIS", "2009-2010"},
    {{"Data Base Adv Inf Sy", 43, 18, 4, 60, 28}, "LIS", "2009-2010"},
    {{"Libr Resour Tech Ser", 68, 35, 5, 77, 31}, "LIS", "2009-2010"},
    {{"Aslib Proc", 79, 36, 6, 146, 65}, "LIS", "2009-2010"},
    {{"J Scholarly Publ", 67, 45, 3, 50, 20}, "LIS", "2009-2010"},
    {{"Inform Technol Dev", 49, 20, 5, 86, 40}, "LIS", "2009-2010"},
    {{"Soc Sci Inform", 56, 22, 4, 80, 24}, "LIS", "2009-2010"},
    {{"J Acad Libr", 237, 155, 6, 206, 46}, "LIS", "2009-2010"},
    {{"J Libr Inf Sci", 83, 60, 4, 69, 28}, "LIS", "2009-2010"},
    {{"Rev Esp Doc Cient", 61, 42, 3, 40, 14}, "LIS", "2009-2010"},
    {{"Libr Cult Rec", 95, 79, 2, 21, 4}, "LIS", "2009-2010"},
    {{"Ethics Inf Technol", 65, 23, 6, 124, 48}, "LIS", "2009-2010"},
    {{"Libr Hi Tech", 148, 98, 6, 140, 50}, "LIS", "2009-2010"},
    {{"J Glob Inf Manag", 31, 8, 5, 74, 33}, "LIS", "2009-2010"},
    {{"Scientist", 688, 629, 4, 100, 29}, "LIS", "2009-2010"},
    {{"Electron Libr", 214, 128, 7, 224, 71}, "LIS", "2009-2010"},
    {{"Libr Collect Acquis", 51, 32, 3, 52, 29}, "LIS", "2009-2010"},
    {{"Online", 215, 196, 3, 30, 10}, "LIS", "2009-2010"},
    {{"Knowl Man Res Pract", 73, 25, 5, 123, 40}, "LIS", "2009-2010"},
    {{"Malays J Libr Inf Sc", 42, 22, 4, 46, 19}, "LIS", "2009-2010"},
    {{"Aust Acad Res Libr", 103, 84, 4, 46, 19}, "LIS", "2009-2010"},
    {{"Prof Inform", 174, 98, 5, 152, 41}, "LIS", "2009-2010"},
    {{"Libr Trends", 87, 44, 3, 74, 14}, "LIS", "2009-2010"},
    {{"Knowl Organ", 65, 45, 3, 33, 9}, "LIS", "2009-2010"},
    {{"Interlend Doc Supply", 78, 17, 4, 131, 20}, "LIS", "2009-2010"},
    {{"Program-Electron Lib", 92, 63, 4, 59, 17}, "LIS", "2009-2010"},
    {{"Aust Libr J", 214, 200, 2, 26, 9}, "LIS", "2009-2010"},
    {{"Libr J", 8595, 8561, 3, 47, 15}, "LIS", "2009-2010"},
    {{"Libri", 55, 29, 3, 45, 14}, "LIS", "2009-2010"},
    {{"Inform Technol Libr", 64, 57, 3, 47, 12}, "LIS", "2009-2010"},
    {{"Ref User Serv Q", 310, 280, 3, 48, 13}, "LIS", "2009-2010"},
    {{"Can J Inform Lib Sci", 35, 25, 2, 15, 6}, "LIS", "2009-2010"},
    {{"Restaurator", 38, 20, 3, 29, 11}, "LIS", "2009-2010"},
    {{"Inform Dev", 65, 45, 3, 38, 13}, "LIS", "2009-2010"},
    {{"Inform Technol Manag", 34, 16, 3, 31, 9}, "LIS", "2009-2010"},
    {{"Perspect Cienc Inf", 134, 119, 2, 18, 4}, "LIS", "2009-2010"},
    {{"Afr J Libr Arch Info", 29, 23, 2, 11, 6}, "LIS", "2009-2010"},
    {{"Investig Bibliotecol", 65, 61, 1, 4, 1}, "LIS", "2009-2010"},
    {{"Transinformacao", 40, 34, 1, 7, 2}, "LIS", "2009-2010"},
    {{"Z Bibl Bibl", 120, 114, 2, 8, 4}, "LIS", "2009-2010"},
    {{"Econtent", 323, 313, 1, 11, 2}, "LIS", "2009-2010"},
    {{"Libr Inform Sc", 25, 23, 1, 2, 1}, "LIS", "2009-2010"},
    {{"Inform Soc-Estud", 79, 73, 1, 7, 2}, "LIS", "2009-2010"},
    {{"Nature", 5121, 1834, 192, 182649, 66109}, "multidisciplinary", "2009-2010"},
    {{"Science", 4955, 1427, 171, 159648, 52076}, "multidisciplinary", "2009-2010"},
    {{"PNAS", 8438, 372, 115, 212651, 18871}, "multidisciplinary", "2009-2010"},
};

const CorpusEntry kOtherUnits[] = {
    {{"Univ Heidelberg", 4715, 3149, 21, 5220, 996}, "university", "2012"},
    {{"Univ Hamburg", 1949, 1257, 19, 3185, 1243}, "university", "2012"},
    {{"Leydesdorff L", 141, 23, 27, 2183, 1331}, "author", "2003-2012"},
    {{"Ye FY", 25, 9, 5, 72, 51}, "author", "2003-2012"},
};

// Cells: X1 X2 X3 Y1 Y2 Y3 Z1 Z2 Z3 T as printed.
const RawGolden kGolden[] = {
    {"journal-top", "PNAS", 1, {"1.57", "7492", "16.4", "822.5", "176584", "149.9", "820.9", "169092", "133.5", "176719"}},
    {"journal-top", "Nature", 2, {"7.2", "1871", "657", "7440", "74359", "4683", "7433", "72488", "4026", "78392"}},
    {"journal-top", "Science", 3, {"5.9", "2274", "411", "5356", "72483", "3266", "5350", "70208", "2855", "75344"}},
    {"journal-top", "Scientometrics", 1, {"0.68", "310", "4.76", "37.17", "1461.2", "9.486", "36.49", "1151.2", "4.722", "1466.6"}},
    {"journal-top", "J Am Soc Inf Sci Tec", 2, {"0.82", "222.3", "39.1", "66.56", "1190.9", "40.49", "65.73", "968.61", "1.388", "1193.1"}},
    {"journal-top", "J Am Med Inform Assn", 3, {"2.33", "157.1", "2.74", "147.9", "915.51", "24.41", "145.6", "758.39", "21.68", "939.52"}},
    {"journal-top", "J Health Commun", 4, {"0.75", "106", "7.48", "26.72", "399.81", "7.249", "25.98", "293.85", "-0.23", "400.32"}},
    {"journal-top", "Int J Geogr Inf Sci", 5, {"0.97", "96.57", "5.85", "35.93", "386.06", "6.521", "34.96", "289.49", "0.669", "387.69"}},
    {"journal-top", "J Informetr", 6, {"3.09", "64.04", "0.24", "92.73", "275.06", "55.21", "89.65", "211.02", "54.97", "333.12"}},
    {"journal-top", "MIS Quart", 7, {"4.55", "43.68", "0.41", "141.2", "274.81", "27.03", "136.7", "231.13", "26.62", "305.98"}},
    {"journal-top", "J Knowl Manag", 8, {"0.76", "88.36", "1.48", "18.25", "257.99", "9.46", "17.49", "169.62", "7.975", "266.72"}},
    {"journal-top", "Inform Manage-Amster", 9, {"1.71", "61.45", "0.65", "43.14", "255.17", "10.16", "41.44", "193.71", "9.511", "266.39"}},
    {"journal-top", "Int J Inform Manage", 10, {"0.76", "44.38", "25.8", "25.73", "257.8", "7.425", "24.97", "213.42", "-18.3", "240.23"}},
    {"journal-top", "Telecommun Policy", 11, {"0.76", "64.61", "6.42", "21.05", "226.49", "4.651", "20.29", "161.88", "-1.77", "225.49"}},
    {"journal-top", "Gov Inform Q", 12, {"1.05", "51.43", "20.2", "44.49", "216.71", "15.58", "43.44", "165.28", "-4.6", "213.16"}},
    {"journal-top", "Inform Process Manag", 13, {"0.67", "59.71", "6.02", "15.19", "184.08", "11.02", "14.52", "124.37", "4.996", "189.75"}},
    {"journal-top", "J Comput-Mediat Comm", 14, {"1.55", "54.2", "1.08", "35.57", "153.35", "33.62", "34.02", "99.142", "32.54", "187.44"}},
    {"journal-top", "J Inf Sci", 15, {"0.84", "53.44", "2.64", "16.78", "182.32", "4.729", "15.94", "128.88", "2.09", "185.25"}},
    {"journal-top", "Inform Syst Res", 16, {"1.94", "47.08", "1.15", "49.93", "157.34", "18.55", "47.99", "110.26", "17.4", "176.68"}},
    {"journal-top", "Eur J Inform Syst", 17, {"0.82", "64.65", "1.01", "17.98", "156.5", "5.548", "17.16", "91.849", "4.538", "161.85"}},
    {"journal-top", "J Manage Inform Syst", 18, {"1.12", "37.8", "4.96", "27.17", "108.7", "12.57", "26.05", "70.898", "7.61", "117.43"}},
    {"journal-top", "J Med Libr Assoc", 19, {"0.38", "33.98", "43.5", "14.27", "155.13", "0.502", "13.9", "121.15", "-43", "112.5"}},
    {"journal-top", "J Doc", 20, {"0.37", "30.8", "28.9", "8.795", "129.47", "4.747", "8.426", "98.668", "-24.2", "105.68"}},
    {"university", "Univ Heidelberg", 1, {"0.0935", "506.26", "2103", "37.257", "3418", "59.009", "37.163", "2911.8", "-2044", "1374.03"}},
    {"university", "Univ Hamburg", 2, {"0.1852", "232.39", "811", "40.917", "1184.1", "244.25", "40.732", "951.71", "-566.5", "617.836"}},
    {"author", "Leydesdorff L", 1, {"5.1702", "58.73", "3.75", "243.45", "332.53", "166.01", "238.28", "273.8", "162.26", "499.956"}},
    {"author", "Ye FY", 2, {"1", "4.84", "3.24", "8.6806", "6.125", "9.3889", "7.6806", "1.285", "6.1489", "13.2739"}},
    {"worked-matrix", "J Informetr", 0, {"3.09", "64.04", "0.24", "92.73", "275.06", "55.21", "89.65", "211.02", "54.97", "333.12"}},
    {"worked-matrix", "J Am Soc Inf Sci Tec", 0, {"0.82", "222.3", "39.1", "66.56", "1190.9", "40.49", "65.73", "968.61", "1.388", "1193.1"}},
    {"worked-matrix", "Leydesdorff L", 0, {"5.17", "58.73", "3.75", "243.45", "332.53", "166.01", "238.28", "273.8", "162.26", "499.96"}},
    {"worked-matrix", "Ye FY", 0, {"1", "4.84", "3.24", "8.68", "6.13", "9.39", "7.68", "1.29", "6.15", "13.27"}},
};

ReferenceCorpus build_corpus()
{
    ReferenceCorpus corpus;
    corpus.journals_2y.assign(std::begin(kJournals), std::end(kJournals));
    corpus.other_units.assign(std::begin(kOtherUnits), std::end(kOtherUnits));
    for (const RawGolden& raw : kGolden) {
        GoldenRow row;
        row.set = raw.set;
        row.entity = raw.entity;
        row.rank = raw.rank;
        for (std::size_t i = 0; i < raw.cells.size(); ++i)
            row.cells[i] = GoldenCell::parse(raw.cells[i]);
        corpus.expected.push_back(std::move(row));
    }
    return corpus;
}

std::size_t cell_index(Indicator id)
{
    const auto it = std::find(kMatrixCells.begin(), kMatrixCells.end(), id);
    if (it == kMatrixCells.end())
        throw UnknownIndicator("golden rows hold only X1..Z3 and T, not "
                               + std::string(to_string(id)));
    return static_cast<std::size_t>(it - kMatrixCells.begin());
}

} // namespace

GoldenCell GoldenCell::parse(std::string text)
{
    GoldenCell cell;
    cell.text = std::move(text);
    if (cell.text.empty())
        return cell;
    const char* first = cell.text.data();
    const char* last = first + cell.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, cell.value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("malformed golden value '" + cell.text + "'");
    const auto dot = cell.text.find('.');
    cell.decimals = dot == std::string::npos ? 0 : static_cast<int>(cell.text.size() - dot - 1);
    return cell;
}

double GoldenCell::tolerance() const noexcept
{
    return 0.5 * std::pow(10.0, -decimals);
}

bool GoldenCell::matches(double computed) const noexcept
{
    // The printed literal itself is inexact in binary; allow a sliver for it.
    return std::abs(computed - value) <= tolerance() * (1.0 + 1e-9);
}

const CorpusEntry& ReferenceCorpus::entry(std::string_view name) const
{
    for (const auto* list : {&journals_2y, &other_units}) {
        for (const auto& e : *list) {
            if (e.record.name == name)
                return e;
        }
    }
    throw std::out_of_range("no corpus entry named '" + std::string(name) + "'");
}

std::vector<CorpusEntry> ReferenceCorpus::all_entries() const
{
    std::vector<CorpusEntry> all = journals_2y;
    all.insert(all.end(), other_units.begin(), other_units.end());
    return all;
}

const ReferenceCorpus& reference_corpus()
{
    static const ReferenceCorpus corpus = build_corpus();
    return corpus;
}

ReferenceReport validate_reference(const ReferenceCorpus& corpus,
                                   std::span<const GoldenOverride> overrides)
{
    std::vector<GoldenRow> expected = corpus.expected;
    for (const auto& ov : overrides) {
        const std::size_t idx = cell_index(ov.cell);
        bool applied = false;
        for (auto& row : expected) {
            if (row.set == ov.set && row.entity == ov.entity) {
                row.cells[idx] = GoldenCell::parse(ov.displayed);
                applied = true;
            }
        }
        if (!applied)
            throw std::out_of_range("override targets unknown row " + ov.set + "/" + ov.entity);
    }

    std::map<std::string, EntityResult> results;
    std::map<std::string, std::vector<EntityResult>> by_group;
    for (const auto& e : corpus.all_entries()) {
        EntityResult r = evaluate(e.record.name, e.group, partition_from_summary(e.record));
        by_group[e.group].push_back(r);
        results.emplace(e.record.name, std::move(r));
    }
    std::map<std::string, int> trace_rank;
    for (auto& [group, members] : by_group) {
        const RankTable table = rank_entities(members, Indicator::T);
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            trace_rank[table.rows[i].name] = static_cast<int>(i + 1);
    }

    ReferenceReport report;
    for (const auto& row : expected) {
        const auto it = results.find(row.entity);
        if (it == results.end()) {
            report.checks.push_back({row.set, row.entity, "entity", "", 0.0, 0.0, false});
            ++report.failures;
            continue;
        }
        const EntityResult& r = it->second;
        for (std::size_t i = 0; i < kMatrixCells.size(); ++i) {
            const GoldenCell& cell = row.cells[i];
            if (!cell.present())
                continue;
            CellCheck check;
            check.set = row.set;
            check.entity = row.entity;
            check.cell = std::string(to_string(kMatrixCells[i]));
            check.displayed = cell.text;
            check.computed = r.value(kMatrixCells[i]);
            check.tolerance = cell.tolerance();
            check.pass = cell.matches(check.computed);
            if (!check.pass)
                ++report.failures;
            report.checks.push_back(std::move(check));
        }
        if (row.rank > 0) {
            CellCheck check;
            check.set = row.set;
            check.entity = row.entity;
            check.cell = "rank";
            check.displayed = std::to_string(row.rank);
            check.computed = trace_rank.at(row.entity);
            check.pass = trace_rank.at(row.entity) == row.rank;
            if (!check.pass)
                ++report.failures;
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

} // namespace perfmatrix
