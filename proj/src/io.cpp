#include "pwi/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pwi/errors.hpp"
#include "text_util.hpp"

namespace pwi {

using detail::split_lines;
using detail::strip_bom;
using detail::to_upper_ascii;
using detail::trim;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open \"" + path.string() + "\" for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading \"" + path.string() + "\"");
    return std::move(buffer).str();
}

namespace {

// Splits one CSV line into unquoted fields; quotes protect commas and
// double themselves ("" -> "). Embedded newlines are not supported, none of
// the formats here need them.
std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && std::string_view(trim(current)).empty()) {
            quoted = true;
            current.clear(); // drop whitespace before the opening quote
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    for (std::string& field : fields)
        field = std::string(trim(field));
    return fields;
}

bool looks_like_header(std::string_view first_field, std::string_view expected) {
    return to_upper_ascii(trim(first_field)) == to_upper_ascii(expected);
}

} // namespace

MergeMap parse_merge_map(std::string_view csv, std::string_view origin) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(strip_bom(csv))) {
        ++line_no;
        if (trim(line).empty())
            continue;
        auto fields = split_csv_line(line);
        if (line_no == 1 && fields.size() == 2 && looks_like_header(fields[0], "variant"))
            continue;
        if (fields.size() != 2)
            throw FormatError("merge map " + std::string(origin) + ":" + std::to_string(line_no) +
                              ": expected \"variant,canonical\", got " + std::to_string(fields.size()) +
                              " fields");
        if (fields[0].empty() || fields[1].empty())
            throw FormatError("merge map " + std::string(origin) + ":" + std::to_string(line_no) +
                              ": empty name");
        pairs.emplace_back(normalize_name(fields[0]), normalize_name(fields[1]));
    }
    return MergeMap::from_pairs(pairs);
}

LaureateSet parse_laureates(std::string_view content, std::string label) {
    std::vector<std::string> names;
    for (std::string_view line : split_lines(strip_bom(content))) {
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            names.emplace_back(line);
    }
    return LaureateSet::from_names(names, std::move(label));
}

std::map<std::string, double> parse_scores(std::string_view csv, std::string_view origin) {
    std::map<std::string, double> scores;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(strip_bom(csv))) {
        ++line_no;
        if (trim(line).empty())
            continue;
        auto fields = split_csv_line(line);
        if (line_no == 1 && fields.size() == 2 && looks_like_header(fields[0], "author"))
            continue;
        if (fields.size() != 2)
            throw FormatError("score table " + std::string(origin) + ":" + std::to_string(line_no) +
                              ": expected \"author,score\"");
        const std::string author = normalize_name(fields[0]);
        const std::string value = fields[1];
        try {
            std::size_t used = 0;
            const double score = std::stod(value, &used);
            if (used != value.size() || !std::isfinite(score))
                throw std::invalid_argument(value);
            scores[author] = score;
        } catch (const std::exception&) {
            throw FormatError("score table " + std::string(origin) + ":" + std::to_string(line_no) +
                              ": unparsable score \"" + value + "\"");
        }
    }
    return scores;
}

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string fixed2(double value) {
    const double scaled = std::round(value * 100.0) / 100.0;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f", scaled);
    return buffer;
}

std::string roundtrip(double value) {
    char buffer[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value)
            break;
    }
    return buffer;
}

void write_author_table_csv(std::ostream& out, std::span<const AuthorRow> rows) {
    out << "author,papers,coauthors\n";
    for (const AuthorRow& row : rows)
        out << csv_field(row.author) << ',' << row.papers << ',' << row.coauthors << '\n';
}

nlohmann::json author_table_json(std::span<const AuthorRow> rows) {
    nlohmann::json array = nlohmann::json::array();
    for (const AuthorRow& row : rows)
        array.push_back({{"author", row.author}, {"papers", row.papers}, {"coauthors", row.coauthors}});
    return array;
}

void write_pwi_csv(std::ostream& out, std::span<const PwiRow> rows) {
    out << "author,pwi,papers,coauthors,laureate,pwi_per_paper,pwi_per_coauthor\n";
    for (const PwiRow& row : rows) {
        out << csv_field(row.author) << ',' << fixed2(row.pwi) << ',' << row.n_papers << ','
            << row.n_coauthors << ',' << (row.is_laureate ? "yes" : "no") << ','
            << fixed2(row.pwi_per_paper) << ',';
        if (row.pwi_per_coauthor)
            out << fixed2(*row.pwi_per_coauthor);
        out << '\n';
    }
}

nlohmann::json pwi_json(std::span<const PwiRow> rows) {
    nlohmann::json array = nlohmann::json::array();
    for (const PwiRow& row : rows) {
        nlohmann::json item = {{"author", row.author},
                               {"pwi", row.pwi},
                               {"papers", row.n_papers},
                               {"coauthors", row.n_coauthors},
                               {"laureate", row.is_laureate},
                               {"pwi_per_paper", row.pwi_per_paper}};
        if (row.pwi_per_coauthor)
            item["pwi_per_coauthor"] = *row.pwi_per_coauthor;
        array.push_back(std::move(item));
    }
    return array;
}

void write_correlation_csv(std::ostream& out, const CorrelationReport& report) {
    out << "threshold,rho,n_authors\n";
    for (const CorrelationRow& row : report.rows) {
        out << row.threshold << ',';
        if (row.rho)
            out << roundtrip(*row.rho);
        out << ',' << row.n_authors << '\n';
    }
}

nlohmann::json correlation_json(const CorrelationReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CorrelationRow& row : report.rows) {
        nlohmann::json item = {{"threshold", row.threshold}, {"n_authors", row.n_authors}};
        if (row.rho)
            item["rho"] = *row.rho;
        else
            item["rho"] = nullptr;
        rows.push_back(std::move(item));
    }
    return {{"rows", std::move(rows)},
            {"joined_authors", report.joined_authors},
            {"missing_scores", report.missing_scores}};
}

void write_regression_csv(std::ostream& out, const RegressionReport& report) {
    out << "term,coefficient,beta,semipartial_r2,r2,f,n\n";
    const std::string shared = roundtrip(report.r2) + "," + roundtrip(report.f_statistic) + "," +
                               std::to_string(report.n);
    out << "(intercept)," << roundtrip(report.intercept) << ",,," << shared << '\n';
    for (std::size_t j = 0; j < report.predictor_names.size(); ++j) {
        out << csv_field(report.predictor_names[j]) << ',' << roundtrip(report.coefficients[j])
            << ',' << roundtrip(report.betas[j]) << ',' << roundtrip(report.semipartial_r2[j])
            << ',' << shared << '\n';
    }
}

nlohmann::json regression_json(const RegressionReport& report) {
    nlohmann::json predictors = nlohmann::json::array();
    for (std::size_t j = 0; j < report.predictor_names.size(); ++j) {
        predictors.push_back({{"name", report.predictor_names[j]},
                              {"coefficient", report.coefficients[j]},
                              {"beta", report.betas[j]},
                              {"semipartial_r2", report.semipartial_r2[j]}});
    }
    return {{"intercept", report.intercept},
            {"predictors", std::move(predictors)},
            {"r2", report.r2},
            {"f", report.f_statistic},
            {"n", report.n}};
}

namespace {

void write_series(std::ostream& out, std::string_view group, std::span<const EcdfPoint> series) {
    for (const EcdfPoint& point : series)
        out << group << ',' << roundtrip(point.value) << ',' << roundtrip(point.cum_prob) << '\n';
}

} // namespace

void write_distribution_csv(std::ostream& out, const DistributionExport& distribution) {
    out << "group,pwi,cum_prob\n";
    write_series(out, "laureate", distribution.laureates);
    write_series(out, "non-laureate", distribution.non_laureates);
}

nlohmann::json distribution_json(const DistributionExport& distribution) {
    auto series = [](std::span<const EcdfPoint> points) {
        nlohmann::json array = nlohmann::json::array();
        for (const EcdfPoint& point : points)
            array.push_back({{"pwi", point.value}, {"cum_prob", point.cum_prob}});
        return array;
    };
    return {{"laureate", series(distribution.laureates)},
            {"non_laureate", series(distribution.non_laureates)}};
}

void write_edge_list_csv(std::ostream& out, const CoauthorGraph& graph) {
    out << "author_a,author_b\n";
    for (const auto& [a, b] : graph.edge_list())
        out << csv_field(a) << ',' << csv_field(b) << '\n';
}

void write_ingest_report_text(std::ostream& out, const IngestReport& report) {
    out << "records read: " << report.records_read << ", kept: " << report.records_kept
        << ", duplicates dropped: " << report.duplicates_dropped
        << ", skipped: " << report.records_skipped << "\n";
    for (const IngestWarning& warning : report.warnings)
        out << "warning [" << warning.where << "]: " << warning.message << "\n";
}

nlohmann::json ingest_report_json(const IngestReport& report) {
    nlohmann::json warnings = nlohmann::json::array();
    for (const IngestWarning& warning : report.warnings)
        warnings.push_back({{"where", warning.where}, {"message", warning.message}});
    return {{"records_read", report.records_read},
            {"records_kept", report.records_kept},
            {"duplicates_dropped", report.duplicates_dropped},
            {"records_skipped", report.records_skipped},
            {"warnings", std::move(warnings)}};
}

} // namespace pwi
