#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pwi/graph.hpp"
#include "pwi/names.hpp"
#include "pwi/pwi.hpp"
#include "pwi/records.hpp"
#include "pwi/stats.hpp"

namespace pwi {

// Whole-file read; throws IoError with the path on failure.
std::string read_file(const std::filesystem::path& path);

// "variant,canonical" CSV, header optional; names are normalized on load.
MergeMap parse_merge_map(std::string_view csv, std::string_view origin);

// One name per line, raw or already normalized; '#' starts a comment.
LaureateSet parse_laureates(std::string_view content, std::string label);

// "author,score" CSV, header optional; author names normalized on load.
// Throws FormatError on unparsable scores.
std::map<std::string, double> parse_scores(std::string_view csv, std::string_view origin);

// RFC-style quoting for fields containing separators or quotes.
std::string csv_field(std::string_view value);

// Two decimals, ties rounded half away from zero (display convention).
std::string fixed2(double value);

// Shortest representation that round-trips a double.
std::string roundtrip(double value);

void write_author_table_csv(std::ostream& out, std::span<const AuthorRow> rows);
nlohmann::json author_table_json(std::span<const AuthorRow> rows);

void write_pwi_csv(std::ostream& out, std::span<const PwiRow> rows);
nlohmann::json pwi_json(std::span<const PwiRow> rows);

void write_correlation_csv(std::ostream& out, const CorrelationReport& report);
nlohmann::json correlation_json(const CorrelationReport& report);

void write_regression_csv(std::ostream& out, const RegressionReport& report);
nlohmann::json regression_json(const RegressionReport& report);

void write_distribution_csv(std::ostream& out, const DistributionExport& distribution);
nlohmann::json distribution_json(const DistributionExport& distribution);

void write_edge_list_csv(std::ostream& out, const CoauthorGraph& graph);

void write_ingest_report_text(std::ostream& out, const IngestReport& report);
nlohmann::json ingest_report_json(const IngestReport& report);

} // namespace pwi
