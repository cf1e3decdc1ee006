#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pwi {

// One publication as parsed from a bibliographic export.
struct PaperRecord {
    std::string record_id;                // WoS UT accession number, or "<file-stem>:<line>"
    std::vector<std::string> raw_authors; // names exactly as the export spells them
    std::vector<std::string> author_keys; // normalized keys, deduplicated within the paper
    std::optional<int> pub_year;
    std::string doc_type;
    std::string source_title;
};

struct IngestWarning {
    std::string where; // "<file-stem>:<line>" locator
    std::string message;
};

// Accounting for one parse, or for a whole multi-file ingest after merging.
// Invariant: records_kept + duplicates_dropped + records_skipped == records_read.
struct IngestReport {
    std::size_t records_read = 0;
    std::size_t records_kept = 0;
    std::size_t duplicates_dropped = 0;
    std::size_t records_skipped = 0;
    std::vector<IngestWarning> warnings;

    void merge(const IngestReport& other);
};

struct ParseResult {
    std::vector<PaperRecord> records;
    IngestReport report;
};

// Tab-delimited export: a header line of two-letter field tags (AU required),
// then one record per line. Malformed lines are skipped with a warning.
ParseResult parse_wos_tab(std::string_view content, std::string_view file_stem);

// Field-tagged export: "TG value" lines with three-space continuations,
// records terminated by "ER", file terminated by "EF".
ParseResult parse_wos_plaintext(std::string_view content, std::string_view file_stem);

// First occurrence of each record_id wins. Returns the survivors and the
// number of duplicates dropped.
std::pair<std::vector<PaperRecord>, std::size_t> dedupe_records(std::vector<PaperRecord> records);

enum class ExportFormat { Tab, Plaintext };

// Sniffs the first line: an "FN" tag means plaintext, a tab-separated header
// means tab-delimited. Anything else is a format error.
ExportFormat detect_format(std::string_view content);

} // namespace pwi
