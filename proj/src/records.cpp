#include "pwi/records.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pwi/errors.hpp"
#include "text_util.hpp"

namespace pwi {

using detail::is_all_digits;
using detail::split;
using detail::split_lines;
using detail::strip_bom;
using detail::trim;

void IngestReport::merge(const IngestReport& other) {
    records_read += other.records_read;
    records_kept += other.records_kept;
    duplicates_dropped += other.duplicates_dropped;
    records_skipped += other.records_skipped;
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

namespace {

std::string locator(std::string_view stem, std::size_t line_no) {
    return std::string(stem) + ":" + std::to_string(line_no);
}

// Semicolon-separated "Lastname, Initials" list as found in AU/AF columns.
std::vector<std::string> split_author_list(std::string_view field) {
    std::vector<std::string> names;
    for (std::string_view part : split(field, ';')) {
        part = trim(part);
        if (!part.empty())
            names.emplace_back(part);
    }
    return names;
}

std::optional<int> parse_year(std::string_view field) {
    field = trim(field);
    if (field.size() == 4 && is_all_digits(field))
        return std::stoi(std::string(field));
    return std::nullopt;
}

} // namespace

ParseResult parse_wos_tab(std::string_view content, std::string_view file_stem) {
    ParseResult result;
    IngestReport& report = result.report;

    auto lines = split_lines(strip_bom(content));
    if (lines.empty())
        return result;

    auto header = split(lines[0], '\t');
    std::unordered_map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < header.size(); ++i)
        columns.emplace(std::string(trim(header[i])), i);
    if (!columns.contains("AU"))
        throw FormatError("tab export " + std::string(file_stem) + ": header has no AU column");

    auto column = [&](const char* tag) -> std::optional<std::size_t> {
        auto it = columns.find(tag);
        if (it == columns.end())
            return std::nullopt;
        return it->second;
    };
    const auto col_au = column("AU");
    const auto col_af = column("AF");
    const auto col_py = column("PY");
    const auto col_ut = column("UT");
    const auto col_dt = column("DT");
    const auto col_so = column("SO");

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        std::string_view line = lines[i];
        if (trim(line).empty())
            continue; // stray blank line, not a record
        ++report.records_read;

        auto fields = split(line, '\t');
        if (fields.size() != header.size()) {
            ++report.records_skipped;
            report.warnings.push_back({locator(file_stem, line_no),
                                       "expected " + std::to_string(header.size()) + " fields, got " +
                                           std::to_string(fields.size()) + "; line skipped"});
            continue;
        }
        auto field = [&](std::optional<std::size_t> idx) -> std::string_view {
            return idx ? trim(fields[*idx]) : std::string_view{};
        };

        std::vector<std::string> authors = split_author_list(field(col_af));
        if (authors.empty())
            authors = split_author_list(field(col_au));
        if (authors.empty()) {
            ++report.records_skipped;
            report.warnings.push_back(
                {locator(file_stem, line_no), "record has no parsable author names; dropped"});
            continue;
        }

        PaperRecord record;
        record.raw_authors = std::move(authors);
        record.pub_year = parse_year(field(col_py));
        record.doc_type = std::string(field(col_dt));
        record.source_title = std::string(field(col_so));
        std::string_view ut = field(col_ut);
        record.record_id = ut.empty() ? locator(file_stem, line_no) : std::string(ut);

        result.records.push_back(std::move(record));
        ++report.records_kept;
    }
    return result;
}

namespace {

// State for one field-tagged record under construction.
struct TaggedRecord {
    std::size_t start_line = 0;
    std::vector<std::string> au;
    std::vector<std::string> af;
    std::string py, ut, dt, so;
    bool has_content = false;
};

bool is_tag_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

} // namespace

ParseResult parse_wos_plaintext(std::string_view content, std::string_view file_stem) {
    ParseResult result;
    IngestReport& report = result.report;

    auto lines = split_lines(strip_bom(content));

    TaggedRecord current;
    bool in_record = false;
    std::string active_tag;

    auto finish = [&](bool terminated, std::size_t line_no) {
        if (!in_record)
            return;
        in_record = false;
        active_tag.clear();
        if (!current.has_content) {
            current = {};
            return;
        }
        ++report.records_read;
        if (!terminated)
            report.warnings.push_back({locator(file_stem, line_no),
                                       "record is missing its ER terminator; kept anyway"});

        std::vector<std::string> authors = !current.af.empty() ? current.af : current.au;
        if (authors.empty()) {
            ++report.records_skipped;
            report.warnings.push_back({locator(file_stem, current.start_line),
                                       "record has no parsable author names; dropped"});
            current = {};
            return;
        }
        PaperRecord record;
        record.raw_authors = std::move(authors);
        record.pub_year = parse_year(current.py);
        record.doc_type = current.dt;
        record.source_title = current.so;
        record.record_id = current.ut.empty() ? locator(file_stem, current.start_line) : current.ut;
        result.records.push_back(std::move(record));
        ++report.records_kept;
        current = {};
    };

    auto add_value = [&](const std::string& tag, std::string_view value, bool continuation) {
        // AU/AF are one-name-per-line lists; other tags are scalars whose
        // continuation lines are joined with a space.
        value = trim(value);
        if (tag == "AU") {
            if (!value.empty())
                current.au.emplace_back(value);
        } else if (tag == "AF") {
            if (!value.empty())
                current.af.emplace_back(value);
        } else {
            std::string* slot = nullptr;
            if (tag == "PY")
                slot = &current.py;
            else if (tag == "UT")
                slot = &current.ut;
            else if (tag == "DT")
                slot = &current.dt;
            else if (tag == "SO")
                slot = &current.so;
            if (slot == nullptr)
                return; // unknown tag, ignored
            if (continuation && !slot->empty())
                *slot += " " + std::string(value);
            else
                *slot = std::string(value);
        }
    };

    std::size_t line_no = 0;
    for (std::string_view line : lines) {
        ++line_no;
        if (trim(line).empty())
            continue;

        const bool continuation = line.size() >= 3 && line.substr(0, 3) == "   ";
        if (continuation) {
            if (in_record && !active_tag.empty()) {
                add_value(active_tag, line.substr(3), true);
                current.has_content = true;
            }
            continue;
        }

        const bool tagged = line.size() >= 2 && is_tag_char(line[0]) && is_tag_char(line[1]) &&
                            (line.size() == 2 || line[2] == ' ');
        if (!tagged)
            continue; // stray line outside the format, ignored

        std::string tag(line.substr(0, 2));
        std::string_view value = line.size() > 3 ? line.substr(3) : std::string_view{};

        if (tag == "EF") {
            finish(false, line_no);
            break;
        }
        if (tag == "ER") {
            finish(true, line_no);
            continue;
        }
        if (tag == "FN" || tag == "VR")
            continue; // file preamble

        if (!in_record) {
            in_record = true;
            current.start_line = line_no;
        }
        active_tag = tag;
        add_value(tag, value, false);
        current.has_content = true;
    }
    finish(false, line_no); // EOF without EF: keep the trailing record
    return result;
}

std::pair<std::vector<PaperRecord>, std::size_t> dedupe_records(std::vector<PaperRecord> records) {
    std::unordered_set<std::string> seen;
    seen.reserve(records.size());
    std::vector<PaperRecord> kept;
    kept.reserve(records.size());
    std::size_t dropped = 0;
    for (PaperRecord& record : records) {
        if (seen.insert(record.record_id).second)
            kept.push_back(std::move(record));
        else
            ++dropped;
    }
    return {std::move(kept), dropped};
}

ExportFormat detect_format(std::string_view content) {
    auto lines = split_lines(strip_bom(content));
    std::string_view first;
    for (std::string_view line : lines) {
        if (!trim(line).empty()) {
            first = line;
            break;
        }
    }
    if (first.substr(0, 3) == "FN " || trim(first) == "FN")
        return ExportFormat::Plaintext;
    if (first.find('\t') != std::string_view::npos)
        return ExportFormat::Tab;
    throw FormatError("cannot detect export format: first line is neither an FN tag "
                      "nor a tab-separated header");
}

} // namespace pwi
