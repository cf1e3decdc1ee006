// Command-line front end: ingest bibliographic exports, disambiguate author
// names, compute Prize Winner Index values, and run the validation statistics.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwi/errors.hpp"
#include "pwi/graph.hpp"
#include "pwi/io.hpp"
#include "pwi/names.hpp"
#include "pwi/pwi.hpp"
#include "pwi/records.hpp"
#include "pwi/stats.hpp"

namespace {

namespace fs = std::filesystem;

struct Options {
    std::vector<std::string> inputs;
    std::string format = "auto";
    std::string merge_map_path;
    std::string laureates_path;
    std::string mode = "realized";
    std::optional<std::int64_t> max_d;
    std::string scores_path;
    std::string thresholds_arg;
    std::string out_path;
    std::string out_format = "csv";
    std::string ingest_report_path;
    std::string export_graph_path;
};

struct Ingested {
    std::vector<pwi::PaperRecord> records;
    pwi::IngestReport report;
};

// Exit code 4: an analytical join produced no rows.
struct EmptyJoin {
    std::string message;
};

pwi::ExportFormat resolve_format(const std::string& flag, std::string_view content) {
    if (flag == "tab")
        return pwi::ExportFormat::Tab;
    if (flag == "plaintext")
        return pwi::ExportFormat::Plaintext;
    return pwi::detect_format(content);
}

pwi::MergeMap load_merge_map(const Options& options) {
    if (options.merge_map_path.empty())
        return {};
    return pwi::parse_merge_map(pwi::read_file(options.merge_map_path), options.merge_map_path);
}

Ingested ingest(const Options& options, const pwi::MergeMap& merges) {
    if (options.inputs.empty())
        throw pwi::IoError("no input files given (use --input)");

    Ingested all;
    for (const std::string& input : options.inputs) {
        const std::string content = pwi::read_file(input);
        const std::string stem = fs::path(input).stem().string();
        pwi::ParseResult parsed = resolve_format(options.format, content) == pwi::ExportFormat::Tab
                                      ? pwi::parse_wos_tab(content, stem)
                                      : pwi::parse_wos_plaintext(content, stem);
        all.records.insert(all.records.end(), std::make_move_iterator(parsed.records.begin()),
                           std::make_move_iterator(parsed.records.end()));
        all.report.merge(parsed.report);
    }

    auto [deduped, dropped] = pwi::dedupe_records(std::move(all.records));
    all.records = std::move(deduped);
    all.report.duplicates_dropped += dropped;
    all.report.records_kept -= dropped;

    pwi::fill_author_keys(all.records, merges);

    pwi::write_ingest_report_text(std::cerr, all.report);
    if (!options.ingest_report_path.empty()) {
        std::ofstream out(options.ingest_report_path, std::ios::binary);
        if (!out)
            throw pwi::IoError("cannot open \"" + options.ingest_report_path + "\" for writing");
        out << pwi::ingest_report_json(all.report).dump(2) << '\n';
    }
    return all;
}

void write_output(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout)
            throw pwi::IoError("failed writing to standard output");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw pwi::IoError("cannot open \"" + out_path + "\" for writing");
    writer(out);
    out.flush();
    if (!out)
        throw pwi::IoError("failed writing to \"" + out_path + "\"");
}

void write_json(const std::string& out_path, const nlohmann::json& value) {
    write_output(out_path, [&](std::ostream& out) { out << value.dump(2) << '\n'; });
}

fs::path default_laureates_path() {
#ifdef PWI_DEFAULT_LAUREATES
    if (fs::path compiled = PWI_DEFAULT_LAUREATES; fs::exists(compiled))
        return compiled;
#endif
    return "data/price_medal_laureates.txt";
}

pwi::LaureateSet load_laureates(const Options& options) {
    fs::path path =
        options.laureates_path.empty() ? default_laureates_path() : fs::path(options.laureates_path);
    if (options.laureates_path.empty() && !fs::exists(path))
        throw pwi::IoError("default laureate list \"" + path.string() +
                           "\" not found; pass --laureates");
    return pwi::parse_laureates(pwi::read_file(path), path.stem().string());
}

pwi::PwiOptions pwi_options(const Options& options) {
    pwi::PwiOptions out;
    out.mode =
        options.mode == "global" ? pwi::DistanceMode::Global : pwi::DistanceMode::Realized;
    // caps beyond any representable distance are the same as no cap
    if (options.max_d && *options.max_d < pwi::CoauthorGraph::kUnreachable)
        out.max_distance = static_cast<std::uint32_t>(*options.max_d);
    return out;
}

std::vector<std::size_t> parse_thresholds(const std::string& arg) {
    if (arg.empty())
        return {pwi::kDefaultThresholds.begin(), pwi::kDefaultThresholds.end()};
    std::vector<std::size_t> thresholds;
    std::size_t start = 0;
    while (start <= arg.size()) {
        std::size_t comma = arg.find(',', start);
        std::string token = arg.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            std::size_t used = 0;
            thresholds.push_back(std::stoull(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw pwi::ConfigError("bad threshold \"" + token + "\" in --thresholds");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw pwi::ConfigError("--thresholds must be ascending");
    return thresholds;
}

struct PwiRun {
    std::vector<pwi::PwiRow> rows;
};

PwiRun run_pipeline(const Options& options, const pwi::MergeMap& merges) {
    Ingested ingested = ingest(options, merges);
    // laureate names live in the same identity space as the dataset keys,
    // so the merge map applies to them as well
    pwi::LaureateSet laureates = load_laureates(options);
    laureates = pwi::LaureateSet::from_names(pwi::apply_merge_map(laureates.keys, merges),
                                             laureates.label);
    const pwi::CoauthorGraph graph = pwi::CoauthorGraph::build(ingested.records);

    pwi::PwiResult result = pwi::compute_pwi(graph, laureates, pwi_options(options));
    pwi::relative_variants(result.rows);

    for (const std::string& missing : result.unmatched_laureates)
        std::cerr << "warning: laureate \"" << missing << "\" has no papers in the dataset\n";
    if (result.matched_laureates.empty())
        std::cerr << "WARNING: none of the " << laureates.keys.size()
                  << " laureates appear in the dataset; every PWI value is zero\n";

    std::cerr << "summary: records=" << ingested.records.size() << " authors=" << graph.node_count()
              << " laureates_matched=" << result.matched_laureates.size() << "/"
              << laureates.keys.size() << " mode=" << options.mode << '\n';

    if (!options.export_graph_path.empty())
        write_output(options.export_graph_path,
                     [&](std::ostream& out) { pwi::write_edge_list_csv(out, graph); });

    return {std::move(result.rows)};
}

int cmd_list_authors(const Options& options) {
    Ingested ingested = ingest(options, load_merge_map(options));
    const std::vector<pwi::AuthorRow> rows = pwi::list_authors(ingested.records);
    if (options.out_format == "json")
        write_json(options.out_path, pwi::author_table_json(rows));
    else
        write_output(options.out_path,
                     [&](std::ostream& out) { pwi::write_author_table_csv(out, rows); });
    return 0;
}

int cmd_compute(const Options& options) {
    PwiRun run = run_pipeline(options, load_merge_map(options));
    if (options.out_format == "json")
        write_json(options.out_path, pwi::pwi_json(run.rows));
    else
        write_output(options.out_path,
                     [&](std::ostream& out) { pwi::write_pwi_csv(out, run.rows); });
    return 0;
}

int cmd_correlate(const Options& options) {
    const std::vector<std::size_t> thresholds = parse_thresholds(options.thresholds_arg);
    if (options.scores_path.empty())
        throw pwi::ConfigError("correlate requires --scores");
    const pwi::MergeMap merges = load_merge_map(options);
    PwiRun run = run_pipeline(options, merges);

    // fold score rows into the merged identity space; variants of one person
    // carry shares of that person's total, so collisions add up
    std::map<std::string, double> scores;
    for (const auto& [author, score] :
         pwi::parse_scores(pwi::read_file(options.scores_path), options.scores_path))
        scores[merges.canonical(author)] += score;

    const pwi::CorrelationReport report = pwi::threshold_sweep(run.rows, scores, thresholds);
    if (report.joined_authors == 0)
        throw EmptyJoin{"no author in the PWI output has an external score; nothing to correlate"};
    std::cerr << "correlate: " << report.joined_authors << " authors joined, "
              << report.missing_scores << " without scores dropped\n";

    if (options.out_format == "json")
        write_json(options.out_path, pwi::correlation_json(report));
    else
        write_output(options.out_path,
                     [&](std::ostream& out) { pwi::write_correlation_csv(out, report); });
    return 0;
}

int cmd_distribution(const Options& options) {
    PwiRun run = run_pipeline(options, load_merge_map(options));
    const pwi::DistributionExport distribution = pwi::cumulative_distribution(run.rows);
    if (distribution.laureates.empty())
        std::cerr << "warning: no laureate rows; the laureate series is empty\n";
    if (distribution.non_laureates.empty())
        std::cerr << "warning: no non-laureate rows; the non-laureate series is empty\n";
    if (options.out_format == "json")
        write_json(options.out_path, pwi::distribution_json(distribution));
    else
        write_output(options.out_path,
                     [&](std::ostream& out) { pwi::write_distribution_csv(out, distribution); });
    return 0;
}

int cmd_regress(const Options& options) {
    PwiRun run = run_pipeline(options, load_merge_map(options));
    const pwi::RegressionReport report = pwi::regress_pwi_drivers(run.rows);
    if (options.out_format == "json")
        write_json(options.out_path, pwi::regression_json(report));
    else
        write_output(options.out_path,
                     [&](std::ostream& out) { pwi::write_regression_csv(out, report); });
    return 0;
}

void add_common_options(CLI::App* cmd, Options& options, bool with_laureates) {
    cmd->add_option("--input", options.inputs, "Export file to ingest (repeatable)");
    cmd->add_option("--format", options.format, "Input format")
        ->check(CLI::IsMember({"auto", "tab", "plaintext"}))
        ->capture_default_str();
    cmd->add_option("--merge-map", options.merge_map_path,
                    "CSV \"variant,canonical\" folding author-name variants");
    cmd->add_option("--out", options.out_path, "Output path (default: stdout)");
    cmd->add_option("--out-format", options.out_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--ingest-report", options.ingest_report_path,
                    "Write the ingest report as JSON to this path");
    if (with_laureates) {
        cmd->add_option("--laureates", options.laureates_path,
                        "Laureate list, one name per line (default: shipped Price Medal list)");
        cmd->add_option("--mode", options.mode, "Distance semantics")
            ->check(CLI::IsMember({"realized", "global"}))
            ->capture_default_str();
        cmd->add_option("--max-d", options.max_d,
                        "Treat distances above this cap as unreachable")
            ->check(CLI::NonNegativeNumber);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prize Winner Index over co-authorship networks"};
    app.require_subcommand(1);

    Options options;

    CLI::App* list_cmd =
        app.add_subcommand("list-authors", "Print author keys with paper and co-author counts");
    add_common_options(list_cmd, options, false);

    CLI::App* compute_cmd = app.add_subcommand("compute", "Compute PWI for every author");
    add_common_options(compute_cmd, options, true);
    compute_cmd->add_option("--export-graph", options.export_graph_path,
                            "Also write the co-author graph as an edge-list CSV");

    CLI::App* correlate_cmd =
        app.add_subcommand("correlate", "Spearman correlation of PWI against external scores");
    add_common_options(correlate_cmd, options, true);
    correlate_cmd->add_option("--scores", options.scores_path, "CSV \"author,score\"");
    correlate_cmd->add_option("--thresholds", options.thresholds_arg,
                              "Comma-separated ascending paper-count thresholds "
                              "(default 1,10,20,30,40,50)");

    CLI::App* distribution_cmd =
        app.add_subcommand("distribution", "Cumulative PWI distribution by laureate status");
    add_common_options(distribution_cmd, options, true);

    CLI::App* regress_cmd = app.add_subcommand(
        "regress", "OLS of PWI on paper count, co-author count, and awardee status");
    add_common_options(regress_cmd, options, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(list_cmd))
            return cmd_list_authors(options);
        if (app.got_subcommand(compute_cmd))
            return cmd_compute(options);
        if (app.got_subcommand(correlate_cmd))
            return cmd_correlate(options);
        if (app.got_subcommand(distribution_cmd))
            return cmd_distribution(options);
        if (app.got_subcommand(regress_cmd))
            return cmd_regress(options);
    } catch (const pwi::IoError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const pwi::FormatError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    } catch (const EmptyJoin& error) {
        std::cerr << "error: " << error.message << '\n';
        return 4;
    } catch (const pwi::ConfigError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
