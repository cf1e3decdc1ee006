#include <doctest.h>

#include <algorithm>
#include <random>

#include "pwi/pwi.hpp"
#include "test_support.hpp"

using namespace pwi;
using testsupport::make_record;

namespace {

LaureateSet laureates_of(std::vector<std::string> keys) {
    return LaureateSet::from_names(keys, "test");
}

std::map<std::string, PwiRow> by_author(const std::vector<PwiRow>& rows) {
    std::map<std::string, PwiRow> out;
    for (const auto& row : rows)
        out[row.author] = row;
    return out;
}

} // namespace

TEST_CASE("weight: harmonic distance weights") {
    CHECK(weight(0) == 1.0);
    CHECK(weight(1) == 0.5);
    CHECK(weight(2) == 0.25);
    CHECK(weight(3) == 0.125);
    CHECK(weight(10) == 1.0 / 1024.0);
    CHECK(weight(CoauthorGraph::kUnreachable) == 0.0);
}

TEST_CASE("paper_distance: worked example and contract") {
    auto records = testsupport::worked_example_records();
    auto graph = CoauthorGraph::build(records);
    auto table = distances_from(graph, "WALTMAN L");

    const auto boekhout = *graph.find("BOEKHOUT H");
    const auto mahlck = *graph.find("MAHLCK P");
    // paper 0 = Mahlck solo, paper 1 = the triangle paper
    CHECK(paper_distance(graph, boekhout, 1, table, DistanceMode::Realized) == 1);
    CHECK(paper_distance(graph, boekhout, 1, table, DistanceMode::Global) == 1);
    CHECK(paper_distance(graph, mahlck, 0, table, DistanceMode::Realized) ==
          CoauthorGraph::kUnreachable);
    CHECK(paper_distance(graph, mahlck, 0, table, DistanceMode::Global) ==
          CoauthorGraph::kUnreachable);
    CHECK_THROWS_AS(paper_distance(graph, mahlck, 1, table, DistanceMode::Realized),
                    std::invalid_argument);
}

TEST_CASE("paper_distance: the chain separates the two modes") {
    std::vector<PaperRecord> records{make_record("P1", {"W K", "A K"}),
                                     make_record("P2", {"A K", "B K"})};
    auto graph = CoauthorGraph::build(records);
    auto table = distances_from(graph, "W K");
    const auto a = *graph.find("A K");
    CHECK(paper_distance(graph, a, 1, table, DistanceMode::Realized) == 3); // 1 + D(B)=2
    CHECK(paper_distance(graph, a, 1, table, DistanceMode::Global) == 1);
}

TEST_CASE("compute: worked example end to end") {
    auto records = testsupport::worked_example_records();
    auto result = compute_pwi(records, laureates_of({"WALTMAN L"}));
    relative_variants(result.rows);
    REQUIRE(result.rows.size() == 4);

    auto rows = by_author(result.rows);
    CHECK(rows["WALTMAN L"].pwi == 1.0);
    CHECK(rows["WALTMAN L"].n_papers == 1);
    CHECK(rows["WALTMAN L"].n_coauthors == 2);
    CHECK(rows["WALTMAN L"].is_laureate);
    CHECK(rows["BOEKHOUT H"].pwi == 0.5);
    CHECK(rows["BOEKHOUT H"].n_papers == 1);
    CHECK(rows["BOEKHOUT H"].n_coauthors == 2);
    CHECK(rows["VAN DER WEIJDEN I"].pwi == 0.5);
    CHECK(rows["MAHLCK P"].pwi == 0.0);
    CHECK(rows["MAHLCK P"].n_coauthors == 0);

    // row order: pwi desc, papers desc, key asc
    CHECK(result.rows[0].author == "WALTMAN L");
    CHECK(result.rows[1].author == "BOEKHOUT H");
    CHECK(result.rows[2].author == "VAN DER WEIJDEN I");
    CHECK(result.rows[3].author == "MAHLCK P");
}

TEST_CASE("compute: a solo-publishing laureate scores exactly their paper count") {
    std::vector<PaperRecord> records;
    for (int p = 0; p < 39; ++p)
        records.push_back(make_record("P" + std::to_string(p), {"VINKLER P"}));
    auto result = compute_pwi(records, laureates_of({"VINKLER P"}));
    relative_variants(result.rows);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].pwi == 39.0);
    CHECK(result.rows[0].n_papers == 39);
    CHECK(result.rows[0].n_coauthors == 0);
    CHECK(result.rows[0].pwi_per_paper == 1.0);
    CHECK_FALSE(result.rows[0].pwi_per_coauthor.has_value());
}

TEST_CASE("compute: chain dataset in both modes") {
    std::vector<PaperRecord> records{make_record("P1", {"W K", "A K"}),
                                     make_record("P2", {"A K", "B K"})};

    auto realized = by_author(compute_pwi(records, laureates_of({"W K"})).rows);
    CHECK(realized["W K"].pwi == 1.0);
    CHECK(realized["A K"].pwi == 0.625); // 0.5 + 0.125
    CHECK(realized["B K"].pwi == 0.25);

    PwiOptions global;
    global.mode = DistanceMode::Global;
    auto rows = by_author(compute_pwi(records, laureates_of({"W K"}), global).rows);
    CHECK(rows["W K"].pwi == 1.0);
    CHECK(rows["A K"].pwi == 1.0);
    CHECK(rows["B K"].pwi == 0.25);
}

TEST_CASE("compute: empty records and empty laureate set") {
    CHECK(compute_pwi(std::vector<PaperRecord>{}, laureates_of({"W K"})).rows.empty());

    auto records = testsupport::worked_example_records();
    auto result = compute_pwi(records, LaureateSet{});
    CHECK(result.matched_laureates.empty());
    for (const auto& row : result.rows)
        CHECK(row.pwi == 0.0);
}

TEST_CASE("compute: unmatched laureates are reported, matched still count") {
    auto records = testsupport::worked_example_records();
    auto result = compute_pwi(records, laureates_of({"WALTMAN L", "NOBODY X"}));
    CHECK(result.matched_laureates == std::vector<std::string>{"WALTMAN L"});
    CHECK(result.unmatched_laureates == std::vector<std::string>{"NOBODY X"});
    CHECK(by_author(result.rows)["WALTMAN L"].pwi == 1.0);
}

TEST_CASE("compute: max_d caps distances into unreachability") {
    std::vector<PaperRecord> records{make_record("P1", {"W K", "A K"}),
                                     make_record("P2", {"A K", "B K"})};
    PwiOptions capped;
    capped.max_distance = 1;
    auto rows = by_author(compute_pwi(records, laureates_of({"W K"}), capped).rows);
    CHECK(rows["W K"].pwi == 1.0);
    CHECK(rows["A K"].pwi == 0.5); // the distance-3 term is capped away
    CHECK(rows["B K"].pwi == 0.0);
}

TEST_CASE("relative_variants: division and the absent co-author case") {
    std::vector<PwiRow> rows(3);
    rows[0] = {"A K", 1.0, 1, 2, false, 0, std::nullopt};
    rows[1] = {"V K", 39.0, 39, 0, true, 0, std::nullopt};
    rows[2] = {"B K", 0.625, 2, 2, false, 0, std::nullopt};
    relative_variants(rows);
    CHECK(rows[0].pwi_per_paper == 1.0);
    CHECK(rows[0].pwi_per_coauthor == 0.5);
    CHECK(rows[1].pwi_per_paper == 1.0);
    CHECK_FALSE(rows[1].pwi_per_coauthor.has_value());
    CHECK(rows[2].pwi_per_paper == 0.3125);
    CHECK(rows[2].pwi_per_coauthor == 0.3125);
}

TEST_CASE("property: both modes match the exhaustive oracle") {
    std::mt19937 rng(41);
    for (int round = 0; round < 60; ++round) {
        auto dataset = testsupport::random_dataset(rng);
        for (DistanceMode mode : {DistanceMode::Realized, DistanceMode::Global}) {
            PwiOptions options;
            options.mode = mode;
            auto result = compute_pwi(dataset.records, laureates_of(dataset.laureates), options);
            auto expected = testsupport::oracle_pwi(dataset.records, dataset.laureates, mode);
            REQUIRE(result.rows.size() == expected.size());
            for (const auto& row : result.rows)
                CHECK(row.pwi == expected.at(row.author));
        }
    }
}

TEST_CASE("property: laureate floor and disconnection zero") {
    std::mt19937 rng(42);
    for (int round = 0; round < 40; ++round) {
        auto dataset = testsupport::random_dataset(rng);
        auto laureates = laureates_of(dataset.laureates);
        auto result = compute_pwi(dataset.records, laureates);

        auto adjacency = testsupport::oracle_adjacency(dataset.records);
        for (const auto& row : result.rows) {
            if (row.is_laureate)
                CHECK(row.pwi >= static_cast<double>(row.n_papers));
            bool any_laureate_reachable = false;
            for (const auto& laureate : dataset.laureates)
                if (adjacency.contains(laureate) &&
                    testsupport::oracle_distance(adjacency, row.author, laureate) !=
                        testsupport::kOracleUnreachable)
                    any_laureate_reachable = true;
            if (!any_laureate_reachable)
                CHECK(row.pwi == 0.0);
        }
    }
}

TEST_CASE("property: appending a record never decreases anyone's PWI") {
    std::mt19937 rng(43);
    for (int round = 0; round < 25; ++round) {
        auto dataset = testsupport::random_dataset(rng, 15, 15, 2);
        auto grown = dataset.records;
        testsupport::append_random_record(rng, grown, 18);
        for (DistanceMode mode : {DistanceMode::Realized, DistanceMode::Global}) {
            PwiOptions options;
            options.mode = mode;
            auto before = by_author(
                compute_pwi(dataset.records, laureates_of(dataset.laureates), options).rows);
            auto after =
                by_author(compute_pwi(grown, laureates_of(dataset.laureates), options).rows);
            for (const auto& [author, row] : before)
                CHECK(after.at(author).pwi >= row.pwi);
        }
    }
}

TEST_CASE("property: global mode factorizes into papers times reach") {
    std::mt19937 rng(44);
    for (int round = 0; round < 40; ++round) {
        auto dataset = testsupport::random_dataset(rng);
        auto graph = CoauthorGraph::build(dataset.records);
        auto laureates = laureates_of(dataset.laureates);

        std::vector<DistanceTable> tables;
        for (const auto& key : laureates.keys)
            tables.push_back(distances_from(graph, key));

        PwiOptions options;
        options.mode = DistanceMode::Global;
        auto rows = compute_pwi(graph, laureates, options).rows;
        for (const auto& row : rows) {
            const auto node = *graph.find(row.author);
            double reach = 0.0;
            for (const auto& table : tables)
                reach += weight(table.dist[node]);
            CHECK(row.pwi == static_cast<double>(row.n_papers) * reach);
        }
    }
}

TEST_CASE("property: record order never changes any output value") {
    std::mt19937 rng(45);
    for (int round = 0; round < 20; ++round) {
        auto dataset = testsupport::random_dataset(rng, 15, 20, 2);
        auto shuffled = dataset.records;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);

        auto first = compute_pwi(dataset.records, laureates_of(dataset.laureates));
        auto second = compute_pwi(shuffled, laureates_of(dataset.laureates));
        REQUIRE(first.rows.size() == second.rows.size());
        auto lookup = by_author(second.rows);
        for (const auto& row : first.rows) {
            CHECK(row.pwi == lookup.at(row.author).pwi);
            CHECK(row.n_papers == lookup.at(row.author).n_papers);
            CHECK(row.n_coauthors == lookup.at(row.author).n_coauthors);
        }
    }
}
