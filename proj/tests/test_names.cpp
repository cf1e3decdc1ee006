#include <doctest.h>

#include <map>
#include <random>

#include "pwi/errors.hpp"
#include "pwi/names.hpp"
#include "test_support.hpp"

using namespace pwi;

TEST_CASE("normalize: worked examples") {
    CHECK(normalize_name("Waltman, Ludo") == "WALTMAN L");
    CHECK(normalize_name("van Raan, Anthony F.J.") == "VAN RAAN AFJ");
    CHECK(normalize_name("X, ") == "X");
}

TEST_CASE("normalize: abbreviated WoS names keep their initials block") {
    // the AU field spells initials as one block; "van Raan, AFJ" must meet
    // "van Raan, Anthony F.J." at the same key
    CHECK(normalize_name("van Raan, AFJ") == "VAN RAAN AFJ");
    CHECK(normalize_name("Moed, HF") == "MOED HF");
    CHECK(normalize_name("Waltman, L") == "WALTMAN L");
}

TEST_CASE("normalize: diacritics fold to ASCII") {
    CHECK(normalize_name("Gl\xC3\xA4nzel, Wolfgang") == "GLANZEL W");   // ä
    CHECK(normalize_name("M\xC3\xA5hlck, Paula") == "MAHLCK P");        // å
    CHECK(normalize_name("Abdulhayo\xC4\x9Flu, Mehmet") == "ABDULHAYOGLU M"); // ğ
    CHECK(normalize_name("\xC5\x81ukasz, Piotr") == "LUKASZ P");        // Ł
}

TEST_CASE("normalize: hyphenated given names give one initial per segment") {
    CHECK(normalize_name("Daniel, Hans-Dieter") == "DANIEL HD");
    CHECK(normalize_name("Bar-Ilan, Judit") == "BAR-ILAN J");
}

TEST_CASE("normalize: suffix tokens drop from the last-name part") {
    CHECK(normalize_name("Smith Jr, John") == "SMITH J");
    CHECK(normalize_name("Gates III, William Henry") == "GATES WH");
    CHECK(normalize_name("Smith Jr., John") == "SMITH J");
}

TEST_CASE("normalize: no-comma forms") {
    CHECK(normalize_name("Boekhout H") == "BOEKHOUT H");
    CHECK(normalize_name("VAN RAAN AFJ") == "VAN RAAN AFJ"); // all-caps block kept verbatim
    CHECK(normalize_name("WALTMAN") == "WALTMAN");
}

TEST_CASE("normalize: blank input is an error") {
    CHECK_THROWS_AS(normalize_name(""), std::invalid_argument);
    CHECK_THROWS_AS(normalize_name("   "), std::invalid_argument);
}

TEST_CASE("normalize: idempotent on its own output") {
    const char* inputs[] = {
        "Waltman, Ludo",       "van Raan, Anthony F.J.", "Gl\xC3\xA4nzel, Wolfgang",
        "Daniel, Hans-Dieter", "Bar-Ilan, Judit",        "X, ",
        "Moravcsik, M. J.",    "de Solla Price, Derek",  "O'Brien, Patrick",
        "Smith Jr., John",     "VINKLER P",
    };
    for (const char* raw : inputs) {
        const std::string once = normalize_name(raw);
        CHECK(normalize_name(once) == once);
    }
}

TEST_CASE("merge map: chain closure and idempotence") {
    std::vector<std::pair<std::string, std::string>> entries = {
        {"A X", "B X"},
        {"B X", "C X"},
    };
    MergeMap merges = MergeMap::from_pairs(entries);
    CHECK(merges.canonical("A X") == "C X");
    CHECK(merges.canonical("B X") == "C X");
    CHECK(merges.canonical("C X") == "C X");
    CHECK(merges.canonical(merges.canonical("A X")) == merges.canonical("A X"));
}

TEST_CASE("merge map: cycle is a configuration error naming the cycle") {
    std::vector<std::pair<std::string, std::string>> entries = {
        {"A X", "B X"},
        {"B X", "A X"},
    };
    CHECK_THROWS_WITH_AS(MergeMap::from_pairs(entries),
                         "merge map contains a cycle: A X -> B X -> A X", ConfigError);
}

TEST_CASE("merge map: conflicting canonical targets rejected, self-maps ignored") {
    std::vector<std::pair<std::string, std::string>> self = {{"A X", "A X"}};
    CHECK(MergeMap::from_pairs(self).empty());

    std::vector<std::pair<std::string, std::string>> conflict = {
        {"A X", "B X"},
        {"A X", "C X"},
    };
    CHECK_THROWS_AS(MergeMap::from_pairs(conflict), ConfigError);
}

TEST_CASE("apply_merge_map: worked example and duplicate collapse") {
    std::vector<std::pair<std::string, std::string>> entries = {
        {"VANRAAN AFJ", "VAN RAAN AFJ"},
        {"VAN RAAN A", "VAN RAAN AFJ"},
    };
    MergeMap merges = MergeMap::from_pairs(entries);

    CHECK(apply_merge_map({"VANRAAN AFJ"}, merges) ==
          std::vector<std::string>{"VAN RAAN AFJ"});
    CHECK(apply_merge_map({"X Y"}, MergeMap{}) == std::vector<std::string>{"X Y"});

    // one paper listing two variants of the same person
    CHECK(apply_merge_map({"VANRAAN AFJ", "SMITH J", "VAN RAAN A"}, merges) ==
          std::vector<std::string>{"VAN RAAN AFJ", "SMITH J"});
}

TEST_CASE("list_authors: worked example counts") {
    auto records = testsupport::worked_example_records();
    auto rows = list_authors(records);
    REQUIRE(rows.size() == 4);
    std::map<std::string, std::pair<std::size_t, std::size_t>> table;
    for (const auto& row : rows)
        table[row.author] = {row.papers, row.coauthors};
    CHECK(table["MAHLCK P"] == std::make_pair(std::size_t{1}, std::size_t{0}));
    CHECK(table["WALTMAN L"] == std::make_pair(std::size_t{1}, std::size_t{2}));
    CHECK(table["BOEKHOUT H"] == std::make_pair(std::size_t{1}, std::size_t{2}));
    CHECK(table["VAN DER WEIJDEN I"] == std::make_pair(std::size_t{1}, std::size_t{2}));

    // sorted by key ascending
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i - 1].author < rows[i].author);
}

TEST_CASE("list_authors: empty dataset") {
    CHECK(list_authors(std::vector<PaperRecord>{}).empty());
}

TEST_CASE("list_authors: co-author count is a distinct union, not a sum") {
    std::vector<PaperRecord> records;
    records.push_back(testsupport::make_record("P1", {"A K", "B K", "C K"}));
    records.push_back(testsupport::make_record("P2", {"A K", "B K", "D K"}));
    auto rows = list_authors(records);
    for (const auto& row : rows) {
        if (row.author == "A K") {
            CHECK(row.papers == 2);
            CHECK(row.coauthors == 3); // union {B,C,D}, not 4
        }
    }
}

TEST_CASE("fill_author_keys: normalizes, merges, and collapses within a paper") {
    std::vector<PaperRecord> records;
    PaperRecord record;
    record.record_id = "P1";
    record.raw_authors = {"van Raan, Anthony F.J.", "vanRaan, A.F.J.", "Waltman, Ludo"};
    records.push_back(record);

    std::vector<std::pair<std::string, std::string>> entries = {{"VANRAAN AFJ", "VAN RAAN AFJ"}};
    fill_author_keys(records, MergeMap::from_pairs(entries));
    CHECK(records[0].author_keys == std::vector<std::string>{"VAN RAAN AFJ", "WALTMAN L"});
}

TEST_CASE("property: merging never increases distinct keys and preserves others' counts") {
    std::mt19937 rng(21);
    for (int round = 0; round < 40; ++round) {
        auto dataset = testsupport::random_dataset(rng, 12, 15, 1);

        auto before = list_authors(dataset.records);

        // merge two distinct keys present in the dataset, when possible
        if (before.size() < 3)
            continue;
        const std::string variant = before[0].author;
        const std::string canonical = before[1].author;
        std::vector<std::pair<std::string, std::string>> entries = {{variant, canonical}};
        MergeMap merges = MergeMap::from_pairs(entries);

        auto merged = dataset.records;
        for (auto& record : merged)
            record.author_keys = apply_merge_map(record.author_keys, merges);
        auto after = list_authors(merged);

        CHECK(after.size() < before.size());

        // third authors keep their paper counts and never gain co-authors;
        // list_authors recomputes from scratch, which is the oracle here
        std::map<std::string, std::pair<std::size_t, std::size_t>> before_counts, after_counts;
        for (const auto& row : before)
            before_counts[row.author] = {row.papers, row.coauthors};
        for (const auto& row : after)
            after_counts[row.author] = {row.papers, row.coauthors};
        for (const auto& [author, counts] : before_counts) {
            if (author == variant || author == canonical)
                continue;
            CHECK(after_counts[author].first == counts.first);
            CHECK(after_counts[author].second <= counts.second);
        }
    }
}

TEST_CASE("property: profile co-author sets equal the brute-force union") {
    std::mt19937 rng(22);
    for (int round = 0; round < 30; ++round) {
        auto dataset = testsupport::random_dataset(rng, 10, 12, 1);
        auto profiles = build_profiles(dataset.records);
        auto adjacency = testsupport::oracle_adjacency(dataset.records);
        REQUIRE(profiles.size() == adjacency.size());
        for (const auto& [key, profile] : profiles) {
            CHECK(profile.coauthors == adjacency.at(key));
            CHECK(!profile.paper_ids.empty());
            CHECK(!profile.coauthors.contains(key));
        }
    }
}
