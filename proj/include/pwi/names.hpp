#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pwi/records.hpp"

namespace pwi {

// Collapses a raw author name to its matching key: "LASTNAME II" with the
// last name uppercased, diacritics folded to ASCII, and one initial per
// given-name token. "van Raan, Anthony F.J." becomes "VAN RAAN AFJ".
// Idempotent on its own output. Throws std::invalid_argument on blank input.
std::string normalize_name(std::string_view raw);

// Variant-key -> canonical-key folding for author disambiguation. Chains are
// closed at construction (a->b, b->c stores a->c), so applying the map twice
// equals applying it once.
class MergeMap {
public:
    MergeMap() = default;

    // Throws ConfigError naming the cycle if the entries are circular.
    static MergeMap from_pairs(std::span<const std::pair<std::string, std::string>> entries);

    // The canonical key for `key`, or `key` itself when unmapped.
    const std::string& canonical(const std::string& key) const;

    bool empty() const { return canonical_.empty(); }
    std::size_t size() const { return canonical_.size(); }

private:
    std::unordered_map<std::string, std::string> canonical_;
};

// Replaces every variant by its canonical key and collapses duplicates that
// the merge created, keeping first occurrences in order.
std::vector<std::string> apply_merge_map(std::vector<std::string> keys, const MergeMap& merges);

// Fills author_keys on every record: normalize each raw name, fold through
// the merge map, collapse within-paper duplicates.
void fill_author_keys(std::vector<PaperRecord>& records, const MergeMap& merges = {});

struct AuthorProfile {
    std::string key;
    std::set<std::string> paper_ids;
    std::set<std::string> coauthors; // distinct collaborators across the dataset
};

// Records must carry filled author_keys.
std::map<std::string, AuthorProfile> build_profiles(std::span<const PaperRecord> records);

struct AuthorRow {
    std::string author;
    std::size_t papers = 0;
    std::size_t coauthors = 0;
};

// One row per distinct key, sorted by key ascending.
std::vector<AuthorRow> list_authors(std::span<const PaperRecord> records);

} // namespace pwi
