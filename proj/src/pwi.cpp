#include "pwi/pwi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwi/names.hpp"

namespace pwi {

LaureateSet LaureateSet::from_names(std::span<const std::string> names, std::string label) {
    LaureateSet set;
    set.label = std::move(label);
    set.keys.reserve(names.size());
    for (const std::string& name : names)
        set.keys.push_back(normalize_name(name));
    std::sort(set.keys.begin(), set.keys.end());
    set.keys.erase(std::unique(set.keys.begin(), set.keys.end()), set.keys.end());
    return set;
}

bool LaureateSet::contains(std::string_view key) const {
    return std::binary_search(keys.begin(), keys.end(), key);
}

double weight(std::uint32_t distance) {
    if (distance == CoauthorGraph::kUnreachable)
        return 0.0;
    if (distance > 1074)
        return 0.0; // below the smallest subnormal
    return std::ldexp(1.0, -static_cast<int>(distance));
}

namespace {

constexpr std::uint32_t kUnreachable = CoauthorGraph::kUnreachable;

// Smallest and second-smallest laureate distance over a paper's authors,
// with the multiplicity of the smallest. Lets every author read
// "min over my co-authors on this paper" in O(1).
struct PaperMins {
    std::uint32_t min1 = kUnreachable;
    std::uint32_t min2 = kUnreachable;
    std::size_t min1_count = 0;
};

PaperMins paper_mins(std::span<const CoauthorGraph::NodeId> authors, const DistanceTable& table) {
    PaperMins mins;
    for (CoauthorGraph::NodeId node : authors) {
        const std::uint32_t d = table.dist[node];
        if (d < mins.min1) {
            mins.min2 = mins.min1;
            mins.min1 = d;
            mins.min1_count = 1;
        } else if (d == mins.min1 && d != kUnreachable) {
            ++mins.min1_count;
        } else if (d < mins.min2) {
            mins.min2 = d;
        }
    }
    return mins;
}

std::uint32_t min_excluding(const PaperMins& mins, std::uint32_t own_distance) {
    if (own_distance == mins.min1 && mins.min1_count == 1)
        return mins.min2;
    return mins.min1;
}

std::uint32_t realized_distance(std::uint32_t min_over_others) {
    return min_over_others == kUnreachable ? kUnreachable : min_over_others + 1;
}

std::uint32_t apply_cap(std::uint32_t distance, const std::optional<std::uint32_t>& cap) {
    if (cap && distance != kUnreachable && distance > *cap)
        return kUnreachable;
    return distance;
}

} // namespace

std::uint32_t paper_distance(const CoauthorGraph& graph, CoauthorGraph::NodeId author,
                             std::size_t paper_index, const DistanceTable& from_laureate,
                             DistanceMode mode) {
    const auto& authors = graph.papers().at(paper_index).authors;
    if (std::find(authors.begin(), authors.end(), author) == authors.end())
        throw std::invalid_argument("author \"" + graph.key(author) + "\" is not on paper \"" +
                                    graph.papers()[paper_index].record_id + "\"");

    if (from_laureate.laureate_node && author == *from_laureate.laureate_node)
        return 0;
    if (mode == DistanceMode::Global)
        return from_laureate.dist[author];

    PaperMins mins = paper_mins(authors, from_laureate);
    return realized_distance(min_excluding(mins, from_laureate.dist[author]));
}

PwiResult compute_pwi(const CoauthorGraph& graph, const LaureateSet& laureates,
                      const PwiOptions& options) {
    PwiResult result;

    std::vector<DistanceTable> tables;
    tables.reserve(laureates.keys.size());
    for (const std::string& key : laureates.keys) {
        DistanceTable table = distances_from(graph, key);
        if (table.in_graph()) {
            result.matched_laureates.push_back(key);
            tables.push_back(std::move(table));
        } else {
            result.unmatched_laureates.push_back(key);
        }
    }

    std::vector<double> totals(graph.node_count(), 0.0);
    for (const auto& paper : graph.papers()) {
        for (const DistanceTable& table : tables) {
            const PaperMins mins = paper_mins(paper.authors, table);
            for (CoauthorGraph::NodeId author : paper.authors) {
                std::uint32_t d;
                if (author == *table.laureate_node)
                    d = 0;
                else if (options.mode == DistanceMode::Global)
                    d = table.dist[author];
                else
                    d = realized_distance(min_excluding(mins, table.dist[author]));
                totals[author] += weight(apply_cap(d, options.max_distance));
            }
        }
    }

    result.rows.reserve(graph.node_count());
    for (CoauthorGraph::NodeId node = 0; node < graph.node_count(); ++node) {
        PwiRow row;
        row.author = graph.key(node);
        row.pwi = totals[node];
        row.n_papers = graph.papers_of(node);
        row.n_coauthors = graph.degree(node);
        row.is_laureate = laureates.contains(row.author);
        result.rows.push_back(std::move(row));
    }
    std::sort(result.rows.begin(), result.rows.end(), pwi_row_order);
    return result;
}

PwiResult compute_pwi(std::span<const PaperRecord> records, const LaureateSet& laureates,
                      const PwiOptions& options) {
    return compute_pwi(CoauthorGraph::build(records), laureates, options);
}

bool pwi_row_order(const PwiRow& a, const PwiRow& b) {
    if (a.pwi != b.pwi)
        return a.pwi > b.pwi;
    if (a.n_papers != b.n_papers)
        return a.n_papers > b.n_papers;
    return a.author < b.author;
}

void relative_variants(std::vector<PwiRow>& rows) {
    for (PwiRow& row : rows) {
        row.pwi_per_paper = row.n_papers > 0 ? row.pwi / static_cast<double>(row.n_papers) : 0.0;
        if (row.n_coauthors > 0)
            row.pwi_per_coauthor = row.pwi / static_cast<double>(row.n_coauthors);
        else
            row.pwi_per_coauthor.reset();
    }
}

} // namespace pwi
