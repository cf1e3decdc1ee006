#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwi/graph.hpp"
#include "pwi/records.hpp"

namespace pwi {

// Two readings of the per-paper distance to a prize winner.
//   Realized: the first hop must be a co-authorship on that specific paper;
//             remaining hops use the full network. The default.
//   Global:   whole-network shortest path, identical across an author's papers.
enum class DistanceMode { Realized, Global };

struct LaureateSet {
    std::vector<std::string> keys; // normalized, sorted, unique
    std::string label;

    // Normalizes raw names; already-normalized keys pass through unchanged.
    static LaureateSet from_names(std::span<const std::string> names, std::string label = {});

    bool contains(std::string_view key) const;
    bool empty() const { return keys.empty(); }
};

// Harmonic distance weight 1/2^d; unreachable weighs nothing.
double weight(std::uint32_t distance);

// Distance from `author` to the laureate of `from_laureate` for the paper at
// `paper_index` in the graph's paper list. Throws std::invalid_argument if
// the author is not on that paper.
std::uint32_t paper_distance(const CoauthorGraph& graph, CoauthorGraph::NodeId author,
                             std::size_t paper_index, const DistanceTable& from_laureate,
                             DistanceMode mode);

struct PwiRow {
    std::string author;
    double pwi = 0.0;
    std::size_t n_papers = 0;
    std::size_t n_coauthors = 0;
    bool is_laureate = false;
    double pwi_per_paper = 0.0;
    std::optional<double> pwi_per_coauthor; // absent when n_coauthors == 0
};

// Output order: pwi descending, then n_papers descending, then key ascending.
bool pwi_row_order(const PwiRow& a, const PwiRow& b);

struct PwiOptions {
    DistanceMode mode = DistanceMode::Realized;
    std::optional<std::uint32_t> max_distance; // distances beyond the cap count as unreachable
};

struct PwiResult {
    std::vector<PwiRow> rows;
    std::vector<std::string> matched_laureates;   // laureates present in the dataset
    std::vector<std::string> unmatched_laureates; // laureates with no papers in the dataset
};

// PWI = sum over the author's papers and all laureates of weight(distance).
PwiResult compute_pwi(const CoauthorGraph& graph, const LaureateSet& laureates,
                      const PwiOptions& options = {});

// Convenience: builds the graph from records first. Records must carry
// filled author_keys.
PwiResult compute_pwi(std::span<const PaperRecord> records, const LaureateSet& laureates,
                      const PwiOptions& options = {});

// Fills pwi_per_paper and pwi_per_coauthor on computed rows.
void relative_variants(std::vector<PwiRow>& rows);

} // namespace pwi
