#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pwi/records.hpp"

namespace pwi {

// Undirected co-authorship graph: one node per author key, an edge wherever
// two authors share at least one paper. Nodes are dense indices assigned in
// first-appearance order; keys appear only at the API boundary.
class CoauthorGraph {
public:
    using NodeId = std::uint32_t;

    // Distance sentinel for authors outside a laureate's component.
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

    struct PaperNodes {
        std::string record_id;
        std::vector<NodeId> authors; // deduplicated within the paper
    };

    // Records must carry filled author_keys. Single-author papers contribute
    // an isolated node and no edges.
    static CoauthorGraph build(std::span<const PaperRecord> records);

    std::size_t node_count() const { return keys_.size(); }
    std::optional<NodeId> find(std::string_view key) const;
    const std::string& key(NodeId node) const { return keys_[node]; }
    std::span<const NodeId> neighbors(NodeId node) const { return adjacency_[node]; }
    std::size_t degree(NodeId node) const { return adjacency_[node].size(); }
    std::size_t papers_of(NodeId node) const { return paper_counts_[node]; }
    const std::vector<PaperNodes>& papers() const { return papers_; }

    // Unique undirected edges as key pairs (a < b), sorted, for export.
    std::vector<std::pair<std::string, std::string>> edge_list() const;

private:
    std::vector<std::string> keys_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::size_t> paper_counts_;
    std::vector<PaperNodes> papers_;
};

// Shortest co-authorship distances from one laureate to every node.
struct DistanceTable {
    std::string laureate;
    std::optional<CoauthorGraph::NodeId> laureate_node; // empty: laureate not in the dataset
    std::vector<std::uint32_t> dist;                    // kUnreachable when disconnected

    bool in_graph() const { return laureate_node.has_value(); }
};

// Breadth-first distances from the laureate. A laureate absent from the
// dataset yields an all-unreachable table (callers warn, never fail).
DistanceTable distances_from(const CoauthorGraph& graph, std::string_view laureate_key);

// Degree of the author's node. Throws std::invalid_argument for unknown keys.
std::size_t count_coauthors(const CoauthorGraph& graph, std::string_view author_key);

} // namespace pwi
