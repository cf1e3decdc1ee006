#include "pwi/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pwi {

CoauthorGraph CoauthorGraph::build(std::span<const PaperRecord> records) {
    CoauthorGraph graph;

    auto intern = [&graph](const std::string& key) -> NodeId {
        auto it = graph.index_.find(key);
        if (it != graph.index_.end())
            return it->second;
        NodeId id = static_cast<NodeId>(graph.keys_.size());
        graph.keys_.push_back(key);
        graph.index_.emplace(key, id);
        return id;
    };

    std::vector<std::pair<NodeId, NodeId>> pairs;
    graph.papers_.reserve(records.size());
    for (const PaperRecord& record : records) {
        if (record.author_keys.empty())
            continue;
        PaperNodes paper;
        paper.record_id = record.record_id;
        paper.authors.reserve(record.author_keys.size());
        for (const std::string& key : record.author_keys)
            paper.authors.push_back(intern(key));
        for (std::size_t i = 0; i < paper.authors.size(); ++i)
            for (std::size_t j = i + 1; j < paper.authors.size(); ++j)
                pairs.emplace_back(paper.authors[i], paper.authors[j]);
        graph.papers_.push_back(std::move(paper));
    }

    graph.adjacency_.assign(graph.keys_.size(), {});
    graph.paper_counts_.assign(graph.keys_.size(), 0);
    for (const PaperNodes& paper : graph.papers_)
        for (NodeId node : paper.authors)
            ++graph.paper_counts_[node];

    for (auto [a, b] : pairs) {
        graph.adjacency_[a].push_back(b);
        graph.adjacency_[b].push_back(a);
    }
    for (auto& neighbors : graph.adjacency_) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }
    return graph;
}

std::optional<CoauthorGraph::NodeId> CoauthorGraph::find(std::string_view key) const {
    auto it = index_.find(std::string(key));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::string, std::string>> CoauthorGraph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> edges;
    for (NodeId a = 0; a < adjacency_.size(); ++a) {
        for (NodeId b : adjacency_[a]) {
            if (a >= b)
                continue;
            const std::string& ka = keys_[a];
            const std::string& kb = keys_[b];
            edges.emplace_back(std::min(ka, kb), std::max(ka, kb));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

DistanceTable distances_from(const CoauthorGraph& graph, std::string_view laureate_key) {
    DistanceTable table;
    table.laureate = std::string(laureate_key);
    table.laureate_node = graph.find(laureate_key);
    table.dist.assign(graph.node_count(), CoauthorGraph::kUnreachable);
    if (!table.laureate_node)
        return table;

    std::queue<CoauthorGraph::NodeId> frontier;
    table.dist[*table.laureate_node] = 0;
    frontier.push(*table.laureate_node);
    while (!frontier.empty()) {
        CoauthorGraph::NodeId node = frontier.front();
        frontier.pop();
        const std::uint32_t next = table.dist[node] + 1;
        for (CoauthorGraph::NodeId neighbor : graph.neighbors(node)) {
            if (table.dist[neighbor] == CoauthorGraph::kUnreachable) {
                table.dist[neighbor] = next;
                frontier.push(neighbor);
            }
        }
    }
    return table;
}

std::size_t count_coauthors(const CoauthorGraph& graph, std::string_view author_key) {
    auto node = graph.find(author_key);
    if (!node)
        throw std::invalid_argument("unknown author key: \"" + std::string(author_key) + "\"");
    return graph.degree(*node);
}

} // namespace pwi
