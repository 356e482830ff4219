#include "centrality/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "centrality/errors.hpp"

namespace centrality {

bool SymmetricMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

Graph::Graph(int n, const std::vector<Edge>& pairs) : n_(n) {
    if (n < 0) {
        throw InvalidOrder("vertex count must be non-negative, got " + std::to_string(n));
    }
    edges_.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw IndexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
        }
        if (u == v) {
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> hyperedges)
    : n_(n), hyperedges_(std::move(hyperedges)) {
    if (n < 0) {
        throw InvalidOrder("vertex count must be non-negative, got " + std::to_string(n));
    }
    for (std::size_t e = 0; e < hyperedges_.size(); ++e) {
        const auto& members = hyperedges_[e];
        if (members.empty()) {
            throw InvalidParam("hyperedge " + std::to_string(e) + " is empty");
        }
        std::unordered_set<int> seen;
        for (int v : members) {
            if (v < 0 || v >= n) {
                throw IndexOutOfRange("hyperedge " + std::to_string(e) + " contains vertex " +
                                      std::to_string(v) + ", out of range for " +
                                      std::to_string(n) + " vertices");
            }
            if (!seen.insert(v).second) {
                throw DuplicateVertexInHyperedge("hyperedge " + std::to_string(e) +
                                                 " repeats vertex " + std::to_string(v));
            }
        }
    }
}

Graph graph_from_edge_list(int n, const std::vector<Graph::Edge>& pairs) {
    return Graph(n, pairs);
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        a.set(u, v, 1.0);
    }
    return a;
}

SymmetricMatrix hypergraph_adjacency(const Hypergraph& h) {
    SymmetricMatrix a(h.vertex_count());
    for (const auto& members : h.hyperedges()) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                a.set(members[i], members[j], a(members[i], members[j]) + 1.0);
            }
        }
    }
    return a;
}

Graph complete_graph(int n) {
    if (n < 1) {
        throw InvalidOrder("complete graph needs at least one vertex, got " + std::to_string(n));
    }
    std::vector<Graph::Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    return Graph(n, pairs);
}

Graph cubic_example_graph() {
    // 1-based labels as usually drawn: {1-2, 1-8, 2-8, 1-3, 2-5, 8-7,
    // 3-4, 3-6, 5-4, 5-6, 7-4, 7-6}.
    const std::vector<Graph::Edge> edges = {
        {0, 1}, {0, 7}, {1, 7}, {0, 2}, {1, 4}, {7, 6},
        {2, 3}, {2, 5}, {4, 3}, {4, 5}, {6, 3}, {6, 5},
    };
    return Graph(8, edges);
}

} // namespace centrality
