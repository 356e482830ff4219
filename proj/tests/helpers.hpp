#pragma once

// Test-only fixtures and brute-force oracles. Everything here is kept
// independent of the spectral code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "centrality/graph.hpp"
#include "centrality/spectral.hpp"

namespace centrality::testing {

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<Graph::Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (flip(rng)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    return Graph(n, pairs);
}

// Random spanning tree plus extra random edges.
inline Graph random_connected_graph(int n, double extra_p, std::mt19937& rng) {
    std::vector<Graph::Edge> pairs;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        pairs.emplace_back(parent(rng), v);
    }
    std::bernoulli_distribution flip(extra_p);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (flip(rng)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    return Graph(n, pairs);
}

// Vertices 0..left-1 on one side, left..left+right-1 on the other.
inline Graph random_bipartite_graph(int left, int right, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<Graph::Edge> pairs;
    for (int u = 0; u < left; ++u) {
        for (int v = 0; v < right; ++v) {
            if (flip(rng)) {
                pairs.emplace_back(u, left + v);
            }
        }
    }
    return Graph(left + right, pairs);
}

inline Hypergraph random_hypergraph(int n, int edges, std::mt19937& rng) {
    std::uniform_int_distribution<int> size_dist(1, std::max(1, n));
    std::vector<std::vector<int>> hyperedges;
    std::vector<int> vertices(n);
    for (int i = 0; i < n; ++i) {
        vertices[i] = i;
    }
    for (int e = 0; e < edges; ++e) {
        std::shuffle(vertices.begin(), vertices.end(), rng);
        const int size = size_dist(rng);
        hyperedges.emplace_back(vertices.begin(), vertices.begin() + size);
    }
    return Hypergraph(n, std::move(hyperedges));
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) {
        return false;
    }
    const auto adj = adjacency_lists(g);
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (const int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == n;
}

// Walks of length k from `from` to `to`, counted one step at a time.
inline long long enumerate_walks(const std::vector<std::vector<int>>& adj, int k, int from,
                                 int to) {
    if (k == 0) {
        return from == to ? 1 : 0;
    }
    long long total = 0;
    for (const int next : adj[from]) {
        total += enumerate_walks(adj, k - 1, next, to);
    }
    return total;
}

// Hypergraph walks step through a hyperedge containing the current
// vertex onto any *other* vertex of that hyperedge.
inline long long enumerate_hypergraph_walks(const Hypergraph& h, int k, int from, int to) {
    if (k == 0) {
        return from == to ? 1 : 0;
    }
    long long total = 0;
    for (const auto& edge : h.hyperedges()) {
        if (std::find(edge.begin(), edge.end(), from) == edge.end()) {
            continue;
        }
        for (const int next : edge) {
            if (next != from) {
                total += enumerate_hypergraph_walks(h, k - 1, next, to);
            }
        }
    }
    return total;
}

inline long long count_triangles(const Graph& g) {
    const int n = g.vertex_count();
    const SymmetricMatrix a = adjacency_matrix(g);
    long long count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (a(i, j) > 0 && a(j, k) > 0 && a(i, k) > 0) {
                    ++count;
                }
            }
        }
    }
    return count;
}

// Number of 4-cycles each vertex lies on, by checking the three pairings
// of every vertex quadruple.
inline std::vector<int> four_cycles_per_vertex(const Graph& g) {
    const int n = g.vertex_count();
    const SymmetricMatrix a = adjacency_matrix(g);
    std::vector<int> per_vertex(n, 0);
    const auto record = [&](int p, int q, int r, int s) {
        if (a(p, q) > 0 && a(q, r) > 0 && a(r, s) > 0 && a(s, p) > 0) {
            ++per_vertex[p];
            ++per_vertex[q];
            ++per_vertex[r];
            ++per_vertex[s];
        }
    };
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            for (int r = q + 1; r < n; ++r) {
                for (int s = r + 1; s < n; ++s) {
                    record(p, q, r, s);
                    record(p, q, s, r);
                    record(p, r, q, s);
                }
            }
        }
    }
    return per_vertex;
}

inline double max_abs_entry(const SymmetricMatrix& a) {
    double result = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            result = std::max(result, std::abs(a(i, j)));
        }
    }
    return result;
}

inline double orthogonality_residual(const SpectralDecomposition& d) {
    double worst = 0.0;
    for (int a = 0; a < d.n; ++a) {
        for (int b = 0; b < d.n; ++b) {
            double dot = 0.0;
            for (int i = 0; i < d.n; ++i) {
                dot += d.eigenvector(i, a) * d.eigenvector(i, b);
            }
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

inline double reconstruction_residual(const SymmetricMatrix& a, const SpectralDecomposition& d) {
    double worst = 0.0;
    for (int i = 0; i < d.n; ++i) {
        for (int j = 0; j < d.n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < d.n; ++k) {
                sum += d.eigenvector(i, k) * d.eigenvalues[k] * d.eigenvector(j, k);
            }
            worst = std::max(worst, std::abs(sum - a(i, j)));
        }
    }
    return worst;
}

} // namespace centrality::testing
