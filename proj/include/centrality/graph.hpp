#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace centrality {

/// Dense real square matrix kept symmetric through set(); row-major storage.
/// Adjacency builders in this module always produce a zero diagonal.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double operator()(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return values_[static_cast<std::size_t>(i) * n_ + j];
    }

    // Writes both (i,j) and (j,i).
    void set(int i, int j, double value) {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        values_[static_cast<std::size_t>(i) * n_ + j] = value;
        values_[static_cast<std::size_t>(j) * n_ + i] = value;
    }

    // Raw row-major storage; mutating through this can break symmetry,
    // which eigendecompose() rejects.
    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }

    bool is_symmetric() const;

private:
    int n_;
    std::vector<double> values_;
};

/// Simple undirected graph: vertex count plus a deduplicated edge set.
/// Edges are stored as (u, v) with u < v, sorted; no self-loops.
class Graph {
public:
    using Edge = std::pair<int, int>;

    // Accepts duplicates and both orientations; rejects self-loops and
    // out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& pairs);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<int> degrees() const;

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Hypergraph: vertex count plus an ordered list of hyperedges. Each
/// hyperedge is a non-empty set of distinct vertices; the list may
/// repeat hyperedges (multiplicity shows up in the adjacency entries).
class Hypergraph {
public:
    Hypergraph(int n, std::vector<std::vector<int>> hyperedges);

    int vertex_count() const { return n_; }
    std::size_t hyperedge_count() const { return hyperedges_.size(); }
    const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }

private:
    int n_;
    std::vector<std::vector<int>> hyperedges_;
};

Graph graph_from_edge_list(int n, const std::vector<Graph::Edge>& pairs);

/// A[i][j] = 1 iff {i,j} is an edge; zero diagonal.
SymmetricMatrix adjacency_matrix(const Graph& g);

/// a_ij = number of hyperedges containing both i and j (i != j), a_ii = 0.
/// Equals E E^T with the diagonal zeroed, E the vertex-by-hyperedge
/// incidence matrix.
SymmetricMatrix hypergraph_adjacency(const Hypergraph& h);

Graph complete_graph(int n);

/// 8-vertex cubic graph whose vertices split into three orbits: {1,2,8}
/// span the single triangle, {4,6} sit on three 4-cycles each, and
/// {3,5,7} on two each (1-based labels). Different closed-walk weightings
/// rank the orbits differently, which makes this the standard fixture
/// for the centrality measures in this library.
Graph cubic_example_graph();

} // namespace centrality
