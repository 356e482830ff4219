#pragma once

#include <string>
#include <vector>

#include "centrality/spectral.hpp"
#include "centrality/weight_function.hpp"

namespace centrality {

/// Ranked values differing by at most this much are treated as tied.
inline constexpr double kTieTolerance = 1e-9;

/// Per-node values of one measure, ordered best-first, with tie groups.
struct Report {
    std::string measure;
    std::vector<double> values;            // indexed by node
    std::vector<int> ranking;              // nodes ordered by descending value
    std::vector<std::vector<int>> tie_groups; // partition of ranking into tied runs

    /// Competition ranks, indexed by node: ties share the smallest rank
    /// of their group (1-based).
    std::vector<int> ranks() const;
};

/// C_f(i) = sum_j u(i,j)^2 f(lambda_j) for every node i.
///
/// Validates that f's convergence radius exceeds the spectral radius
/// (RadiusTooSmall otherwise) and that f is finite at every eigenvalue
/// (Overflow otherwise).
std::vector<double> functional_centrality(const SpectralDecomposition& d,
                                          const WeightFunction& f);

/// C_f(Gamma) = sum_j f(lambda_j), which also equals sum_i C_f(i).
double functional_centralization(const SpectralDecomposition& d, const WeightFunction& f);

/// Extremal value (1/n) [f(n-1) + (n-1) f(-1)]: for any weight with
/// non-negative coefficients no node of any n-vertex graph exceeds it,
/// and every node of the complete graph attains it.
double complete_graph_bound(int n, const WeightFunction& f);

/// beta = sum_i cosh(lambda_i) / sum_i exp(lambda_i), in (1/2, 1];
/// equals 1 exactly when the graph is bipartite. Evaluated in a shifted
/// form that cannot overflow for any spectrum.
double bipartivity(const SpectralDecomposition& d);

/// Per-node counterpart: even-walk weight over total walk weight at
/// node i, i.e. cosh-centrality / exp-centrality, in the same shifted
/// form.
double node_bipartivity(const SpectralDecomposition& d, int node);

/// Orders nodes by descending value; values within kTieTolerance of each
/// other chain into a tie group and are listed by ascending node index.
/// All values must be finite (NonFinite otherwise).
Report rank_nodes(std::vector<double> values, std::string measure = "");

} // namespace centrality
