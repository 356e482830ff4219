#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centrality/graph.hpp"
#include "centrality/weight_function.hpp"

namespace centrality {

/// Exact walk counts overflow 64 bits well before the series tails used
/// by the oracle get small (a max-degree-9 table has to reach order 40),
/// so the table stores 128-bit integers. All arithmetic is
/// overflow-checked; IntegerOverflow is raised rather than wrapping.
using WalkCount = __int128;

std::string walk_count_string(WalkCount v);

/// Highest truncation order the oracle will select on its own.
inline constexpr int kMaxSeriesOrder = 60;

/// Ground-truth walk counts: the integer matrix powers A^0..A^K of an
/// adjacency matrix, computed exactly and independently of any
/// eigensolver. The entry (A^k)_ij is the number of walks of length k
/// from i to j.
class WalkTable {
public:
    /// Requires a symmetric matrix with non-negative integer entries
    /// (simple-graph or hypergraph adjacency); throws InvalidParam
    /// otherwise and IntegerOverflow if any power exceeds 128 bits.
    WalkTable(const SymmetricMatrix& a, int max_order);

    int size() const { return n_; }
    int max_order() const { return max_order_; }

    /// Number of walks of length k from i to j.
    WalkCount walk_count(int k, int i, int j) const;

    /// Number of closed walks of length k at vertex i.
    WalkCount local_moment(int k, int i) const;

    /// Trace of A^k: total closed walks of length k.
    WalkCount spectral_moment(int k) const;

    /// Sum of all entries of A^k: total walks of length k.
    WalkCount total_walks(int k) const;

    /// Exact upper bound on the spectral radius (maximum row sum of A);
    /// used to majorize series tails without touching the eigensolver.
    double spectral_radius_bound() const { return radius_bound_; }

private:
    const WalkCount* power(int k) const;

    int n_;
    int max_order_;
    double radius_bound_;
    std::vector<std::vector<WalkCount>> powers_;
};

struct TruncatedCentrality {
    double value = 0.0;
    /// Bound on the dropped tail sum_{k>K} |a_k| lambda^k, evaluated at
    /// the table's spectral-radius bound. Present when a closed form
    /// exists: the exp-family majorant for exp/sinh/cosh, the remaining
    /// terms for polynomials; absent for custom series.
    std::optional<double> tail_bound;
};

/// Partial sum sum_{k<=order} a_k mu_k(i) of a functional centrality,
/// straight from the exact walk counts.
TruncatedCentrality truncated_centrality(const WalkTable& table, const WeightFunction& f, int node,
                                         int order);

/// Smallest truncation order whose tail bound at lambda_bound drops
/// below tolerance, capped at kMaxSeriesOrder. Polynomials return their
/// degree (truncation there is exact).
int order_for_tolerance(const WeightFunction& f, double lambda_bound, double tolerance);

} // namespace centrality
