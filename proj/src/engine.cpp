#include "centrality/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "centrality/errors.hpp"

namespace centrality {

namespace {

// f(lambda_j) for every eigenvalue, after checking Theorem-style
// preconditions: the series must converge beyond the spectral radius,
// and the closed form must stay finite.
std::vector<double> weights_at_eigenvalues(const SpectralDecomposition& d,
                                           const WeightFunction& f) {
    if (d.n >= 1 && !(f.convergence_radius() > spectral_radius(d))) {
        throw RadiusTooSmall("weight '" + f.name() + "' converges only for |x| < " +
                             std::to_string(f.convergence_radius()) +
                             " but the spectral radius is " +
                             std::to_string(spectral_radius(d)));
    }
    std::vector<double> values(d.n);
    for (int j = 0; j < d.n; ++j) {
        values[j] = f.value(d.eigenvalues[j]);
        if (!std::isfinite(values[j])) {
            throw Overflow("weight '" + f.name() + "' is not finite at eigenvalue " +
                           std::to_string(d.eigenvalues[j]));
        }
    }
    return values;
}

// Largest |eigenvalue|; shifting exponents by this keeps them all <= 0.
double shift(const SpectralDecomposition& d) {
    double s = 0.0;
    for (const double lambda : d.eigenvalues) {
        s = std::max(s, std::abs(lambda));
    }
    return s;
}

struct OddEvenParts {
    double even = 0.0;
    double odd = 0.0;
};

// Accumulates weighted cosh/sinh parts scaled by e^{-s}. The odd part is
// a series of non-negative walk counts, so it is clamped at zero: on
// bipartite spectra roundoff can land it a hair negative, which would
// push the ratio above 1.
template <typename TermWeight>
OddEvenParts shifted_parts(const SpectralDecomposition& d, double s, TermWeight weight) {
    OddEvenParts parts;
    for (int j = 0; j < d.n; ++j) {
        const double up = std::exp(d.eigenvalues[j] - s);
        const double down = std::exp(-d.eigenvalues[j] - s);
        parts.even += weight(j) * 0.5 * (up + down);
        parts.odd += weight(j) * 0.5 * (up - down);
    }
    parts.odd = std::max(parts.odd, 0.0);
    return parts;
}

} // namespace

std::vector<int> Report::ranks() const {
    std::vector<int> result(values.size(), 0);
    int position = 1;
    for (const auto& group : tie_groups) {
        for (const int node : group) {
            result[node] = position;
        }
        position += static_cast<int>(group.size());
    }
    return result;
}

std::vector<double> functional_centrality(const SpectralDecomposition& d,
                                          const WeightFunction& f) {
    const std::vector<double> fvals = weights_at_eigenvalues(d, f);
    std::vector<double> centrality(d.n, 0.0);
    for (int i = 0; i < d.n; ++i) {
        const double* row = &d.eigenvectors[static_cast<std::size_t>(i) * d.n];
        double sum = 0.0;
        for (int j = 0; j < d.n; ++j) {
            sum += row[j] * row[j] * fvals[j];
        }
        centrality[i] = sum;
    }
    return centrality;
}

double functional_centralization(const SpectralDecomposition& d, const WeightFunction& f) {
    const std::vector<double> fvals = weights_at_eigenvalues(d, f);
    return std::accumulate(fvals.begin(), fvals.end(), 0.0);
}

double complete_graph_bound(int n, const WeightFunction& f) {
    if (n < 1) {
        throw InvalidOrder("bound needs n >= 1, got " + std::to_string(n));
    }
    const double at_top = f.value(static_cast<double>(n - 1));
    const double at_minus_one = f.value(-1.0);
    const double bound = (at_top + (n - 1) * at_minus_one) / n;
    if (!std::isfinite(bound)) {
        throw Overflow("bound overflows for weight '" + f.name() + "' at n = " +
                       std::to_string(n));
    }
    return bound;
}

double bipartivity(const SpectralDecomposition& d) {
    assert(d.n >= 1);
    const double s = shift(d);
    const OddEvenParts parts = shifted_parts(d, s, [](int) { return 1.0; });
    return parts.even / (parts.even + parts.odd);
}

double node_bipartivity(const SpectralDecomposition& d, int node) {
    if (node < 0 || node >= d.n) {
        throw IndexOutOfRange("node " + std::to_string(node) + " out of range for " +
                              std::to_string(d.n) + " nodes");
    }
    const double s = shift(d);
    const double* row = &d.eigenvectors[static_cast<std::size_t>(node) * d.n];
    const OddEvenParts parts =
        shifted_parts(d, s, [row](int j) { return row[j] * row[j]; });
    return parts.even / (parts.even + parts.odd);
}

Report rank_nodes(std::vector<double> values, std::string measure) {
    for (const double v : values) {
        if (!std::isfinite(v)) {
            throw NonFinite("centrality values must be finite");
        }
    }

    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&values](int x, int y) {
        if (values[x] != values[y]) {
            return values[x] > values[y];
        }
        return x < y;
    });

    Report report;
    report.measure = std::move(measure);
    report.ranking.reserve(n);

    // Chain adjacent near-equal values into maximal tie groups, then list
    // each group by node index.
    int start = 0;
    while (start < n) {
        int stop = start + 1;
        while (stop < n &&
               values[order[stop - 1]] - values[order[stop]] <= kTieTolerance) {
            ++stop;
        }
        std::vector<int> group(order.begin() + start, order.begin() + stop);
        std::sort(group.begin(), group.end());
        report.ranking.insert(report.ranking.end(), group.begin(), group.end());
        report.tie_groups.push_back(std::move(group));
        start = stop;
    }
    report.values = std::move(values);
    return report;
}

} // namespace centrality
