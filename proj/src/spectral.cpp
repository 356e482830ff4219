#include "centrality/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "centrality/errors.hpp"

namespace centrality {

namespace {

constexpr double kOffDiagonalFactor = 1e-12; // relative to ||A||_F
constexpr int kMaxSweeps = 100;

double offdiagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i) * n + j];
            sum += 2.0 * v * v;
        }
    }
    return std::sqrt(sum);
}

// One two-sided rotation in the (p, q) plane: a <- J^T a J, r <- J^T r,
// with J the identity except J(p,p)=J(q,q)=c, J(p,q)=s, J(q,p)=-s.
void rotate(std::vector<double>& a, std::vector<double>& r, int n, int p, int q, double c,
            double s) {
    double* ap = &a[static_cast<std::size_t>(p) * n];
    double* aq = &a[static_cast<std::size_t>(q) * n];
    for (int k = 0; k < n; ++k) {
        const double x = ap[k];
        const double y = aq[k];
        ap[k] = c * x - s * y;
        aq[k] = s * x + c * y;
    }
    for (int k = 0; k < n; ++k) {
        const double x = a[static_cast<std::size_t>(k) * n + p];
        const double y = a[static_cast<std::size_t>(k) * n + q];
        a[static_cast<std::size_t>(k) * n + p] = c * x - s * y;
        a[static_cast<std::size_t>(k) * n + q] = s * x + c * y;
    }
    // The rotation angle is chosen to annihilate a(p,q).
    ap[q] = 0.0;
    aq[p] = 0.0;

    double* rp = &r[static_cast<std::size_t>(p) * n];
    double* rq = &r[static_cast<std::size_t>(q) * n];
    for (int k = 0; k < n; ++k) {
        const double x = rp[k];
        const double y = rq[k];
        rp[k] = c * x - s * y;
        rq[k] = s * x + c * y;
    }
}

} // namespace

SpectralDecomposition eigendecompose(const SymmetricMatrix& input) {
    const int n = input.size();
    if (!input.is_symmetric()) {
        throw NotSymmetric("matrix is not symmetric");
    }

    SpectralDecomposition result;
    result.n = n;
    if (n == 0) {
        return result;
    }

    std::vector<double> a(input.data(), input.data() + static_cast<std::size_t>(n) * n);
    // Rows of r accumulate U^T, so each rotation touches contiguous memory.
    std::vector<double> r(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        r[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    double frob = 0.0;
    for (const double v : a) {
        frob += v * v;
    }
    frob = std::sqrt(frob);

    const double threshold = kOffDiagonalFactor * frob;
    // Entries this small cannot lift the off-diagonal norm back above the
    // threshold even if every one of them is left untouched.
    const double skip = threshold / (2.0 * n);

    if (frob > 0.0) {
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (offdiagonal_norm(a, n) <= threshold) {
                converged = true;
                break;
            }
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = a[static_cast<std::size_t>(p) * n + q];
                    if (std::abs(apq) <= skip) {
                        continue;
                    }
                    const double app = a[static_cast<std::size_t>(p) * n + p];
                    const double aqq = a[static_cast<std::size_t>(q) * n + q];
                    const double tau = (aqq - app) / (2.0 * apq);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    rotate(a, r, n, p, q, c, s);
                }
            }
        }
        if (!converged && offdiagonal_norm(a, n) > threshold) {
            throw NoConvergence("Jacobi iteration did not converge within " +
                                std::to_string(kMaxSweeps) + " sweeps");
        }
    }

    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) {
        diag[i] = a[static_cast<std::size_t>(i) * n + i];
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&diag](int x, int y) { return diag[x] > diag[y]; });

    result.eigenvalues.resize(n);
    result.eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        result.eigenvalues[j] = diag[src];

        const double* row = &r[static_cast<std::size_t>(src) * n];
        int peak = 0;
        for (int i = 1; i < n; ++i) {
            if (std::abs(row[i]) > std::abs(row[peak])) {
                peak = i;
            }
        }
        const double sign = row[peak] < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) {
            result.eigenvectors[static_cast<std::size_t>(i) * n + j] = sign * row[i];
        }
    }
    return result;
}

double spectral_radius(const SpectralDecomposition& d) {
    assert(d.n >= 1);
    return d.eigenvalues.front();
}

} // namespace centrality
