#include "centrality/walk_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "centrality/errors.hpp"

namespace centrality {

namespace {

WalkCount checked_add(WalkCount a, WalkCount b) {
    WalkCount result;
    if (__builtin_add_overflow(a, b, &result)) {
        throw IntegerOverflow("walk count exceeds 128 bits");
    }
    return result;
}

WalkCount checked_mul(WalkCount a, WalkCount b) {
    WalkCount result;
    if (__builtin_mul_overflow(a, b, &result)) {
        throw IntegerOverflow("walk count exceeds 128 bits");
    }
    return result;
}

// Tail of the exponential series at x past order K, computed from the
// closed form e^x minus its partial sum. Majorizes the tails of exp,
// sinh and cosh since |a_k| <= 1/k! for all three.
double exp_tail(double x, int order) {
    const double full = std::exp(x);
    if (!std::isfinite(full)) {
        return full;
    }
    double partial = 0.0;
    double term = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            term *= x / k;
        }
        partial += term;
    }
    return std::max(0.0, full - partial);
}

} // namespace

std::string walk_count_string(WalkCount v) {
    if (v == 0) {
        return "0";
    }
    const bool negative = v < 0;
    unsigned __int128 magnitude =
        negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (magnitude > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

WalkTable::WalkTable(const SymmetricMatrix& a, int max_order) : n_(a.size()), max_order_(max_order) {
    if (max_order < 0) {
        throw InvalidParam("table order must be non-negative");
    }
    if (!a.is_symmetric()) {
        throw NotSymmetric("walk counting needs a symmetric adjacency matrix");
    }

    std::vector<WalkCount> base(static_cast<std::size_t>(n_) * n_);
    double max_row_sum = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n_; ++j) {
            const double v = a(i, j);
            if (!(v >= 0.0) || v != std::floor(v) || v > 1e18) {
                throw InvalidParam("adjacency entries must be non-negative integers");
            }
            base[static_cast<std::size_t>(i) * n_ + j] = static_cast<WalkCount>(v);
            row_sum += v;
        }
        max_row_sum = std::max(max_row_sum, row_sum);
    }
    radius_bound_ = max_row_sum;

    powers_.reserve(static_cast<std::size_t>(max_order) + 1);
    std::vector<WalkCount> identity(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
        identity[static_cast<std::size_t>(i) * n_ + i] = 1;
    }
    powers_.push_back(std::move(identity));
    for (int k = 1; k <= max_order; ++k) {
        const std::vector<WalkCount>& prev = powers_.back();
        std::vector<WalkCount> next(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i) {
            for (int l = 0; l < n_; ++l) {
                const WalkCount left = prev[static_cast<std::size_t>(i) * n_ + l];
                if (left == 0) {
                    continue;
                }
                for (int j = 0; j < n_; ++j) {
                    const WalkCount right = base[static_cast<std::size_t>(l) * n_ + j];
                    if (right == 0) {
                        continue;
                    }
                    WalkCount& cell = next[static_cast<std::size_t>(i) * n_ + j];
                    cell = checked_add(cell, checked_mul(left, right));
                }
            }
        }
        powers_.push_back(std::move(next));
    }
}

const WalkCount* WalkTable::power(int k) const {
    if (k < 0 || k > max_order_) {
        throw OrderExceeded("walk order " + std::to_string(k) + " exceeds table order " +
                            std::to_string(max_order_));
    }
    return powers_[static_cast<std::size_t>(k)].data();
}

WalkCount WalkTable::walk_count(int k, int i, int j) const {
    const WalkCount* p = power(k);
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw IndexOutOfRange("vertex index out of range");
    }
    return p[static_cast<std::size_t>(i) * n_ + j];
}

WalkCount WalkTable::local_moment(int k, int i) const {
    return walk_count(k, i, i);
}

WalkCount WalkTable::spectral_moment(int k) const {
    const WalkCount* p = power(k);
    WalkCount trace = 0;
    for (int i = 0; i < n_; ++i) {
        trace = checked_add(trace, p[static_cast<std::size_t>(i) * n_ + i]);
    }
    return trace;
}

WalkCount WalkTable::total_walks(int k) const {
    const WalkCount* p = power(k);
    WalkCount sum = 0;
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(n_) * n_; ++idx) {
        sum = checked_add(sum, p[idx]);
    }
    return sum;
}

TruncatedCentrality truncated_centrality(const WalkTable& table, const WeightFunction& f, int node,
                                         int order) {
    if (node < 0 || node >= table.size()) {
        throw IndexOutOfRange("vertex index out of range");
    }
    if (order > table.max_order()) {
        throw OrderExceeded("truncation order " + std::to_string(order) +
                            " exceeds table order " + std::to_string(table.max_order()));
    }

    TruncatedCentrality result;
    for (int k = 0; k <= order; ++k) {
        const double a_k = f.coefficient(static_cast<std::size_t>(k));
        if (a_k == 0.0) {
            continue;
        }
        result.value += a_k * static_cast<double>(table.local_moment(k, node));
    }

    const double lambda = table.spectral_radius_bound();
    if (f.degree().has_value()) {
        double tail = 0.0;
        for (int k = order + 1; k <= *f.degree(); ++k) {
            tail += std::abs(f.coefficient(static_cast<std::size_t>(k))) *
                    std::pow(lambda, static_cast<double>(k));
        }
        result.tail_bound = tail;
    } else if (f.tail_majorized_by_exp()) {
        result.tail_bound = exp_tail(lambda, order);
    }
    return result;
}

int order_for_tolerance(const WeightFunction& f, double lambda_bound, double tolerance) {
    if (f.degree().has_value()) {
        return *f.degree();
    }
    if (f.tail_majorized_by_exp()) {
        for (int order = 0; order < kMaxSeriesOrder; ++order) {
            if (exp_tail(lambda_bound, order) <= tolerance) {
                return order;
            }
        }
    }
    return kMaxSeriesOrder;
}

} // namespace centrality
