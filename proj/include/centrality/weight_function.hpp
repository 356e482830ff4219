#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace centrality {

/// A closed-walk weighting: a real function f with Taylor series
/// f(x) = sum_k a_k x^k, exposed both as a closed-form evaluator and as
/// the coefficient sequence a_k. Walks of length k are weighted by a_k.
///
/// Built-in kinds are entire functions or polynomials, so their
/// convergence radius is infinite. Custom series must declare a radius;
/// the engine refuses to evaluate them when the radius does not exceed
/// the spectral radius of the graph at hand.
class WeightFunction {
public:
    /// f(x) = e^x, a_k = 1/k!. Weighting behind subgraph centrality.
    static WeightFunction exp();

    /// f(x) = sinh(x); odd closed walks only.
    static WeightFunction sinh();

    /// f(x) = cosh(x); even closed walks only.
    static WeightFunction cosh();

    /// f(x) = x^k; counts closed walks of length exactly k.
    static WeightFunction monomial(int k);

    /// f(x) = 1 + x + x^2/2 + ... + x^k/k; closed walks of length at
    /// most k, a walk of length l weighted 1/l.
    static WeightFunction radius_poly(int k);

    /// f(x) = sum_l coefficients[l] * x^l with caller-chosen weights.
    static WeightFunction polynomial(std::vector<double> coefficients);

    /// Custom power series. Both the evaluator and the coefficient rule
    /// must be supplied, plus the series' convergence radius.
    static WeightFunction series(std::string name, std::function<double(double)> evaluator,
                                 std::function<double(std::size_t)> coefficient, double radius);

    double value(double x) const;
    double coefficient(std::size_t k) const;
    double convergence_radius() const { return radius_; }

    /// Degree for polynomial kinds (truncation at this order is exact);
    /// empty for the entire-function and custom kinds.
    std::optional<int> degree() const { return degree_; }

    /// True when every Taylor coefficient is known to be >= 0, which is
    /// what the complete-graph extremal bound requires.
    bool nonnegative_coefficients() const { return nonnegative_; }

    /// True when |a_k| <= 1/k! for all k (exp, sinh, cosh), so the
    /// exponential series tail majorizes this function's tail.
    bool tail_majorized_by_exp() const {
        return kind_ == Kind::Exp || kind_ == Kind::Sinh || kind_ == Kind::Cosh;
    }

    const std::string& name() const { return name_; }

private:
    enum class Kind { Exp, Sinh, Cosh, Monomial, Polynomial, Series };

    WeightFunction(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    int monomial_k_ = 0;
    std::vector<double> coefficients_;
    std::function<double(double)> evaluator_;
    std::function<double(std::size_t)> coefficient_rule_;
    double radius_ = 0.0;
    std::optional<int> degree_;
    bool nonnegative_ = false;
};

} // namespace centrality
