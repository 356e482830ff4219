#include "centrality/weight_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "centrality/errors.hpp"

namespace centrality {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double inverse_factorial(std::size_t k) {
    double factorial = 1.0;
    for (std::size_t i = 2; i <= k; ++i) {
        factorial *= static_cast<double>(i);
        if (!std::isfinite(factorial)) {
            return 0.0; // 1/k! underflows to 0 long before k! stops growing
        }
    }
    return 1.0 / factorial;
}

double integer_power(double x, int k) {
    double result = 1.0;
    for (int i = 0; i < k; ++i) {
        result *= x;
    }
    return result;
}

double horner(const std::vector<double>& coefficients, double x) {
    double result = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        result = result * x + *it;
    }
    return result;
}

} // namespace

WeightFunction WeightFunction::exp() {
    WeightFunction f(Kind::Exp, "exp");
    f.radius_ = kInfinity;
    f.nonnegative_ = true;
    return f;
}

WeightFunction WeightFunction::sinh() {
    WeightFunction f(Kind::Sinh, "sinh");
    f.radius_ = kInfinity;
    f.nonnegative_ = true;
    return f;
}

WeightFunction WeightFunction::cosh() {
    WeightFunction f(Kind::Cosh, "cosh");
    f.radius_ = kInfinity;
    f.nonnegative_ = true;
    return f;
}

WeightFunction WeightFunction::monomial(int k) {
    if (k < 0) {
        throw InvalidParam("monomial weight needs k >= 0, got " + std::to_string(k));
    }
    WeightFunction f(Kind::Monomial, "monomial:" + std::to_string(k));
    f.monomial_k_ = k;
    f.radius_ = kInfinity;
    f.degree_ = k;
    f.nonnegative_ = true;
    return f;
}

WeightFunction WeightFunction::radius_poly(int k) {
    if (k < 0) {
        throw InvalidParam("radius weight needs k >= 0, got " + std::to_string(k));
    }
    std::vector<double> coefficients(static_cast<std::size_t>(k) + 1);
    coefficients[0] = 1.0;
    for (int l = 1; l <= k; ++l) {
        coefficients[l] = 1.0 / l;
    }
    WeightFunction f = polynomial(std::move(coefficients));
    f.name_ = "radius:" + std::to_string(k);
    return f;
}

WeightFunction WeightFunction::polynomial(std::vector<double> coefficients) {
    for (const double c : coefficients) {
        if (!std::isfinite(c)) {
            throw InvalidParam("polynomial coefficients must be finite");
        }
    }
    WeightFunction f(Kind::Polynomial, "polynomial");
    f.nonnegative_ = std::all_of(coefficients.begin(), coefficients.end(),
                                 [](double c) { return c >= 0.0; });
    f.degree_ = coefficients.empty() ? 0 : static_cast<int>(coefficients.size()) - 1;
    f.coefficients_ = std::move(coefficients);
    f.radius_ = kInfinity;
    return f;
}

WeightFunction WeightFunction::series(std::string name, std::function<double(double)> evaluator,
                                      std::function<double(std::size_t)> coefficient,
                                      double radius) {
    if (!evaluator || !coefficient) {
        throw InvalidParam("series weight needs both an evaluator and a coefficient rule");
    }
    if (!(radius > 0.0)) {
        throw InvalidParam("series weight needs a positive convergence radius");
    }
    WeightFunction f(Kind::Series, std::move(name));
    f.evaluator_ = std::move(evaluator);
    f.coefficient_rule_ = std::move(coefficient);
    f.radius_ = radius;
    return f;
}

double WeightFunction::value(double x) const {
    switch (kind_) {
    case Kind::Exp:
        return std::exp(x);
    case Kind::Sinh:
        return std::sinh(x);
    case Kind::Cosh:
        return std::cosh(x);
    case Kind::Monomial:
        return integer_power(x, monomial_k_);
    case Kind::Polynomial:
        return horner(coefficients_, x);
    case Kind::Series:
        return evaluator_(x);
    }
    return 0.0;
}

double WeightFunction::coefficient(std::size_t k) const {
    switch (kind_) {
    case Kind::Exp:
        return inverse_factorial(k);
    case Kind::Sinh:
        return k % 2 == 1 ? inverse_factorial(k) : 0.0;
    case Kind::Cosh:
        return k % 2 == 0 ? inverse_factorial(k) : 0.0;
    case Kind::Monomial:
        return k == static_cast<std::size_t>(monomial_k_) ? 1.0 : 0.0;
    case Kind::Polynomial:
        return k < coefficients_.size() ? coefficients_[k] : 0.0;
    case Kind::Series:
        return coefficient_rule_(k);
    }
    return 0.0;
}

} // namespace centrality
