#include <doctest.h>

#include <cmath>
#include <limits>

#include "centrality/errors.hpp"
#include "centrality/weight_function.hpp"

using namespace centrality;

TEST_CASE("exponential weight") {
    const WeightFunction f = WeightFunction::exp();
    CHECK(f.coefficient(0) == 1.0);
    CHECK(f.coefficient(1) == 1.0);
    CHECK(f.coefficient(3) == 1.0 / 6.0);
    CHECK(f.coefficient(10) == doctest::Approx(1.0 / 3628800.0).epsilon(1e-15));
    CHECK(f.value(1.0) == std::exp(1.0));
    CHECK(f.convergence_radius() == std::numeric_limits<double>::infinity());
    CHECK(!f.degree().has_value());
    CHECK(f.nonnegative_coefficients());
    CHECK(f.tail_majorized_by_exp());
}

TEST_CASE("sinh and cosh keep one parity each") {
    const WeightFunction odd = WeightFunction::sinh();
    const WeightFunction even = WeightFunction::cosh();
    for (std::size_t k = 0; k < 12; ++k) {
        if (k % 2 == 1) {
            CHECK(odd.coefficient(k) == doctest::Approx(WeightFunction::exp().coefficient(k)));
            CHECK(even.coefficient(k) == 0.0);
        } else {
            CHECK(odd.coefficient(k) == 0.0);
            CHECK(even.coefficient(k) == doctest::Approx(WeightFunction::exp().coefficient(k)));
        }
    }
    CHECK(odd.value(0.7) == std::sinh(0.7));
    CHECK(even.value(0.7) == std::cosh(0.7));
}

TEST_CASE("monomial weight") {
    const WeightFunction f = WeightFunction::monomial(3);
    CHECK(f.coefficient(3) == 1.0);
    CHECK(f.coefficient(2) == 0.0);
    CHECK(f.coefficient(4) == 0.0);
    CHECK(f.value(2.0) == 8.0);
    CHECK(f.value(-2.0) == -8.0);
    CHECK(f.degree() == 3);

    CHECK(WeightFunction::monomial(0).value(5.0) == 1.0);
    CHECK_THROWS_AS(WeightFunction::monomial(-1), InvalidParam);
}

TEST_CASE("radius polynomial uses 1/l weights with a_0 = 1") {
    const WeightFunction f = WeightFunction::radius_poly(3);
    CHECK(f.coefficient(0) == 1.0);
    CHECK(f.coefficient(1) == 1.0);
    CHECK(f.coefficient(2) == 0.5);
    CHECK(f.coefficient(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(f.coefficient(4) == 0.0);
    CHECK(f.degree() == 3);
    for (const double x : {-1.5, 0.0, 0.4, 2.0}) {
        CHECK(f.value(x) ==
              doctest::Approx(1.0 + x + x * x / 2.0 + x * x * x / 3.0).epsilon(1e-14));
    }

    const WeightFunction constant = WeightFunction::radius_poly(0);
    CHECK(constant.value(3.0) == 1.0);
    CHECK(constant.degree() == 0);
    CHECK_THROWS_AS(WeightFunction::radius_poly(-2), InvalidParam);
}

TEST_CASE("custom polynomial coefficients") {
    const WeightFunction f = WeightFunction::polynomial({2.0, 0.0, 1.5});
    CHECK(f.value(2.0) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(f.coefficient(2) == 1.5);
    CHECK(f.degree() == 2);
    CHECK(f.nonnegative_coefficients());
    CHECK(!f.tail_majorized_by_exp());

    CHECK(!WeightFunction::polynomial({1.0, -0.5}).nonnegative_coefficients());
    CHECK_THROWS_AS(WeightFunction::polynomial({1.0, std::nan("")}), InvalidParam);
}

TEST_CASE("custom series weight") {
    // Geometric series: f(x) = 1 / (1 - x/2), a_k = 2^-k, radius 2.
    const WeightFunction f = WeightFunction::series(
        "geometric", [](double x) { return 1.0 / (1.0 - x / 2.0); },
        [](std::size_t k) { return std::pow(0.5, static_cast<double>(k)); }, 2.0);
    CHECK(f.convergence_radius() == 2.0);
    CHECK(f.coefficient(3) == 0.125);

    double partial = 0.0;
    for (std::size_t k = 0; k <= 80; ++k) {
        partial += f.coefficient(k) * std::pow(1.0, static_cast<double>(k));
    }
    CHECK(partial == doctest::Approx(f.value(1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(WeightFunction::series("bad", nullptr, nullptr, 1.0), InvalidParam);
    CHECK_THROWS_AS(WeightFunction::series(
                        "bad", [](double) { return 0.0; },
                        [](std::size_t) { return 0.0; }, 0.0),
                    InvalidParam);
}

TEST_CASE("partial sums converge to the closed form within the exp tail") {
    const double x = 1.7;
    const int order = 40;
    for (const WeightFunction& f :
         {WeightFunction::exp(), WeightFunction::sinh(), WeightFunction::cosh()}) {
        double partial = 0.0;
        double power = 1.0;
        for (int k = 0; k <= order; ++k) {
            partial += f.coefficient(static_cast<std::size_t>(k)) * power;
            power *= x;
        }
        CHECK(std::abs(partial - f.value(x)) <= 1e-12);
    }
}
