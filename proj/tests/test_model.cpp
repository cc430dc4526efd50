#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "laborshare/model.hpp"

using namespace laborshare;

TEST_CASE("cumulative output share boundaries and frozen value") {
    CHECK(cumulative_output_share(1.0, 0.786) == 1.0);
    CHECK(cumulative_output_share(0.0, 0.786) == 0.0);
    // high-precision scalar oracle: 0.424^0.786
    CHECK(cumulative_output_share(0.424, 0.786) ==
          doctest::Approx(0.50945938063720412).epsilon(1e-12));
}

TEST_CASE("cumulative output share rejects bad arguments") {
    CHECK_THROWS_AS(cumulative_output_share(-0.1, 0.5), DomainError);
    CHECK_THROWS_AS(cumulative_output_share(1.1, 0.5), DomainError);
    CHECK_THROWS_AS(cumulative_output_share(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(cumulative_output_share(0.5, -1.0), DomainError);
}

TEST_CASE("cumulative output share is monotone in r") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> n_draw(0.1, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double n = n_draw(gen);
        double prev = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double cur = cumulative_output_share(i / 100.0, n);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("cumulative output share is concave for n < 1") {
    for (const double n : {0.3, 0.5, 0.786, 0.95}) {
        const double h = 0.01;
        for (int i = 1; i < 99; ++i) {
            const double r = i * h;
            const double second_diff = cumulative_output_share(r + h, n) -
                                       2.0 * cumulative_output_share(r, n) +
                                       cumulative_output_share(r - h, n);
            CHECK(second_diff <= 1e-9);
        }
    }
}

TEST_CASE("attenuated ratio") {
    SUBCASE("equals r0 at the baseline age") {
        const ModelParams p{0.786, 0.424, 0.0175, 30.0};
        CHECK(attenuated_ratio(p, 30.0) == 0.424);
    }
    SUBCASE("k = 0 keeps the ratio constant") {
        const ModelParams p{0.786, 0.424, 0.0, 30.0};
        CHECK(attenuated_ratio(p, 45.0) == 0.424);
    }
    SUBCASE("frozen oracle value at mu = 38") {
        const ModelParams p{0.786, 0.424, 0.0175, 30.0};
        // 0.424 / 0.86
        CHECK(attenuated_ratio(p, 38.0) ==
              doctest::Approx(0.49302325581395349).epsilon(1e-12));
    }
    SUBCASE("singular when the denominator reaches zero") {
        const ModelParams p{0.786, 0.424, 0.1, 30.0};
        CHECK_THROWS_AS(attenuated_ratio(p, 40.0), SingularityError);
        CHECK_THROWS_AS(attenuated_ratio(p, 45.0), SingularityError);
    }
    SUBCASE("invalid static parameters") {
        CHECK_THROWS_AS(attenuated_ratio({0.0, 0.4, 0.0, 30.0}, 30.0), DomainError);
        CHECK_THROWS_AS(attenuated_ratio({0.5, 1.2, 0.0, 30.0}, 30.0), DomainError);
        CHECK_THROWS_AS(attenuated_ratio({0.5, 0.4, -0.01, 30.0}, 30.0), DomainError);
    }
}

TEST_CASE("equilibrium labor share") {
    SUBCASE("frozen oracle value with the US-style parameters") {
        const ModelParams p{0.786, 0.424, 0.0175, 30.2};
        // 1 - 0.424^0.786
        CHECK(equilibrium_labor_share(p, 30.2) ==
              doctest::Approx(0.49054061936279588).epsilon(1e-12));
    }
    SUBCASE("full automation boundary") {
        const ModelParams p{1.0, 1.0, 0.0, 30.0};
        CHECK(equilibrium_labor_share(p, 50.0) == 0.0);
    }
    SUBCASE("square-root case") {
        const ModelParams p{0.5, 0.25, 0.0, 30.0};
        CHECK(equilibrium_labor_share(p, 41.0) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("range error when the ratio exceeds 1") {
        const ModelParams p{1.0, 0.9, 0.05, 30.0};
        CHECK_THROWS_AS(equilibrium_labor_share(p, 35.0), RangeError);
    }
    SUBCASE("singularity propagates") {
        const ModelParams p{1.0, 0.9, 0.1, 30.0};
        CHECK_THROWS_AS(equilibrium_labor_share(p, 45.0), SingularityError);
    }
}

TEST_CASE("equilibrium labor share is strictly decreasing in age when k > 0") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> n_draw(0.3, 2.0);
    std::uniform_real_distribution<double> r0_draw(0.1, 0.8);
    std::uniform_real_distribution<double> k_draw(0.005, 0.05);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p{n_draw(gen), r0_draw(gen), k_draw(gen), 30.0};
        // stay inside the valid region: ratio <= 1 needs mu <= mu0 + (1-r0)/k
        const double mu_hi = 30.0 + 0.8 * (1.0 - p.r0) / p.k;
        double prev = equilibrium_labor_share(p, 30.0);
        for (int i = 1; i <= 20; ++i) {
            const double mu = 30.0 + i * (mu_hi - 30.0) / 20.0;
            const double cur = equilibrium_labor_share(p, mu);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("k = 0 reduces the model to a constant") {
    std::mt19937 gen(13);
    std::uniform_real_distribution<double> n_draw(0.3, 2.0);
    std::uniform_real_distribution<double> r0_draw(0.1, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
        const ModelParams p{n_draw(gen), r0_draw(gen), 0.0, 30.0};
        const double expected = 1.0 - std::pow(p.r0, p.n);
        for (const double mu : {15.0, 30.0, 42.5, 59.0})
            CHECK(equilibrium_labor_share(p, mu) == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("labor share vanishes as the attenuated ratio approaches 1") {
    const double n = 0.786;
    double prev = 1.0;
    for (const double eps : {1e-2, 1e-4, 1e-6, 1e-9}) {
        const ModelParams p{n, 1.0 - eps, 0.0, 30.0};
        const double share = equilibrium_labor_share(p, 30.0);
        CHECK(share < prev);
        prev = share;
    }
    CHECK(prev < 1e-8);
}

TEST_CASE("mixture labor share reproduces the introduction example") {
    const std::vector<ProductLine> even{{4.0, 0.2, 0.5}, {8.0, 0.4, 0.5}};
    CHECK(mixture_labor_share(even) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // the shifted mix prints as 0.31; exactly 11/35
    const std::vector<ProductLine> shifted{{4.0, 0.2, 0.6}, {8.0, 0.4, 0.4}};
    CHECK(mixture_labor_share(shifted) == doctest::Approx(11.0 / 35.0).epsilon(1e-12));
}

TEST_CASE("mixture labor share of a single product is its unit share") {
    for (const double price : {0.5, 4.0, 123.0}) {
        const std::vector<ProductLine> one{{price, 0.37, 1.0}};
        CHECK(mixture_labor_share(one) == doctest::Approx(0.37).epsilon(1e-15));
    }
}

TEST_CASE("mixture labor share stays between the unit shares") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> price(0.1, 50.0);
    std::uniform_real_distribution<double> share(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ProductLine> lines(3);
        double raw[3] = {share(gen) + 0.01, share(gen) + 0.01, share(gen) + 0.01};
        const double total = raw[0] + raw[1] + raw[2];
        double lo = 1.0;
        double hi = 0.0;
        for (int i = 0; i < 3; ++i) {
            lines[i] = {price(gen), share(gen), raw[i] / total};
            lo = std::min(lo, lines[i].unit_labor_share);
            hi = std::max(hi, lines[i].unit_labor_share);
        }
        const double mixed = mixture_labor_share(lines);
        CHECK(mixed >= lo - 1e-12);
        CHECK(mixed <= hi + 1e-12);
    }
}

TEST_CASE("mixture labor share rejects bad input") {
    CHECK_THROWS_AS(mixture_labor_share(std::vector<ProductLine>{}), DomainError);
    const std::vector<ProductLine> bad_weights{{4.0, 0.2, 0.5}, {8.0, 0.4, 0.4}};
    CHECK_THROWS_AS(mixture_labor_share(bad_weights), DomainError);
    const std::vector<ProductLine> bad_price{{-4.0, 0.2, 1.0}};
    CHECK_THROWS_AS(mixture_labor_share(bad_price), DomainError);
}
