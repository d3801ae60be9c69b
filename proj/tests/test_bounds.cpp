#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "cqx/bounds.hpp"
#include "cqx/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cqx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double h2(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Grid minimizer of delta*log2(1/c) - H2(delta) + 1 - R over [0, 1];
// ties break toward smaller delta.
struct GridMin {
    double value;
    double argmin;
};

GridMin cutoff_grid_oracle(double c, double rate, std::size_t points = 1000000) {
    const double slope = std::log2(1.0 / c);
    double best = kInf;
    double best_delta = 0.0;
    for (std::size_t i = 0; i <= points; ++i) {
        const double delta = static_cast<double>(i) / static_cast<double>(points);
        const double v = delta * slope - h2(delta) + 1.0 - rate;
        if (v < best) {
            best = v;
            best_delta = delta;
        }
    }
    return {best, best_delta};
}

}  // namespace

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.2) == doctest::Approx(0.7219281).epsilon(1e-7));
    CHECK_THROWS_AS(binary_entropy(-0.1), OutOfRange);
    CHECK_THROWS_AS(binary_entropy(1.1), OutOfRange);
}

TEST_CASE("inverse binary entropy hits 1e-12 residuals") {
    for (int i = 0; i <= 200; ++i) {
        const double y = i / 200.0;
        const double x = inverse_binary_entropy(y);
        CHECK(x >= 0.0);
        CHECK(x <= 0.5);
        CHECK(std::abs(binary_entropy(x) - y) <= 1e-12);
    }
}

TEST_CASE("gv distance") {
    CHECK(gv_distance(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gv_distance(1.0) == doctest::Approx(0.0));
    CHECK(gv_distance(0.5) == doctest::Approx(0.1100279).epsilon(1e-6));
    CHECK(std::abs(binary_entropy(gv_distance(0.3)) - 0.7) <= 1e-12);
}

TEST_CASE("effective distance") {
    CHECK(effective_distance(1.0) == doctest::Approx(0.5));
    CHECK(effective_distance(0.0) == doctest::Approx(0.0));
    CHECK(effective_distance(0.25) == doctest::Approx(0.2).epsilon(1e-15));
    // argmin oracle
    const auto grid = cutoff_grid_oracle(0.25, 0.3);
    CHECK(std::abs(grid.argmin - effective_distance(0.25)) < 1e-5);
}

TEST_CASE("expurgated rate closed forms agree") {
    CHECK(expurgated_rate(0.25) == doctest::Approx(0.2780719).epsilon(1e-6));
    CHECK(expurgated_rate(0.25) == doctest::Approx(1.0 - h2(0.2)).epsilon(1e-14));
    CHECK(expurgated_rate(0.6) == doctest::Approx(1.0 - h2(0.375)).epsilon(1e-14));
    CHECK(expurgated_rate(1.0 - 1e-9) < 1e-8);  // R_ex -> 0 as c -> 1
    for (int i = 1; i <= 200; ++i) {
        const double c = i / 201.0;
        const double delta_eff = c / (1.0 + c);
        const double via_slope = binary_mu_tilde(c, 1.0) + delta_eff * std::log2(c);
        CHECK(std::abs(expurgated_rate(c) - via_slope) <= 1e-12);
    }
    CHECK_THROWS_AS(expurgated_rate(0.0), Degenerate);
    CHECK_THROWS_AS(expurgated_rate(1.0), Degenerate);
}

TEST_CASE("positivity threshold") {
    CHECK(positivity_threshold(0.0) == doctest::Approx(1.0));
    CHECK(positivity_threshold(1.0) == doctest::Approx(0.0));
    CHECK(positivity_threshold(0.5) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("positivity threshold equals the cutoff-rate zero crossing") {
    // R0(c) = rate solved for c by bisection.
    for (double rate : {0.1, 0.35, 0.62, 0.9}) {
        double lo = 0.0;
        double hi = 1.0;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (1.0 - std::log2(1.0 + mid) > rate) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        CHECK(std::abs(positivity_threshold(rate) - 0.5 * (lo + hi)) < 1e-10);
    }
}

TEST_CASE("binary cutoff bound closed form against the grid oracle") {
    CHECK(binary_cutoff_bound({0.5, 1.0 - std::log2(1.5)}).value == doctest::Approx(0.0));
    CHECK(binary_cutoff_bound({0.5, 0.2}).value == doctest::Approx(0.2150375).epsilon(1e-6));
    CHECK(binary_cutoff_bound({0.25, 0.0}).value == doctest::Approx(0.6780719).epsilon(1e-6));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0.02, 0.98);
    for (int trial = 0; trial < 6; ++trial) {
        const double c = unif(rng);
        const double rate = unif(rng);
        const auto grid = cutoff_grid_oracle(c, rate, 200000);
        CHECK(std::abs(std::max(0.0, grid.value) - binary_cutoff_bound({c, rate}).value) < 1e-6);
        CHECK(std::abs(grid.argmin - effective_distance(c)) < 2e-5);
    }
    CHECK_THROWS_AS(binary_cutoff_bound({0.0, 0.5}), Degenerate);
    CHECK_THROWS_AS(binary_cutoff_bound({0.5, 1.5}), OutOfRange);
}

TEST_CASE("gv expurgated bound piecewise form") {
    const double c = 0.25;
    const double r_ex = expurgated_rate(c);

    // continuity at the joint
    const double below = gv_expurgated_bound({c, r_ex - 1e-12}).value;
    const double above = gv_expurgated_bound({c, r_ex + 1e-12}).value;
    CHECK(std::abs(below - above) < 1e-8);

    CHECK(gv_expurgated_bound({c, 0.1}).value ==
          doctest::Approx(2.0 * gv_distance(0.1)).epsilon(1e-12));
    CHECK(gv_expurgated_bound({c, 0.5}).value ==
          doctest::Approx(1.0 - std::log2(1.25) - 0.5).epsilon(1e-12));
}

TEST_CASE("gv form dominates the cutoff bound with equality above the expurgated rate") {
    for (double c : {0.1, 0.25, 0.5, 0.8}) {
        const double r_ex = expurgated_rate(c);
        for (int i = 1; i < 40; ++i) {
            const double rate = i / 40.0;
            const double t2 = gv_expurgated_bound({c, rate}).value;
            const double t1 = binary_cutoff_bound({c, rate}).value;
            CHECK(t2 >= t1 - 1e-12);
            if (rate >= r_ex) CHECK(t2 == doctest::Approx(t1).epsilon(1e-12));
        }
    }
}

TEST_CASE("implicit expurgated solve") {
    const double c = 0.25;
    const double r_ex = expurgated_rate(c);

    // boundary: s~ = 1 at the expurgated rate
    CHECK(solve_expurgated_s(c, r_ex) == doctest::Approx(1.0).epsilon(1e-9));
    const auto boundary = binary_expurgated_exponent({c, r_ex});
    CHECK(boundary.value == doctest::Approx(binary_cutoff_bound({c, r_ex}).value).epsilon(1e-9));

    // residual of the implicit equation
    for (double rate : {0.02, 0.1, 0.2, r_ex}) {
        const double s = solve_expurgated_s(c, rate);
        CHECK(s >= 1.0);
        CHECK(std::abs(binary_mu_tilde_slope(c, s) - rate) <= 1e-10);
    }
}

TEST_CASE("binary expurgated exponent against a dense s-grid oracle") {
    const double c = 0.25;
    for (double rate : {0.1, 0.15}) {
        double best = 0.0;
        for (int i = 0; i <= 4000000; ++i) {
            const double s = 1.0 + i * 1e-5;  // s in [1, 41]
            best = std::max(best, binary_mu_tilde(c, s) - s * rate);
        }
        CHECK(binary_expurgated_exponent({c, rate}).value == doctest::Approx(best).epsilon(1e-8));
    }
}

TEST_CASE("binary expurgated exponent degenerate channels") {
    CHECK(binary_expurgated_exponent({0.0, 0.3}).value == kInf);
    CHECK(binary_expurgated_exponent({1.0, 0.3}).value == 0.0);
    CHECK_THROWS_AS(binary_expurgated_exponent({0.25, 0.0}), OutOfRange);
    CHECK_THROWS_AS(binary_expurgated_exponent({0.25, 1.0}), OutOfRange);
}

TEST_CASE("implicit form equals the GV form below the expurgated rate") {
    for (int ci = 1; ci <= 20; ++ci) {
        const double c = ci / 21.0;
        const double r_ex = expurgated_rate(c);
        for (int ri = 1; ri <= 9; ++ri) {
            const double rate = r_ex * ri / 10.0;
            const double via_implicit = binary_expurgated_exponent({c, rate}).value;
            const double via_gv = gv_expurgated_bound({c, rate}).value;
            CHECK(std::abs(via_implicit - via_gv) < 1e-6);
        }
    }
}

TEST_CASE("quantum cutoff rate") {
    CHECK(quantum_cutoff_rate(pure_state_channel(0.0)) == doctest::Approx(1.0).epsilon(1e-9));
    std::mt19937_64 rng(37);
    auto s = test::random_density(2, rng);
    std::vector<DensityMatrix> pair{DensityMatrix(s), DensityMatrix(s)};
    CHECK(quantum_cutoff_rate(CQChannel(pair)) == doctest::Approx(0.0).epsilon(1e-9));

    // optimizer vs closed form on random binary channels
    for (int trial = 0; trial < 10; ++trial) {
        const auto ch = test::random_channel(2, trial % 2 ? 2 : 3, rng);
        const double c = channel_param_c(ch);
        CHECK(std::abs(quantum_cutoff_rate(ch) - (1.0 - std::log2(1.0 + c))) < 1e-9);
    }
}

TEST_CASE("cutoff exponent") {
    const auto ch = pure_state_channel(0.5);  // c = 0.25
    const double r0 = quantum_cutoff_rate(ch);
    CHECK(cutoff_exponent(ch, r0).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cutoff_exponent(ch, 0.3).value ==
          doctest::Approx(1.0 - std::log2(1.25) - 0.3).epsilon(1e-9));
    CHECK(cutoff_exponent(ch, 0.3).value == doctest::Approx(0.3780719).epsilon(1e-6));
    CHECK_THROWS_AS(cutoff_exponent(ch, -0.1), OutOfRange);

    // identical states: zero bound at every rate
    std::mt19937_64 rng(151);
    auto s = test::random_density(2, rng);
    std::vector<DensityMatrix> pair{DensityMatrix(s), DensityMatrix(s)};
    const CQChannel same(pair);
    for (double rate : {0.05, 0.4, 0.9}) CHECK(cutoff_exponent(same, rate).value == 0.0);
}

TEST_CASE("random coding exponent") {
    const auto orthogonal = pure_state_channel(0.0);
    CHECK(random_coding_exponent(orthogonal, 0.5).value == doctest::Approx(0.5).epsilon(1e-7));

    // grid oracle over (s, p) for the orthogonal channel
    double best = 0.0;
    for (int si = 0; si <= 100; ++si) {
        const double s = si / 100.0;
        for (int pi = 0; pi <= 100; ++pi) {
            const double p = pi / 100.0;
            // projectors: mixture spectrum is (p, 1-p)
            const double tr =
                std::pow(p, 1.0 + s) + std::pow(1.0 - p, 1.0 + s);
            best = std::max(best, -std::log2(tr) - s * 0.5);
        }
    }
    CHECK(random_coding_exponent(orthogonal, 0.5).value == doctest::Approx(best).epsilon(1e-4));

    std::mt19937_64 rng(41);
    auto s = test::random_density(2, rng);
    std::vector<DensityMatrix> pair{DensityMatrix(s), DensityMatrix(s)};
    const CQChannel same(pair);
    CHECK(random_coding_exponent(same, 0.2).value == 0.0);

    const auto ch = pure_state_channel(0.5);
    const double cap = holevo_capacity(ch).value;
    CHECK(random_coding_exponent(ch, cap).value == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(random_coding_exponent(ch, 1.0).value == 0.0);
}

TEST_CASE("random coding zero crossing sits at capacity") {
    for (double eps : {0.3, 0.5}) {
        const auto ch = pure_state_channel(eps);
        const double cap = holevo_capacity(ch).value;
        double lo = 0.0;
        double hi = 1.0;
        for (int iter = 0; iter < 30; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (random_coding_exponent(ch, mid).value > 1e-9) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        CHECK(std::abs(0.5 * (lo + hi) - cap) < 2e-3);
    }
}

TEST_CASE("expurgated exponent coincides with cutoff above the expurgated rate") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 4; ++trial) {
        const auto ch = test::random_channel(2, 2, rng);
        const double c = channel_param_c(ch);
        const double r_ex = expurgated_rate(c);
        const double r0 = quantum_cutoff_rate(ch);
        for (double rate : {r_ex + 0.3 * (r0 - r_ex), r_ex + 0.8 * (r0 - r_ex)}) {
            const double ex = expurgated_exponent(ch, rate).value;
            const double cut = cutoff_exponent(ch, rate).value;
            CHECK(ex == doctest::Approx(cut).epsilon(1e-7));
        }
    }
}

TEST_CASE("expurgated exponent general optimizer vs binary closed form") {
    const auto ch = pure_state_channel(0.5);  // c = 0.25
    const double c = channel_param_c(ch);
    for (double rate : {0.1, 0.15, 0.22}) {
        const double general = expurgated_exponent(ch, rate).value;
        const double closed = binary_expurgated_exponent({c, rate}).value;
        CHECK(std::abs(general - closed) < 1e-6);
    }
    std::mt19937_64 rng(47);
    auto s = test::random_density(2, rng);
    std::vector<DensityMatrix> pair{DensityMatrix(s), DensityMatrix(s)};
    CHECK(expurgated_exponent(CQChannel(pair), 0.4).value == 0.0);
    CHECK_THROWS_AS(expurgated_exponent(ch, 0.0), OutOfRange);
}

TEST_CASE("bound curves are nonincreasing in rate") {
    const auto ch = pure_state_channel(0.4);
    const double c = channel_param_c(ch);
    double prev_cut = kInf;
    double prev_ex = kInf;
    double prev_rc = kInf;
    double prev_t2 = kInf;
    for (int i = 1; i <= 24; ++i) {
        const double rate = i / 25.0;
        const double cut = cutoff_exponent(ch, rate).value;
        const double ex = expurgated_exponent(ch, rate).value;
        const double rc = random_coding_exponent(ch, rate).value;
        const double t2 = gv_expurgated_bound({c, rate}).value;
        CHECK(cut <= prev_cut + 1e-10);
        CHECK(ex <= prev_ex + 1e-7);
        CHECK(rc <= prev_rc + 1e-6);
        CHECK(t2 <= prev_t2 + 1e-10);
        CHECK(ex >= cut - 1e-12);
        prev_cut = cut;
        prev_ex = ex;
        prev_rc = rc;
        prev_t2 = t2;
    }
}
