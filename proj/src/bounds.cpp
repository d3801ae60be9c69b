#include "cqx/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cqx/errors.hpp"
#include "prior_search.hpp"

namespace cqx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;

void require_unit_interval(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw OutOfRange(std::string(who) + ": argument " + std::to_string(x) +
                         " outside [0, 1]");
    }
}

void require_open_unit_c(double c, const char* who) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw OutOfRange(std::string(who) + ": c = " + std::to_string(c) + " outside [0, 1]");
    }
    if (c == 0.0 || c == 1.0) {
        throw Degenerate(std::string(who) + ": degenerate channel parameter c = " +
                         std::to_string(c));
    }
}

}  // namespace

double binary_entropy(double x) {
    require_unit_interval(x, "binary_entropy");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double inverse_binary_entropy(double y) {
    require_unit_interval(y, "inverse_binary_entropy");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0;
    double hi = 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double h = binary_entropy(mid);
        if (std::abs(h - y) <= 1e-13 || hi - lo <= 1e-17) return mid;
        if (h < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double gv_distance(double rate) {
    require_unit_interval(rate, "gv_distance");
    return inverse_binary_entropy(1.0 - rate);
}

double effective_distance(double c) {
    require_unit_interval(c, "effective_distance");
    return c / (1.0 + c);
}

double expurgated_rate(double c) {
    require_open_unit_c(c, "expurgated_rate");
    const double delta_eff = c / (1.0 + c);
    const double via_entropy = 1.0 - binary_entropy(delta_eff);
    const double via_slope = binary_mu_tilde(c, 1.0) + delta_eff * std::log2(c);
    if (std::abs(via_entropy - via_slope) > 1e-12) {
        throw NumericError("expurgated_rate: closed forms disagree by " +
                           std::to_string(via_entropy - via_slope));
    }
    return via_entropy;
}

double positivity_threshold(double rate) {
    require_unit_interval(rate, "positivity_threshold");
    return std::min(1.0, std::max(0.0, std::exp2(1.0 - rate) - 1.0));
}

BoundPoint binary_cutoff_bound(const BinaryBoundParams& p) {
    require_open_unit_c(p.c, "binary_cutoff_bound");
    require_unit_interval(p.rate, "binary_cutoff_bound");
    const double value = 1.0 - std::log2(1.0 + p.c) - p.rate;
    return BoundPoint{p.rate, std::max(0.0, value)};
}

BoundPoint gv_expurgated_bound(const BinaryBoundParams& p) {
    require_open_unit_c(p.c, "gv_expurgated_bound");
    if (!(p.rate > 0.0 && p.rate < 1.0)) {
        throw OutOfRange("gv_expurgated_bound: rate must lie in (0, 1)");
    }
    const double r_ex = expurgated_rate(p.c);
    if (p.rate <= r_ex) {
        return BoundPoint{p.rate, std::log2(1.0 / p.c) * gv_distance(p.rate)};
    }
    return binary_cutoff_bound(p);
}

double binary_mu_tilde(double c, double s) {
    if (!(s > 0.0)) throw OutOfRange("binary_mu_tilde: s must be positive");
    require_unit_interval(c, "binary_mu_tilde");
    return std::max(0.0, -s * std::log2(0.5 * (1.0 + std::pow(c, 1.0 / s))));
}

double binary_mu_tilde_slope(double c, double s) {
    if (!(s > 0.0)) throw OutOfRange("binary_mu_tilde_slope: s must be positive");
    if (!(c > 0.0 && c < 1.0)) {
        throw Degenerate("binary_mu_tilde_slope: needs c in (0, 1)");
    }
    const double u = std::pow(c, 1.0 / s);
    return -std::log2(0.5 * (1.0 + u)) + u * std::log2(c) / (s * (1.0 + u));
}

double solve_expurgated_s(double c, double rate) {
    require_open_unit_c(c, "solve_expurgated_s");
    if (!(rate > 0.0)) throw OutOfRange("solve_expurgated_s: rate must be positive");
    double lo = 1.0;
    if (binary_mu_tilde_slope(c, lo) < rate) {
        throw OutOfRange("solve_expurgated_s: rate above the expurgated rate");
    }
    double hi = 2.0;
    while (binary_mu_tilde_slope(c, hi) > rate) {
        hi *= 2.0;
        if (hi > 1e18) throw NoConvergence("solve_expurgated_s: bracket expansion failed");
    }

    // d/ds slope(s) = -u ln(c)^2 / (ln 2 * s^3 * (1+u)^2) with u = c^{1/s};
    // slope is strictly decreasing, so Newton with a bisection safeguard.
    const double lnc = std::log(c);
    double s = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double g = binary_mu_tilde_slope(c, s) - rate;
        if (std::abs(g) <= 1e-12) return s;
        if (g > 0.0) {
            lo = s;
        } else {
            hi = s;
        }
        const double u = std::pow(c, 1.0 / s);
        const double gprime = -u * lnc * lnc / (kLn2 * s * s * s * (1.0 + u) * (1.0 + u));
        double next = s - g / gprime;
        if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (hi - lo <= 1e-15 * s) return 0.5 * (lo + hi);
        s = next;
    }
    throw NoConvergence("solve_expurgated_s: Newton iteration budget exhausted");
}

BoundPoint binary_expurgated_exponent(const BinaryBoundParams& p) {
    require_unit_interval(p.c, "binary_expurgated_exponent");
    if (p.c == 0.0) return BoundPoint{p.rate, kInf};
    if (p.c == 1.0) return BoundPoint{p.rate, 0.0};
    if (!(p.rate > 0.0 && p.rate < 1.0)) {
        throw OutOfRange("binary_expurgated_exponent: rate must lie in (0, 1)");
    }
    const double r_ex = expurgated_rate(p.c);
    if (p.rate > r_ex) return binary_cutoff_bound(p);
    const double s = solve_expurgated_s(p.c, p.rate);
    return BoundPoint{p.rate, binary_mu_tilde(p.c, s) - s * p.rate};
}

double quantum_cutoff_rate(const CQChannel& ch) {
    const std::vector<ComplexMatrix> roots = powered_states(ch, 0.5);
    const auto objective = [&](const std::vector<double>& probs) {
        return mu_from_powered(roots, probs, 1.0);
    };
    return detail::maximize_over_priors(ch.q(), objective).value;
}

namespace {

void require_rate_range(double rate, std::size_t q, const char* who) {
    const double top = std::log2(static_cast<double>(q));
    if (!(rate >= 0.0 && rate <= top)) {
        throw OutOfRange(std::string(who) + ": rate " + std::to_string(rate) +
                         " outside [0, log2 q]");
    }
}

}  // namespace

BoundPoint cutoff_exponent(const CQChannel& ch, double rate) {
    require_rate_range(rate, ch.q(), "cutoff_exponent");
    return BoundPoint{rate, std::max(0.0, quantum_cutoff_rate(ch) - rate)};
}

BoundPoint random_coding_exponent(const CQChannel& ch, double rate) {
    require_rate_range(rate, ch.q(), "random_coding_exponent");
    const auto value_at = [&](double s) {
        const std::vector<ComplexMatrix> powered = powered_states(ch, 1.0 / (1.0 + s));
        const auto objective = [&](const std::vector<double>& probs) {
            return mu_from_powered(powered, probs, s);
        };
        return detail::maximize_over_priors(ch.q(), objective).value - s * rate;
    };

    double best = 0.0;  // s = 0 gives mu = 0
    double best_s = 0.0;
    constexpr int coarse = 32;
    for (int k = 1; k <= coarse; ++k) {
        const double s = static_cast<double>(k) / coarse;
        const double v = value_at(s);
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    const double lo = std::max(0.0, best_s - 1.0 / coarse);
    const double hi = std::min(1.0, best_s + 1.0 / coarse);
    const double refined = detail::golden_max(lo, hi, 1e-7, value_at, nullptr);
    return BoundPoint{rate, std::max({0.0, best, refined})};
}

BoundPoint expurgated_exponent(const CQChannel& ch, double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw OutOfRange("expurgated_exponent: rate must be positive");
    }
    const std::vector<std::vector<double>> overlaps = overlap_matrix(ch);
    // s >= 1 searched as t = 1/s; the s -> infinity tail beyond s = 64 is cut.
    const auto value_at_t = [&](double t) {
        const double s = 1.0 / t;
        const auto objective = [&](const std::vector<double>& probs) {
            return mu_tilde_from_overlaps(overlaps, probs, s);
        };
        return detail::maximize_over_priors(ch.q(), objective).value - s * rate;
    };

    double best = -kInf;
    double best_t = 1.0;
    constexpr int coarse = 64;
    for (int k = 1; k <= coarse; ++k) {
        const double t = static_cast<double>(k) / coarse;
        const double v = value_at_t(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    const double lo = std::max(1.0 / coarse, best_t - 1.0 / coarse);
    const double hi = std::min(1.0, best_t + 1.0 / coarse);
    const double refined = detail::golden_max(lo, hi, 1e-8, value_at_t, nullptr);
    // mu~(P, 1) = mu(P, 1), so the bound can never fall below the cutoff bound.
    const double cutoff = cutoff_exponent(ch, std::min(rate, std::log2(double(ch.q())))).value;
    return BoundPoint{rate, std::max({0.0, best, refined, cutoff})};
}

}  // namespace cqx
