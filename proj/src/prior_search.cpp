#include "prior_search.hpp"

#include <algorithm>
#include <cmath>

namespace cqx::detail {

double golden_max(double lo, double hi, double xtol,
                  const std::function<double(double)>& f, double* argmax) {
    constexpr double ratio = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double a = lo;
    double b = hi;
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = f(x1);
        }
    }
    double best_x = 0.5 * (a + b);
    double best_f = f(best_x);
    for (double x : {lo, hi, x1, x2}) {
        const double fx = (x == x1) ? f1 : (x == x2) ? f2 : f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    if (argmax != nullptr) *argmax = best_x;
    return best_f;
}

namespace {

void enumerate_compositions(std::size_t q, int total,
                            std::vector<int>& parts, std::size_t index,
                            const std::function<void(const std::vector<int>&)>& visit) {
    if (index + 1 == q) {
        parts[index] = total;
        visit(parts);
        return;
    }
    for (int k = 0; k <= total; ++k) {
        parts[index] = k;
        enumerate_compositions(q, total - k, parts, index + 1, visit);
    }
}

void renormalize(std::vector<double>& p) {
    double sum = 0.0;
    for (double& x : p) {
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    for (double& x : p) x /= sum;
}

}  // namespace

PriorSearchResult maximize_over_priors(
    std::size_t q, const std::function<double(const std::vector<double>&)>& objective) {
    PriorSearchResult result;
    if (q == 2) {
        std::vector<double> probs(2, 0.0);
        const auto f = [&](double p) {
            probs[0] = p;
            probs[1] = 1.0 - p;
            return objective(probs);
        };
        double best_p = 0.5;
        result.value = golden_max(0.0, 1.0, 1e-10, f, &best_p);
        result.probs = {best_p, 1.0 - best_p};
        return result;
    }

    constexpr int grid = 64;
    std::vector<int> parts(q, 0);
    std::vector<double> probs(q, 0.0);
    double best = -1e300;
    std::vector<double> best_probs(q, 1.0 / static_cast<double>(q));
    enumerate_compositions(q, grid, parts, 0, [&](const std::vector<int>& ks) {
        for (std::size_t i = 0; i < q; ++i) probs[i] = static_cast<double>(ks[i]) / grid;
        const double v = objective(probs);
        if (v > best) {
            best = v;
            best_probs = probs;
        }
    });

    // Local refinement: golden-section mass transfers between coordinate pairs.
    std::vector<double> current = best_probs;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double gained = 0.0;
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                if (i == j) continue;
                const double pi = current[i];
                const double pj = current[j];
                if (pi + pj <= 0.0) continue;
                std::vector<double> trial = current;
                const auto f = [&](double t) {
                    trial[i] = t;
                    trial[j] = pi + pj - t;
                    return objective(trial);
                };
                double t_best = pi;
                const double v = golden_max(0.0, pi + pj, 1e-10, f, &t_best);
                if (v > best + 1e-14) {
                    gained += v - best;
                    best = v;
                    current[i] = t_best;
                    current[j] = pi + pj - t_best;
                    renormalize(current);
                }
            }
        }
        if (gained < 1e-12) break;
    }
    result.value = best;
    result.probs = current;
    return result;
}

}  // namespace cqx::detail
