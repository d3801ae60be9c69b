#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cqx::detail {

// Golden-section maximization of a smooth function on [lo, hi]; endpoints
// are evaluated as candidates. Returns the best value, writes the argmax.
double golden_max(double lo, double hi, double xtol,
                  const std::function<double(double)>& f, double* argmax);

struct PriorSearchResult {
    std::vector<double> probs;
    double value = 0.0;
};

// Maximizes a smooth objective over the probability simplex. q = 2 reduces
// to golden section over p; q > 2 scans a step-1/64 simplex grid and then
// refines by pairwise mass transfers.
PriorSearchResult maximize_over_priors(
    std::size_t q, const std::function<double(const std::vector<double>&)>& objective);

}  // namespace cqx::detail
