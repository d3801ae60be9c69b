#pragma once

#include "cqx/channel.hpp"

namespace cqx {

// One point of an error-exponent lower-bound curve. value is >= 0 or
// +infinity (the c = 0 expurgated case).
struct BoundPoint {
    double rate = 0.0;
    double value = 0.0;
};

struct BinaryBoundParams {
    double c = 0.0;
    double rate = 0.0;
};

// H2(x) = -x log2 x - (1-x) log2 (1-x)
double binary_entropy(double x);

// Inverse of H2 on [0, 1/2]; H2(result) = y within 1e-12.
double inverse_binary_entropy(double y);

// Gilbert-Varshamov distance H2^{-1}(1 - rate).
double gv_distance(double rate);

// Minimizer c/(1+c) of delta log2(1/c) - H2(delta).
double effective_distance(double c);

// Largest rate with an expurgated gain, 1 - H2(c/(1+c)); the derivative form
// mu~(1) + c/(1+c) log2 c must agree within 1e-12.
double expurgated_rate(double c);

// Largest c with a positive cutoff bound at this rate: 2^{1-rate} - 1.
double positivity_threshold(double rate);

// Binary cutoff-rate bound max(0, 1 - log2(1+c) - rate).
BoundPoint binary_cutoff_bound(const BinaryBoundParams& p);

// Piecewise expurgated/cutoff bound: log2(1/c) * gv_distance(rate) below the
// expurgated rate, the cutoff bound above.
BoundPoint gv_expurgated_bound(const BinaryBoundParams& p);

// mu~(s) = -s log2((1 + c^{1/s}) / 2) for the uniform binary prior.
double binary_mu_tilde(double c, double s);
double binary_mu_tilde_slope(double c, double s);

// Solves d/ds mu~(s) = rate for s >= 1 (safeguarded Newton, residual <= 1e-10).
double solve_expurgated_s(double c, double rate);

// Expurgated bound through the implicit-s form; degenerate channels map to
// the formula limits (c = 0 -> +infinity, c = 1 -> 0).
BoundPoint binary_expurgated_exponent(const BinaryBoundParams& p);

// R0 = max_P mu(1, P).
double quantum_cutoff_rate(const CQChannel& ch);

// max(0, R0 - rate)
BoundPoint cutoff_exponent(const CQChannel& ch, double rate);

// Conjectured random-coding bound max_{s in [0,1]} max_P [mu(P,s) - s*rate].
BoundPoint random_coding_exponent(const CQChannel& ch, double rate);

// max_{s >= 1} max_P [mu~(P,s) - s*rate], s searched as t = 1/s in [1/64, 1].
BoundPoint expurgated_exponent(const CQChannel& ch, double rate);

}  // namespace cqx
