#pragma once

#include "cqx/channel.hpp"
#include "cqx/code_analysis.hpp"
#include "cqx/complex_matrix.hpp"

namespace cqx {

// S_w = S_{w1} x ... x S_{wN}; dimension d^N must stay within dim_cap.
ComplexMatrix product_state(const Word& word, const CQChannel& ch,
                            std::size_t dim_cap = kDefaultDimCap);

// Square-root decision rule D_m = T^{-1/2} S_m^r T^{-1/2}, T = sum_j S_j^r.
// The inverse square root is taken on the support of T only.
struct DecisionRule {
    std::vector<ComplexMatrix> operators;
    double r = 0.5;
};

DecisionRule holevo_povm(const BlockCode& code, const CQChannel& ch, double r,
                         std::size_t dim_cap = kDefaultDimCap);

// Exact error statistics of the square-root rule. Measurement mass outside
// sum_m D_m counts as error, so per_word[m] = 1 - Tr(S_m D_m).
struct ErrorReport {
    std::vector<double> per_word;           // P_em
    std::vector<double> suboptimal_bounds;  // P~_em = sum_{j!=m} Tr S_m^{1-r} S_j^r
    std::vector<double> inconclusive;       // Tr(S_m (I - sum_j D_j))
    double overall = 0.0;                   // mean of per_word
    double union_bound = 0.0;               // (1/M) sum sum c^{d_H}; NaN unless binary
};

ErrorReport error_report(const BlockCode& code, const CQChannel& ch, double r,
                         std::size_t dim_cap = kDefaultDimCap);

// max over word pairs of |Tr sqrt(S_m) sqrt(S_j) - c^{d_H(m,j)}|, with the
// left side computed on the assembled product-state matrices.
double overlap_factorization_deviation(const BlockCode& code, const CQChannel& ch,
                     std::size_t dim_cap = kDefaultDimCap);

}  // namespace cqx
