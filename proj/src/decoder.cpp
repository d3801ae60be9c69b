#include "cqx/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cqx/errors.hpp"
#include "cqx/hermitian.hpp"

namespace cqx {

namespace {

void require_word_symbols(const Word& word, const CQChannel& ch) {
    for (std::uint8_t sym : word) {
        if (sym >= ch.q()) {
            throw ValidationError("codeword symbol " + std::to_string(int(sym)) +
                                  " has no signal state (q = " + std::to_string(ch.q()) + ")");
        }
    }
}

std::size_t checked_product_dim(std::size_t base, std::size_t length, std::size_t dim_cap) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (dim > dim_cap / base) {
            throw DimensionOverflow("product state dimension " + std::to_string(base) + "^" +
                                    std::to_string(length) + " exceeds cap " +
                                    std::to_string(dim_cap));
        }
        dim *= base;
    }
    return dim;
}

// S^e with e in [0, 1]; e = 0 yields the support projector.
ComplexMatrix state_power_or_projector(const ComplexMatrix& m, double e) {
    if (e > 0.0) return mat_power(m, e);
    HermitianSpectrum s = eigh(m);
    const double lambda_max = s.eigenvalues.empty() ? 0.0 : std::max(0.0, s.eigenvalues.front());
    const double cutoff = kNullspaceCutoff * lambda_max;
    std::vector<double> mapped(s.eigenvalues.size());
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        mapped[k] = s.eigenvalues[k] > cutoff ? 1.0 : 0.0;
    }
    return spectral_transform(s, mapped);
}

// Product of the per-position base matrices along a word.
ComplexMatrix word_tensor(const Word& word, const std::vector<ComplexMatrix>& base,
                          std::size_t dim_cap) {
    ComplexMatrix out = base[word.front()];
    for (std::size_t i = 1; i < word.size(); ++i) out = tensor(out, base[word[i]], dim_cap);
    return out;
}

}  // namespace

ComplexMatrix product_state(const Word& word, const CQChannel& ch, std::size_t dim_cap) {
    if (word.empty()) throw ValidationError("product_state: empty codeword");
    require_word_symbols(word, ch);
    checked_product_dim(ch.dim(), word.size(), dim_cap);
    std::vector<ComplexMatrix> base;
    base.reserve(ch.q());
    for (const DensityMatrix& s : ch.states()) base.push_back(s.matrix());
    return word_tensor(word, base, dim_cap);
}

DecisionRule holevo_povm(const BlockCode& code, const CQChannel& ch, double r,
                         std::size_t dim_cap) {
    if (!(r > 0.0 && r <= 1.0)) throw OutOfRange("holevo_povm: r must lie in (0, 1]");
    for (const Word& w : code.words()) require_word_symbols(w, ch);
    const std::size_t dim = checked_product_dim(ch.dim(), code.length(), dim_cap);

    // (A x B)^r = A^r x B^r for PSD factors, so powers are taken per signal
    // state and then tensored along each word.
    std::vector<ComplexMatrix> base_pow;
    base_pow.reserve(ch.q());
    for (const DensityMatrix& s : ch.states()) base_pow.push_back(mat_power(s.matrix(), r));

    std::vector<ComplexMatrix> powered;
    powered.reserve(code.size());
    ComplexMatrix total(dim);
    for (const Word& w : code.words()) {
        powered.push_back(word_tensor(w, base_pow, dim_cap));
        add_scaled(total, powered.back(), 1.0);
    }

    const ComplexMatrix root_inv = pinv_sqrt(total);
    DecisionRule rule;
    rule.r = r;
    rule.operators.reserve(code.size());
    for (const ComplexMatrix& sm : powered) {
        rule.operators.push_back(matmul(matmul(root_inv, sm), root_inv));
    }
    return rule;
}

ErrorReport error_report(const BlockCode& code, const CQChannel& ch, double r,
                         std::size_t dim_cap) {
    const DecisionRule rule = holevo_povm(code, ch, r, dim_cap);
    const std::size_t m_count = code.size();

    std::vector<ComplexMatrix> base;
    base.reserve(ch.q());
    for (const DensityMatrix& s : ch.states()) base.push_back(s.matrix());

    // Per-position trace table for the suboptimality bound:
    // Tr S_m^{1-r} S_j^r = prod_n Tr S_{m n}^{1-r} S_{j n}^{r}.
    std::vector<ComplexMatrix> base_pow_r;
    std::vector<ComplexMatrix> base_pow_1mr;
    for (const DensityMatrix& s : ch.states()) {
        base_pow_r.push_back(mat_power(s.matrix(), r));
        base_pow_1mr.push_back(state_power_or_projector(s.matrix(), 1.0 - r));
    }
    std::vector<std::vector<double>> pair_trace(ch.q(), std::vector<double>(ch.q(), 0.0));
    for (std::size_t a = 0; a < ch.q(); ++a) {
        for (std::size_t b = 0; b < ch.q(); ++b) {
            pair_trace[a][b] = trace_product(base_pow_1mr[a], base_pow_r[b]).real();
        }
    }

    ErrorReport report;
    report.per_word.assign(m_count, 0.0);
    report.suboptimal_bounds.assign(m_count, 0.0);
    report.inconclusive.assign(m_count, 0.0);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(m_count); ++mi) {
        const auto m = static_cast<std::size_t>(mi);
        const ComplexMatrix sm = word_tensor(code.word(m), base, dim_cap);
        double decided = 0.0;
        double correct = 0.0;
        for (std::size_t j = 0; j < m_count; ++j) {
            const double effect = trace_product(sm, rule.operators[j]).real();
            decided += effect;
            if (j == m) correct = effect;
        }
        // Mass outside sum_j D_j is counted as error: P_em = 1 - Tr(S_m D_m).
        report.per_word[m] = std::clamp(1.0 - correct, 0.0, 1.0);
        report.inconclusive[m] = std::max(0.0, 1.0 - decided);

        double bound = 0.0;
        for (std::size_t j = 0; j < m_count; ++j) {
            if (j == m) continue;
            double prod = 1.0;
            for (std::size_t pos = 0; pos < code.length(); ++pos) {
                prod *= pair_trace[code.word(m)[pos]][code.word(j)[pos]];
            }
            bound += prod;
        }
        report.suboptimal_bounds[m] = bound;
    }

    double sum = 0.0;
    for (double v : report.per_word) sum += v;
    report.overall = sum / static_cast<double>(m_count);
    report.union_bound = ch.q() == 2 ? union_bound(code, channel_param_c(ch))
                                     : std::numeric_limits<double>::quiet_NaN();
    return report;
}

double overlap_factorization_deviation(const BlockCode& code, const CQChannel& ch, std::size_t dim_cap) {
    if (ch.q() != 2) throw NotBinary("overlap_factorization_deviation: binary channels only");
    for (const Word& w : code.words()) require_word_symbols(w, ch);
    checked_product_dim(ch.dim(), code.length(), dim_cap);
    const double c = channel_param_c(ch);

    std::vector<ComplexMatrix> base;
    for (const DensityMatrix& s : ch.states()) base.push_back(s.matrix());

    // The square roots are taken on the assembled product matrices; the
    // factorized per-position form is exactly what is being checked.
    const std::size_t m_count = code.size();
    std::vector<ComplexMatrix> roots(m_count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(m_count); ++m) {
        roots[m] = mat_power(word_tensor(code.word(static_cast<std::size_t>(m)), base, dim_cap),
                             0.5);
    }

    double worst = 0.0;
    for (std::size_t m = 0; m < m_count; ++m) {
        for (std::size_t j = m + 1; j < m_count; ++j) {
            const Complex tr = trace_product(roots[m], roots[j]);
            const auto d = hamming_distance(code.word(m), code.word(j));
            worst = std::max(worst, std::abs(tr - Complex(std::pow(c, double(d)))));
        }
    }
    return worst;
}

}  // namespace cqx
