#include "cqx/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "cqx/errors.hpp"
#include "json.hpp"
#include "prior_search.hpp"

namespace cqx {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Spectral power from a cached state spectrum; eigenvalues indistinguishable
// from zero at working precision stay null.
ComplexMatrix state_power(const DensityMatrix& s, double exponent) {
    const HermitianSpectrum& spec = s.spectrum();
    const double lambda_max =
        spec.eigenvalues.empty() ? 0.0 : std::max(0.0, spec.eigenvalues.front());
    const double cutoff = kRoundoffFloor * lambda_max;
    std::vector<double> mapped(spec.eigenvalues.size());
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        const double lambda = spec.eigenvalues[k];
        mapped[k] = lambda > cutoff ? std::pow(lambda, exponent) : 0.0;
    }
    return spectral_transform(spec, mapped);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, const ValidationConfig& cfg) : m_(std::move(m)) {
    if (m_.dim() == 0) throw InvalidState("density matrix: empty");
    if (!all_finite(m_)) throw InvalidState("density matrix: non-finite entries");
    const double scale = max_abs(m_);
    if (hermiticity_defect(m_) > cfg.hermitian_tol * std::max(1.0, scale)) {
        throw InvalidState("density matrix: not Hermitian within tolerance");
    }
    const Complex tr = trace(m_);
    if (std::abs(tr - Complex(1.0)) > cfg.trace_tol) {
        std::ostringstream os;
        os << "density matrix: trace " << tr.real() << " is not 1 within tolerance";
        throw InvalidState(os.str());
    }
    spec_ = eigh(m_);
    if (spec_.eigenvalues.back() < -cfg.psd_tol) {
        throw InvalidState("density matrix: negative eigenvalue " +
                           std::to_string(spec_.eigenvalues.back()));
    }
}

CQChannel::CQChannel(std::vector<DensityMatrix> states) : states_(std::move(states)) {
    if (states_.size() < 2) throw ValidationError("channel: need an alphabet of size >= 2");
    for (const DensityMatrix& s : states_) {
        if (s.dim() != states_.front().dim()) {
            throw DimensionMismatch("channel: signal states must share one dimension");
        }
    }
}

PriorDistribution::PriorDistribution(std::vector<double> probs) : p_(std::move(probs)) {
    if (p_.empty()) throw ValidationError("prior: empty");
    double sum = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0)) throw ValidationError("prior: negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ValidationError("prior: probabilities sum to " + std::to_string(sum));
    }
}

PriorDistribution PriorDistribution::uniform(std::size_t q) {
    return PriorDistribution(std::vector<double>(q, 1.0 / static_cast<double>(q)));
}

double channel_param_c(const CQChannel& ch) {
    if (ch.q() != 2) {
        throw NotBinary("channel_param_c: defined for binary channels, q = " +
                        std::to_string(ch.q()));
    }
    const ComplexMatrix r1 = state_power(ch.state(0), 0.5);
    const ComplexMatrix r2 = state_power(ch.state(1), 0.5);
    return clamp01(trace_product(r1, r2).real());
}

double von_neumann_entropy(const DensityMatrix& s) {
    double h = 0.0;
    for (double lambda : s.spectrum().eigenvalues) {
        if (lambda > 0.0) h -= lambda * std::log2(lambda);
    }
    return std::max(0.0, h);
}

std::vector<ComplexMatrix> powered_states(const CQChannel& ch, double exponent) {
    std::vector<ComplexMatrix> out;
    out.reserve(ch.q());
    for (const DensityMatrix& s : ch.states()) out.push_back(state_power(s, exponent));
    return out;
}

double mu_from_powered(const std::vector<ComplexMatrix>& powered,
                       const std::vector<double>& probs, double s) {
    // s = 0: the trace of a mixture of density matrices is identically 1.
    if (s == 0.0) return 0.0;
    ComplexMatrix mix(powered.front().dim());
    for (std::size_t i = 0; i < powered.size(); ++i) add_scaled(mix, powered[i], probs[i]);
    HermitianSpectrum spec = eigh(mix);
    double tr = 0.0;
    for (double lambda : spec.eigenvalues) {
        if (lambda > 0.0) tr += std::pow(lambda, 1.0 + s);
    }
    // Tr[(sum p_i S_i^{1/(1+s)})^{1+s}] <= 1, so mu >= 0; clamp roundoff.
    return std::max(0.0, -std::log2(tr));
}

double mu(const CQChannel& ch, const PriorDistribution& p, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw OutOfRange("mu: s must lie in [0, 1]");
    if (p.size() != ch.q()) throw DimensionMismatch("mu: prior size does not match alphabet");
    return mu_from_powered(powered_states(ch, 1.0 / (1.0 + s)), p.probs(), s);
}

std::vector<std::vector<double>> overlap_matrix(const CQChannel& ch) {
    const std::size_t q = ch.q();
    std::vector<ComplexMatrix> roots = powered_states(ch, 0.5);
    std::vector<std::vector<double>> o(q, std::vector<double>(q, 0.0));
    for (std::size_t i = 0; i < q; ++i) {
        o[i][i] = clamp01(trace_product(roots[i], roots[i]).real());
        for (std::size_t j = i + 1; j < q; ++j) {
            const double v = clamp01(trace_product(roots[i], roots[j]).real());
            o[i][j] = v;
            o[j][i] = v;
        }
    }
    return o;
}

double mu_tilde_from_overlaps(const std::vector<std::vector<double>>& overlaps,
                              const std::vector<double>& probs, double s) {
    const std::size_t q = probs.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            sum += probs[i] * probs[j] * std::pow(overlaps[i][j], 1.0 / s);
        }
    }
    return std::max(0.0, -s * std::log2(sum));
}

double mu_tilde(const CQChannel& ch, const PriorDistribution& p, double s) {
    if (!(s >= 1.0)) throw OutOfRange("mu_tilde: s must be >= 1");
    if (p.size() != ch.q()) throw DimensionMismatch("mu_tilde: prior size does not match alphabet");
    return mu_tilde_from_overlaps(overlap_matrix(ch), p.probs(), s);
}

CapacityResult holevo_capacity(const CQChannel& ch) {
    std::vector<double> state_entropy;
    state_entropy.reserve(ch.q());
    for (const DensityMatrix& s : ch.states()) state_entropy.push_back(von_neumann_entropy(s));

    const auto objective = [&](const std::vector<double>& probs) {
        ComplexMatrix mix(ch.dim());
        double cond = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            add_scaled(mix, ch.state(i).matrix(), probs[i]);
            cond += probs[i] * state_entropy[i];
        }
        HermitianSpectrum spec = eigh(mix);
        double h = 0.0;
        for (double lambda : spec.eigenvalues) {
            if (lambda > 0.0) h -= lambda * std::log2(lambda);
        }
        return h - cond;
    };

    detail::PriorSearchResult best = detail::maximize_over_priors(ch.q(), objective);
    return CapacityResult{std::max(0.0, best.value), best.probs};
}

CQChannel bsc_channel(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("bsc_channel: p must lie in [0, 1]");
    ComplexMatrix s1 = ComplexMatrix::diagonal({1.0 - p, p});
    ComplexMatrix s2 = ComplexMatrix::diagonal({p, 1.0 - p});
    std::vector<DensityMatrix> states;
    states.emplace_back(std::move(s1));
    states.emplace_back(std::move(s2));
    return CQChannel(std::move(states));
}

CQChannel pure_state_channel(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw OutOfRange("pure_state_channel: eps must lie in [0, 1]");
    const double ortho = std::sqrt(std::max(0.0, 1.0 - eps * eps));
    ComplexMatrix s1(2);
    s1(0, 0) = 1.0;
    ComplexMatrix s2(2);
    s2(0, 0) = eps * eps;
    s2(0, 1) = eps * ortho;
    s2(1, 0) = eps * ortho;
    s2(1, 1) = 1.0 - eps * eps;
    std::vector<DensityMatrix> states;
    states.emplace_back(std::move(s1));
    states.emplace_back(std::move(s2));
    return CQChannel(std::move(states));
}

bool states_commute(const CQChannel& ch, double tol) {
    for (std::size_t i = 0; i < ch.q(); ++i) {
        for (std::size_t j = i + 1; j < ch.q(); ++j) {
            ComplexMatrix ab = matmul(ch.state(i).matrix(), ch.state(j).matrix());
            ComplexMatrix ba = matmul(ch.state(j).matrix(), ch.state(i).matrix());
            add_scaled(ab, ba, -1.0);
            if (max_abs(ab) > tol) return false;
        }
    }
    return true;
}

bool is_pure_state_channel(const CQChannel& ch, double tol) {
    for (const DensityMatrix& s : ch.states()) {
        if (s.spectrum().eigenvalues.front() < 1.0 - tol) return false;
    }
    return true;
}

namespace {

std::string json_location(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

CQChannel parse_channel_json(const std::string& text, const ValidationConfig& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("channel file: parse error at " + json_location(text, e.byte) + ": " +
                         e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("states")) {
        throw ParseError("channel file: expected an object with \"dim\" and \"states\"");
    }
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
        throw ParseError("channel file: \"dim\" must be a positive integer");
    }
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (!j["states"].is_array() || j["states"].size() < 2) {
        throw ParseError("channel file: \"states\" must list at least two states");
    }

    std::vector<DensityMatrix> states;
    states.reserve(j["states"].size());
    for (std::size_t s = 0; s < j["states"].size(); ++s) {
        const nlohmann::json& st = j["states"][s];
        const std::string where = "states[" + std::to_string(s) + "]";
        if (!st.is_array() || st.size() != dim) {
            throw ParseError("channel file: " + where + " must have " + std::to_string(dim) +
                             " rows");
        }
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!st[i].is_array() || st[i].size() != dim) {
                throw ParseError("channel file: " + where + "[" + std::to_string(i) +
                                 "] must have " + std::to_string(dim) + " entries");
            }
            for (std::size_t k = 0; k < dim; ++k) {
                const nlohmann::json& e = st[i][k];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                    throw ParseError("channel file: " + where + "[" + std::to_string(i) + "][" +
                                     std::to_string(k) + "] must be an [re, im] pair");
                }
                m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
            }
        }
        try {
            states.emplace_back(std::move(m), cfg);
        } catch (const InvalidState& e) {
            throw InvalidState("channel file: " + where + ": " + e.what());
        }
    }
    return CQChannel(std::move(states));
}

CQChannel load_channel(const std::string& path, const ValidationConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open channel file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_channel_json(buf.str(), cfg);
}

std::string channel_to_json(const CQChannel& ch) {
    nlohmann::json j;
    j["dim"] = ch.dim();
    nlohmann::json states = nlohmann::json::array();
    for (const DensityMatrix& s : ch.states()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < s.dim(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < s.dim(); ++k) {
                const Complex z = s.matrix()(i, k);
                row.push_back({z.real(), z.imag()});
            }
            rows.push_back(std::move(row));
        }
        states.push_back(std::move(rows));
    }
    j["states"] = std::move(states);
    return j.dump(2) + "\n";
}

void save_channel(const CQChannel& ch, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write channel file: " + path);
    out << channel_to_json(ch);
}

}  // namespace cqx
