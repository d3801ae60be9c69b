#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cqx/complex_matrix.hpp"
#include "cqx/hermitian.hpp"

namespace cqx {

// State validation tolerances, kept in one place.
struct ValidationConfig {
    double hermitian_tol = 1e-9;
    double psd_tol = 1e-10;
    double trace_tol = 1e-9;
};

// Hermitian, PSD, unit-trace operator. Validated on construction.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m, const ValidationConfig& cfg = {});

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    const HermitianSpectrum& spectrum() const noexcept { return spec_; }

  private:
    ComplexMatrix m_;
    HermitianSpectrum spec_;  // cached; every channel formula is spectral
};

// Classical-quantum channel: one output signal state per input symbol.
class CQChannel {
  public:
    explicit CQChannel(std::vector<DensityMatrix> states);

    std::size_t q() const noexcept { return states_.size(); }
    std::size_t dim() const noexcept { return states_.front().dim(); }
    const DensityMatrix& state(std::size_t i) const { return states_.at(i); }
    const std::vector<DensityMatrix>& states() const noexcept { return states_; }

  private:
    std::vector<DensityMatrix> states_;
};

class PriorDistribution {
  public:
    explicit PriorDistribution(std::vector<double> probs);
    static PriorDistribution uniform(std::size_t q);

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_.at(i); }
    const std::vector<double>& probs() const noexcept { return p_; }

  private:
    std::vector<double> p_;
};

// Overlap Tr sqrt(S1) sqrt(S2) of a binary channel, clamped into [0, 1].
double channel_param_c(const CQChannel& ch);

// -Tr(S log2 S) in bits; 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& s);

struct CapacityResult {
    double value = 0.0;
    std::vector<double> prior;
};

// max_P [ H(sum p_i S_i) - sum p_i H(S_i) ] and an argmax prior.
CapacityResult holevo_capacity(const CQChannel& ch);

// mu(P, s) = -log2 Tr[(sum_i p_i S_i^{1/(1+s)})^{1+s}], s in [0, 1].
double mu(const CQChannel& ch, const PriorDistribution& p, double s);

// mu~(P, s) = -s log2[sum_ij p_i p_j (Tr sqrt(S_i) sqrt(S_j))^{1/s}], s >= 1.
double mu_tilde(const CQChannel& ch, const PriorDistribution& p, double s);

// Pairwise overlap table O_ij = Tr sqrt(S_i) sqrt(S_j), entries clamped to [0, 1].
std::vector<std::vector<double>> overlap_matrix(const CQChannel& ch);

// Building blocks for prior sweeps at fixed s: the powered states and the
// overlap table only need computing once per s.
std::vector<ComplexMatrix> powered_states(const CQChannel& ch, double exponent);
double mu_from_powered(const std::vector<ComplexMatrix>& powered,
                       const std::vector<double>& probs, double s);
double mu_tilde_from_overlaps(const std::vector<std::vector<double>>& overlaps,
                              const std::vector<double>& probs, double s);

// Commuting diagonal states realizing a BSC with crossover probability p.
CQChannel bsc_channel(double p);

// Binary pure-state channel with |<psi1|psi2>| = eps.
CQChannel pure_state_channel(double eps);

// True when all pairs of signal states commute (quasi-classical channel).
bool states_commute(const CQChannel& ch, double tol = 1e-9);

// True when every signal state is a rank-one projector.
bool is_pure_state_channel(const CQChannel& ch, double tol = 1e-9);

// Channel file format: JSON with fields "dim" and "states", each state a
// dim x dim array of [re, im] pairs. Parse errors carry line:column positions.
CQChannel parse_channel_json(const std::string& text, const ValidationConfig& cfg = {});
CQChannel load_channel(const std::string& path, const ValidationConfig& cfg = {});
std::string channel_to_json(const CQChannel& ch);
void save_channel(const CQChannel& ch, const std::string& path);

}  // namespace cqx
