// cqx: error-exponent bounds, enumerator reports and square-root-rule
// simulation for classical-quantum channels.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cqx/bounds.hpp"
#include "cqx/channel.hpp"
#include "cqx/code_analysis.hpp"
#include "cqx/decoder.hpp"
#include "cqx/errors.hpp"

namespace {

using namespace cqx;

// 12 significant digits; infinities render as "inf".
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string profile_line(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ' ';
        out += fmt(values[i]);
    }
    return out;
}

std::string word_string(const Word& w) {
    std::string s;
    for (std::uint8_t sym : w) s += char('0' + sym);
    return s;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw ValidationError("cannot write output file: " + path);
    return file;
}

struct ToleranceFlags {
    ValidationConfig cfg;
    void attach(CLI::App* cmd) {
        cmd->add_option("--hermitian-tol", cfg.hermitian_tol, "state Hermiticity tolerance")
            ->envname("CQX_HERMITIAN_TOL")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--psd-tol", cfg.psd_tol, "state PSD tolerance")
            ->envname("CQX_PSD_TOL")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--trace-tol", cfg.trace_tol, "state trace tolerance")
            ->envname("CQX_TRACE_TOL")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
};

void run_param(const std::string& channel_path, const ValidationConfig& cfg) {
    const CQChannel ch = load_channel(channel_path, cfg);
    const double c = channel_param_c(ch);
    std::cout << "channel: q=" << ch.q() << " dim=" << ch.dim() << "\n";
    std::cout << "c          = " << fmt(c) << "\n";
    std::cout << "R0         = " << fmt(quantum_cutoff_rate(ch)) << "\n";
    std::cout << "delta_eff  = " << fmt(effective_distance(c)) << "\n";
    if (c > 0.0 && c < 1.0) {
        std::cout << "R_ex       = " << fmt(expurgated_rate(c)) << "\n";
    } else {
        std::cout << "R_ex       = n/a (degenerate: c = " << fmt(c) << ")\n";
    }
    std::cout << "\nrate threshold_c positive\n";
    for (int i = 0; i <= 10; ++i) {
        const double rate = i / 10.0;
        const double threshold = positivity_threshold(rate);
        std::cout << fmt(rate) << " " << fmt(threshold) << " "
                  << (c < threshold ? "yes" : "no") << "\n";
    }
}

void run_curve(const std::string& channel_path, const std::string& out_path, int grid,
               const ValidationConfig& cfg) {
    if (grid < 2) throw ValidationError("curve: --grid must be >= 2");
    const CQChannel ch = load_channel(channel_path, cfg);
    if (!states_commute(ch) && !is_pure_state_channel(ch)) {
        std::cerr << "note: the random-coding bound is conjectured for channels "
                     "with non-commuting mixed states\n";
    }

    const double capacity = holevo_capacity(ch).value;
    double upper = std::min(1.0, capacity);
    if (upper <= 1e-9) upper = 1.0;  // degenerate channel: all bounds vanish

    const bool binary = ch.q() == 2;
    const double c = binary ? channel_param_c(ch) : 0.0;
    const bool degenerate = binary && (c == 0.0 || c == 1.0);

    std::vector<double> rates(grid);
    std::vector<double> cut(grid);
    std::vector<double> ex(grid);
    std::vector<double> rc(grid);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < grid; ++k) {
        const double rate = upper * (k + 1) / static_cast<double>(grid + 1);
        rates[k] = rate;
        if (binary) {
            cut[k] = degenerate ? cutoff_exponent(ch, rate).value
                                : binary_cutoff_bound({c, rate}).value;
            ex[k] = binary_expurgated_exponent({c, rate}).value;
        } else {
            cut[k] = cutoff_exponent(ch, rate).value;
            ex[k] = expurgated_exponent(ch, rate).value;
        }
        rc[k] = random_coding_exponent(ch, rate).value;
    }

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << "rate,E_cut,E_ex,E_rc\n";
    for (int k = 0; k < grid; ++k) {
        os << fmt(rates[k]) << ',' << fmt(cut[k]) << ',' << fmt(ex[k]) << ',' << fmt(rc[k])
           << '\n';
    }
}

void run_enumerate(const std::string& code_path, const std::optional<std::string>& channel_path,
                   const std::optional<double>& c_flag, const ValidationConfig& cfg) {
    const BlockCode code = load_code(code_path);
    std::cout << "code: n=" << code.length() << " M=" << code.size()
              << " rate=" << fmt(code.rate()) << " q=" << code.q() << "\n";
    std::cout << "linear: " << (is_linear(code) ? "yes" : "no") << "\n";

    if (code.q() == 2) {
        std::cout << "weight_enumerator: " << profile_line(weight_enumerator(code).counts)
                  << "\n";
    }
    const MultiplicityProfile avg = average_multiplicity(code);
    std::cout << "average_multiplicity: " << profile_line(avg.counts) << "\n";
    std::cout << "ame: " << profile_line(ame(avg, code.length()).exponents) << "\n";

    std::optional<double> c = c_flag;
    if (channel_path) c = channel_param_c(load_channel(*channel_path, cfg));
    if (c) {
        std::cout << "union_bound(c=" << fmt(*c) << "): " << fmt(union_bound(code, *c)) << "\n";
    }
}

void run_simulate(const std::string& channel_path, const std::string& code_path, double r,
                  std::size_t dim_cap, const ValidationConfig& cfg) {
    const CQChannel ch = load_channel(channel_path, cfg);
    const BlockCode code = load_code(code_path);
    const ErrorReport report = error_report(code, ch, r, dim_cap);

    std::cout << "channel: q=" << ch.q() << " dim=" << ch.dim();
    if (ch.q() == 2) std::cout << " c=" << fmt(channel_param_c(ch));
    std::cout << "\ncode: n=" << code.length() << " M=" << code.size()
              << " rate=" << fmt(code.rate()) << "\n";
    std::cout << "r = " << fmt(r) << "\n";
    std::cout << "m word P_em P_tilde_em inconclusive\n";
    for (std::size_t m = 0; m < code.size(); ++m) {
        std::cout << (m + 1) << " " << word_string(code.word(m)) << " "
                  << fmt(report.per_word[m]) << " " << fmt(report.suboptimal_bounds[m]) << " "
                  << fmt(report.inconclusive[m]) << "\n";
    }
    std::cout << "P_e = " << fmt(report.overall) << "\n";
    if (ch.q() == 2) {
        std::cout << "union_bound = " << fmt(report.union_bound) << "\n";
        std::cout << "overlap_deviation = " << fmt(overlap_factorization_deviation(code, ch, dim_cap)) << "\n";
    }
}

void run_gv(const std::optional<double>& rate, int grid, const std::string& out_path) {
    if (rate) {
        std::cout << "rate = " << fmt(*rate) << "\n";
        std::cout << "delta_gv = " << fmt(gv_distance(*rate)) << "\n";
        return;
    }
    if (grid < 2) throw ValidationError("gv: --grid must be >= 2");
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << "rate,delta_gv\n";
    for (int k = 0; k < grid; ++k) {
        const double r = static_cast<double>(k) / (grid - 1);
        os << fmt(r) << ',' << fmt(gv_distance(r)) << '\n';
    }
}

void run_random_linear(std::size_t n, std::size_t k, std::uint64_t seed, bool expected,
                       const std::string& out_path) {
    if (expected) {
        std::cout << "expected_weights: "
                  << profile_line(random_linear_expected_weights(n, k).counts) << "\n";
        return;
    }
    const BlockCode code = sample_random_linear_code(n, k, seed);
    std::cout << "sampled [n=" << n << ", k=" << k << "] code, seed=" << seed << "\n";
    for (const Word& w : code.words()) std::cout << word_string(w) << "\n";
    std::cout << "weight_enumerator: " << profile_line(weight_enumerator(code).counts) << "\n";
    if (!out_path.empty()) {
        save_code(code, out_path);
        std::cerr << "wrote " << out_path << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"error-exponent bounds for classical-quantum channels"};
    app.require_subcommand(1);

    // param
    auto* param = app.add_subcommand("param", "channel parameter and rate summary");
    std::string param_channel;
    param->add_option("channel", param_channel, "channel JSON file")->required();
    ToleranceFlags param_tol;
    param_tol.attach(param);

    // curve
    auto* curve = app.add_subcommand("curve", "bound curves as CSV");
    std::string curve_channel;
    std::string curve_out;
    int curve_grid = 200;
    curve->add_option("channel", curve_channel, "channel JSON file")->required();
    curve->add_option("--out", curve_out, "output CSV path (default: stdout)")
        ->envname("CQX_OUT");
    curve->add_option("--grid", curve_grid, "number of rate points")
        ->envname("CQX_GRID")
        ->capture_default_str();
    ToleranceFlags curve_tol;
    curve_tol.attach(curve);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerator report for a code file");
    std::string enum_code;
    std::optional<std::string> enum_channel;
    std::optional<double> enum_c;
    enumerate->add_option("code", enum_code, "code text file")->required();
    auto* copt = enumerate->add_option("--c", enum_c, "channel parameter c")->envname("CQX_C");
    enumerate->add_option("--channel", enum_channel, "channel JSON file")->excludes(copt);
    ToleranceFlags enum_tol;
    enum_tol.attach(enumerate);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "exact square-root-rule simulation");
    std::string sim_channel;
    std::string sim_code;
    double sim_r = 0.5;
    std::size_t sim_cap = kDefaultDimCap;
    simulate->add_option("channel", sim_channel, "channel JSON file")->required();
    simulate->add_option("code", sim_code, "code text file")->required();
    simulate->add_option("--r", sim_r, "decision-rule exponent in (0, 1]")
        ->envname("CQX_R")
        ->capture_default_str();
    simulate->add_option("--dim-cap", sim_cap, "product-state dimension cap")
        ->envname("CQX_DIM_CAP")
        ->capture_default_str();
    ToleranceFlags sim_tol;
    sim_tol.attach(simulate);

    // gv
    auto* gv = app.add_subcommand("gv", "Gilbert-Varshamov distance");
    std::optional<double> gv_rate;
    int gv_grid = 200;
    std::string gv_out;
    gv->add_option("--rate", gv_rate, "single rate in [0, 1]");
    gv->add_option("--grid", gv_grid, "rate grid for CSV output")
        ->envname("CQX_GRID")
        ->capture_default_str();
    gv->add_option("--out", gv_out, "output CSV path (default: stdout)")->envname("CQX_OUT");

    // random-linear
    auto* rl = app.add_subcommand("random-linear", "random systematic linear codes");
    std::size_t rl_n = 0;
    std::size_t rl_k = 0;
    std::uint64_t rl_seed = 1;
    bool rl_expected = false;
    std::string rl_out;
    rl->add_option("--n", rl_n, "code length")->required();
    rl->add_option("--k", rl_k, "code dimension")->required();
    rl->add_option("--seed", rl_seed, "RNG seed")->envname("CQX_SEED")->capture_default_str();
    rl->add_flag("--expected", rl_expected, "print ensemble-expected weights instead");
    rl->add_option("--out", rl_out, "write the sampled code to this file")->envname("CQX_OUT");

    try {
        app.parse(argc, argv);
        if (param->parsed()) run_param(param_channel, param_tol.cfg);
        if (curve->parsed()) run_curve(curve_channel, curve_out, curve_grid, curve_tol.cfg);
        if (enumerate->parsed()) run_enumerate(enum_code, enum_channel, enum_c, enum_tol.cfg);
        if (simulate->parsed()) run_simulate(sim_channel, sim_code, sim_r, sim_cap, sim_tol.cfg);
        if (gv->parsed()) run_gv(gv_rate, gv_grid, gv_out);
        if (rl->parsed()) run_random_linear(rl_n, rl_k, rl_seed, rl_expected, rl_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::validation:
                return 2;
            case ErrorKind::numeric:
                return 3;
            case ErrorKind::overflow:
                return 4;
        }
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
