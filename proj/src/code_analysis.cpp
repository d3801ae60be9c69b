#include "cqx/code_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "cqx/bounds.hpp"
#include "cqx/errors.hpp"

namespace cqx {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

BlockCode::BlockCode(std::size_t q, std::vector<Word> words) : q_(q), words_(std::move(words)) {
    if (q_ < 2) throw ValidationError("code: alphabet size must be >= 2");
    if (words_.empty()) throw ValidationError("code: no codewords");
    n_ = words_.front().size();
    if (n_ == 0) throw ValidationError("code: zero-length codewords");
    for (const Word& w : words_) {
        if (w.size() != n_) throw LengthMismatch("code: codewords differ in length");
        for (std::uint8_t sym : w) {
            if (sym >= q_) {
                throw ValidationError("code: symbol " + std::to_string(int(sym)) +
                                      " outside alphabet of size " + std::to_string(q_));
            }
        }
    }
    std::set<Word> seen(words_.begin(), words_.end());
    if (seen.size() != words_.size()) throw ValidationError("code: duplicate codewords");
}

double BlockCode::rate() const noexcept {
    return std::log2(static_cast<double>(words_.size())) / static_cast<double>(n_);
}

const Word& BlockCode::word(std::size_t m) const {
    if (m >= words_.size()) {
        throw IndexOutOfRange("code: word index " + std::to_string(m) + " out of range");
    }
    return words_[m];
}

std::size_t hamming_distance(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    if (u.size() != v.size()) throw LengthMismatch("hamming_distance: unequal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]) ? 1 : 0;
    return d;
}

MultiplicityProfile multiplicity_enumerators(const BlockCode& code, std::size_t m) {
    const Word& ref = code.word(m);
    MultiplicityProfile profile;
    profile.counts.assign(code.length() + 1, 0.0);
    for (const Word& w : code.words()) {
        profile.counts[hamming_distance(ref, w)] += 1.0;
    }
    return profile;
}

MultiplicityProfile average_multiplicity_serial(const BlockCode& code) {
    const std::size_t m_count = code.size();
    std::vector<double> total(code.length() + 1, 0.0);
    for (std::size_t m = 0; m < m_count; ++m) {
        const Word& ref = code.word(m);
        for (const Word& w : code.words()) total[hamming_distance(ref, w)] += 1.0;
    }
    MultiplicityProfile profile;
    profile.counts.resize(total.size());
    for (std::size_t d = 0; d < total.size(); ++d) {
        profile.counts[d] = total[d] / static_cast<double>(m_count);
    }
    return profile;
}

MultiplicityProfile average_multiplicity(const BlockCode& code) {
    const std::size_t m_count = code.size();
    std::vector<double> total(code.length() + 1, 0.0);
    // Per-word counts are integers, so merging thread-local tallies is exact
    // in any order and matches the serial variant bit for bit.
#pragma omp parallel
    {
        std::vector<double> local(total.size(), 0.0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(m_count); ++m) {
            const Word& ref = code.word(static_cast<std::size_t>(m));
            for (const Word& w : code.words()) local[hamming_distance(ref, w)] += 1.0;
        }
#pragma omp critical
        for (std::size_t d = 0; d < total.size(); ++d) total[d] += local[d];
    }
    MultiplicityProfile profile;
    profile.counts.resize(total.size());
    for (std::size_t d = 0; d < total.size(); ++d) {
        profile.counts[d] = total[d] / static_cast<double>(m_count);
    }
    return profile;
}

MultiplicityProfile weight_enumerator(const BlockCode& code) {
    if (code.q() != 2) throw NotBinary("weight_enumerator: binary codes only");
    MultiplicityProfile profile;
    profile.counts.assign(code.length() + 1, 0.0);
    for (const Word& w : code.words()) {
        std::size_t weight = 0;
        for (std::uint8_t sym : w) weight += sym != 0 ? 1 : 0;
        profile.counts[weight] += 1.0;
    }
    return profile;
}

double log2_binomial(std::size_t n, std::size_t d) {
    if (d > n) throw OutOfRange("log2_binomial: d > n");
    if (d == 0 || d == n) return 0.0;
    if (n <= 60) {
        // C(n,k) = C(n,k-1) (n-k+1) / k stays integral at every step.
        std::uint64_t c = 1;
        const std::size_t k = std::min(d, n - d);
        for (std::size_t i = 1; i <= k; ++i) c = c * (n - i + 1) / i;
        return std::log2(static_cast<double>(c));
    }
    return (std::lgamma(double(n + 1)) - std::lgamma(double(d + 1)) -
            std::lgamma(double(n - d + 1))) /
           std::log(2.0);
}

MultiplicityProfile rescaled_binomial_profile(std::size_t n, double rate) {
    if (n == 0) throw OutOfRange("rescaled_binomial_profile: n must be positive");
    if (!(rate > 0.0 && rate <= 1.0)) {
        throw OutOfRange("rescaled_binomial_profile: rate must lie in (0, 1]");
    }
    const double log2_b = static_cast<double>(n) * (rate - 1.0);
    MultiplicityProfile profile;
    profile.counts.resize(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        profile.counts[d] = std::exp2(log2_b + log2_binomial(n, d));
    }
    return profile;
}

MultiplicityProfile random_linear_expected_weights(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw OutOfRange("random_linear_expected_weights: need 1 <= k <= n");
    MultiplicityProfile profile;
    profile.counts.assign(n + 1, 0.0);
    profile.counts[0] = 1.0;  // M * 2^{-k}: the all-zero word
    const double scale = static_cast<double>(k) - static_cast<double>(n);  // log2(M / 2^n)
    for (std::size_t d = 1; d <= n; ++d) {
        double value = std::exp2(scale + log2_binomial(n, d));
        if (d <= n - k) value -= std::exp2(scale + log2_binomial(n - k, d));
        profile.counts[d] = value;
    }
    return profile;
}

BlockCode sample_random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > n) throw OutOfRange("sample_random_linear_code: need 1 <= k <= n");
    if (k > 24) {
        throw DimensionOverflow("sample_random_linear_code: 2^" + std::to_string(k) +
                                " codewords is too large");
    }
    std::mt19937_64 rng(seed);
    const std::size_t parity = n - k;
    std::vector<std::vector<std::uint8_t>> a(k, std::vector<std::uint8_t>(parity, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < parity; ++j) a[i][j] = static_cast<std::uint8_t>(rng() & 1u);
    }
    const std::size_t m_count = std::size_t(1) << k;
    std::vector<Word> words;
    words.reserve(m_count);
    for (std::size_t msg = 0; msg < m_count; ++msg) {
        Word w(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            w[i] = static_cast<std::uint8_t>((msg >> (k - 1 - i)) & 1u);
        }
        for (std::size_t j = 0; j < parity; ++j) {
            std::uint8_t bit = 0;
            for (std::size_t i = 0; i < k; ++i) bit ^= static_cast<std::uint8_t>(w[i] & a[i][j]);
            w[k + j] = bit;
        }
        words.push_back(std::move(w));
    }
    return BlockCode(2, std::move(words));
}

ExponentProfile ame(const MultiplicityProfile& profile, std::size_t n) {
    if (n == 0) throw OutOfRange("ame: n must be positive");
    ExponentProfile out;
    out.exponents.resize(profile.counts.size());
    for (std::size_t d = 0; d < profile.counts.size(); ++d) {
        const double count = profile.counts[d];
        out.exponents[d] = count > 0.0 ? std::log2(count) / static_cast<double>(n) : kNegInf;
    }
    return out;
}

double iaame(double delta, double rate) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw OutOfRange("iaame: delta outside [0, 1]");
    if (!(rate >= 0.0 && rate <= 1.0)) throw OutOfRange("iaame: rate outside [0, 1]");
    return binary_entropy(delta) - (1.0 - rate);
}

double expurgated_iaame(double delta, double rate) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw OutOfRange("expurgated_iaame: delta outside [0, 1]");
    }
    if (!(rate >= 0.0 && rate <= 1.0)) throw OutOfRange("expurgated_iaame: rate outside [0, 1]");
    if (delta <= gv_distance(rate)) return kNegInf;
    return iaame(delta, rate);
}

double union_bound(const BlockCode& code, double c) {
    if (code.q() != 2) throw NotBinary("union_bound: binary codes only");
    if (!(c >= 0.0 && c <= 1.0)) throw OutOfRange("union_bound: c outside [0, 1]");
    const std::size_t n = code.length();
    std::vector<double> power(n + 1);
    power[0] = 1.0;
    for (std::size_t d = 1; d <= n; ++d) power[d] = power[d - 1] * c;

    const std::size_t m_count = code.size();
    std::vector<double> row(m_count, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(m_count); ++m) {
        const Word& ref = code.word(static_cast<std::size_t>(m));
        double sum = 0.0;
        for (std::size_t j = 0; j < m_count; ++j) {
            if (j == static_cast<std::size_t>(m)) continue;
            sum += power[hamming_distance(ref, code.word(j))];
        }
        row[static_cast<std::size_t>(m)] = sum;
    }
    double total = 0.0;
    for (double v : row) total += v;  // fixed order keeps the result deterministic
    return total / static_cast<double>(m_count);
}

bool is_linear(const BlockCode& code) {
    const std::set<Word> members(code.words().begin(), code.words().end());
    const std::size_t q = code.q();
    Word sum(code.length());
    for (const Word& u : code.words()) {
        for (const Word& v : code.words()) {
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] = static_cast<std::uint8_t>((u[i] + v[i]) % q);
            }
            if (!members.contains(sum)) return false;
        }
    }
    return true;
}

BlockCode parse_code_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Word> words;
    std::size_t lineno = 0;
    std::size_t expected_len = 0;
    std::uint8_t max_symbol = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed;
        for (char ch : line) {
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
        }
        if (trimmed.empty() || trimmed.front() == '#') continue;
        Word w;
        w.reserve(trimmed.size());
        for (char ch : trimmed) {
            if (ch < '0' || ch > '9') {
                throw ParseError("code file: line " + std::to_string(lineno) +
                                 ": invalid symbol '" + std::string(1, ch) + "'");
            }
            const auto sym = static_cast<std::uint8_t>(ch - '0');
            max_symbol = std::max(max_symbol, sym);
            w.push_back(sym);
        }
        if (expected_len == 0) {
            expected_len = w.size();
        } else if (w.size() != expected_len) {
            throw ParseError("code file: line " + std::to_string(lineno) + ": length " +
                             std::to_string(w.size()) + " differs from " +
                             std::to_string(expected_len));
        }
        for (const Word& prev : words) {
            if (prev == w) {
                throw ParseError("code file: line " + std::to_string(lineno) +
                                 ": duplicate codeword");
            }
        }
        words.push_back(std::move(w));
    }
    if (words.empty()) throw ParseError("code file: no codewords");
    const std::size_t q = std::max<std::size_t>(2, std::size_t(max_symbol) + 1);
    return BlockCode(q, std::move(words));
}

BlockCode load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open code file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_text(buf.str());
}

void save_code(const BlockCode& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write code file: " + path);
    for (const Word& w : code.words()) {
        for (std::uint8_t sym : w) out << char('0' + sym);
        out << '\n';
    }
}

}  // namespace cqx
