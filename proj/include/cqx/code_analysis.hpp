#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cqx {

using Word = std::vector<std::uint8_t>;

// Block code: M distinct words of length n over {0, ..., q-1}.
class BlockCode {
  public:
    BlockCode(std::size_t q, std::vector<Word> words);

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    std::size_t q() const noexcept { return q_; }
    double rate() const noexcept;  // log2(M) / n
    const Word& word(std::size_t m) const;
    const std::vector<Word>& words() const noexcept { return words_; }

  private:
    std::size_t q_;
    std::size_t n_;
    std::vector<Word> words_;
};

std::size_t hamming_distance(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

// Real-valued distance/weight profile indexed 0..n. Entries are fractional
// for averages, ensemble expectations and rescaled binomials.
struct MultiplicityProfile {
    std::vector<double> counts;
};

// Multiplicity exponents log2(count)/n; -infinity marks empty distances.
struct ExponentProfile {
    std::vector<double> exponents;
};

// counts[d] = #{ j : d_H(word m, word j) = d }; counts[0] = 1, sum = M.
MultiplicityProfile multiplicity_enumerators(const BlockCode& code, std::size_t m);

// Entrywise mean of the per-word enumerators. The OpenMP variant partitions
// the word index range; counts are integers, so the merge is exact.
MultiplicityProfile average_multiplicity(const BlockCode& code);
MultiplicityProfile average_multiplicity_serial(const BlockCode& code);

// A_d = number of words of Hamming weight d (binary codes).
MultiplicityProfile weight_enumerator(const BlockCode& code);

// b * C(n, d) with b = 2^{n(rate-1)}; sums to 2^{n rate}.
MultiplicityProfile rescaled_binomial_profile(std::size_t n, double rate);

// Expected multiplicities of the random systematic linear ensemble G = [I|A]:
// M * Prob{w = 0} = 1 and M * 2^{-n} [C(n,d) - C(n-k,d)] for d > 0.
MultiplicityProfile random_linear_expected_weights(std::size_t n, std::size_t k);

// One draw from the same ensemble: A filled with i.i.d. bits from the seed.
BlockCode sample_random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed);

ExponentProfile ame(const MultiplicityProfile& profile, std::size_t n);

// Interpolated asymptotic exponent of rescaled binomial families:
// H2(delta) - (1 - rate).
double iaame(double delta, double rate);

// Same with the region at and below the GV distance expurgated to -infinity.
double expurgated_iaame(double delta, double rate);

// (1/M) sum_m sum_{j != m} c^{d_H(m,j)} for a binary code.
double union_bound(const BlockCode& code, double c);

// Closure of the word set under bitwise addition mod q, checked pairwise.
bool is_linear(const BlockCode& code);

// log2 C(n, d); exact integer arithmetic below n = 61, lgamma above.
double log2_binomial(std::size_t n, std::size_t d);

// Code file format: one word per line as a digit string; '#' starts a
// comment. Lines must have equal length and be pairwise distinct.
BlockCode parse_code_text(const std::string& text);
BlockCode load_code(const std::string& path);
void save_code(const BlockCode& code, const std::string& path);

}  // namespace cqx
