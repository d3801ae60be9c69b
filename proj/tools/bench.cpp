// Compares the OpenMP kernels against their serial reference
// implementations and reports timings and speedups.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cqx/code_analysis.hpp"
#include "cqx/complex_matrix.hpp"

namespace {

using namespace cqx;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim);
    for (auto& z : m.data()) z = Complex(gauss(rng), gauss(rng));
    return m;
}

BlockCode random_code(std::size_t n, std::size_t m_count, std::mt19937_64& rng) {
    std::vector<Word> words;
    words.reserve(m_count);
    std::set<Word> seen;
    while (words.size() < m_count) {
        Word w(n);
        for (auto& s : w) s = static_cast<std::uint8_t>(rng() & 1u);
        if (seen.insert(w).second) words.push_back(w);
    }
    return BlockCode(2, std::move(words));
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = clock_type::now();
        body();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n\n");
#endif
    std::mt19937_64 rng(2024);

    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [ms]", "parallel [ms]", "speedup");
    for (std::size_t dim : {128, 256, 384}) {
        const ComplexMatrix a = random_matrix(dim, rng);
        const ComplexMatrix b = random_matrix(dim, rng);
        double checksum = 0.0;
        const double ts = time_best_of(3, [&] { checksum += max_abs(matmul_serial(a, b)); });
        const double tp = time_best_of(3, [&] { checksum += max_abs(matmul(a, b)); });
        std::printf("%-21s dim=%-3zu  %12.2f %12.2f %8.2f\n", "matmul", dim, ts * 1e3, tp * 1e3,
                    ts / tp);
        if (checksum < 0.0) std::printf("?\n");  // keep the results alive
    }

    for (std::size_t m_count : {512, 1024, 2048}) {
        const BlockCode code = random_code(64, m_count, rng);
        double checksum = 0.0;
        const double ts =
            time_best_of(3, [&] { checksum += average_multiplicity_serial(code).counts[1]; });
        const double tp =
            time_best_of(3, [&] { checksum += average_multiplicity(code).counts[1]; });
        std::printf("%-21s M=%-5zu  %12.2f %12.2f %8.2f\n", "average_multiplicity", m_count,
                    ts * 1e3, tp * 1e3, ts / tp);
        if (checksum < 0.0) std::printf("?\n");
    }
    return 0;
}
