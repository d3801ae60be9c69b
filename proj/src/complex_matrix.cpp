#include "cqx/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cqx/errors.hpp"

namespace cqx {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim * dim) {
        throw DimensionMismatch("ComplexMatrix: entry count " + std::to_string(a_.size()) +
                                " does not match dim " + std::to_string(dim));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool all_finite(const ComplexMatrix& m) {
    for (const Complex& z : m.data()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double max_abs(const ComplexMatrix& m) {
    double best = 0.0;
    for (const Complex& z : m.data()) best = std::max(best, std::abs(z));
    return best;
}

double hermiticity_defect(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(m(i, j));
    }
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("trace_product: dims " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
    const std::size_t n = a.dim();
    Complex t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
    }
    return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t dim_cap) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    if (na != 0 && na * nb / na != nb) {
        throw DimensionOverflow("tensor: dimension product overflows");
    }
    const std::size_t n = na * nb;
    if (n > dim_cap) {
        throw DimensionOverflow("tensor: dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(dim_cap));
    }
    ComplexMatrix out(n);
    for (std::size_t i1 = 0; i1 < na; ++i1) {
        for (std::size_t j1 = 0; j1 < na; ++j1) {
            const Complex aij = a(i1, j1);
            if (aij == Complex(0.0)) continue;
            for (std::size_t i2 = 0; i2 < nb; ++i2) {
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    out(i1 * nb + i2, j1 * nb + j2) = aij * b(i2, j2);
                }
            }
        }
    }
    return out;
}

void add_scaled(ComplexMatrix& acc, const ComplexMatrix& m, double w) {
    if (acc.dim() != m.dim()) {
        throw DimensionMismatch("add_scaled: dims " + std::to_string(acc.dim()) + " vs " +
                                std::to_string(m.dim()));
    }
    const std::size_t sz = acc.data().size();
    for (std::size_t k = 0; k < sz; ++k) acc.data()[k] += w * m.data()[k];
}

namespace {

// i-k-j accumulation; one output row per call so the parallel and serial
// drivers share the exact same floating-point order.
inline void matmul_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c,
                       std::size_t i) {
    const std::size_t n = a.dim();
    Complex* crow = &c.data()[i * n];
    for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        const Complex* brow = &b.data()[k * n];
        for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
}

}  // namespace

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matmul: dims " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
    ComplexMatrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) matmul_row(a, b, c, i);
    return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matmul: dims " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
#pragma omp parallel for schedule(static) if (n >= 64)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        matmul_row(a, b, c, static_cast<std::size_t>(i));
    }
    return c;
}

}  // namespace cqx
