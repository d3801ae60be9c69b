#include "cqx/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cqx/errors.hpp"

namespace cqx {

namespace {

double off_diagonal_max(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            worst = std::max(worst, std::abs(a(p, q)));
        }
    }
    return worst;
}

// One complex Jacobi rotation in the (p, q) plane, annihilating a(p, q).
// a <- J^H a J and v <- v J with J[p][p] = J[q][q] = cos, J[p][q] = s,
// J[q][p] = -conj(s).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const double g = std::abs(a(p, q));
    if (g == 0.0) return;
    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    // Annihilation condition: t^2 - 2 theta t - 1 = 0; take the root of
    // smaller magnitude for a rotation angle below pi/4.
    const double theta = (alpha - beta) / (2.0 * g);
    const double sign = theta >= 0.0 ? 1.0 : -1.0;
    const double t = -sign / (std::abs(theta) + std::hypot(theta, 1.0));
    const double cos = 1.0 / std::sqrt(1.0 + t * t);
    const double sigma = t * cos;
    const Complex phase = a(p, q) / g;
    const Complex s = sigma * phase;
    const Complex sc = std::conj(s);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex ap = a(p, k);
        const Complex aq = a(q, k);
        a(p, k) = cos * ap - s * aq;
        a(q, k) = sc * ap + cos * aq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex ap = a(k, p);
        const Complex aq = a(k, q);
        a(k, p) = cos * ap - sc * aq;
        a(k, q) = s * ap + cos * aq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vp = v(k, p);
        const Complex vq = v(k, q);
        v(k, p) = cos * vp - sc * vq;
        v(k, q) = s * vp + cos * vq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

HermitianSpectrum eigh(const ComplexMatrix& m) {
    if (!all_finite(m)) throw ValidationError("eigh: non-finite entries");
    const double scale = max_abs(m);
    if (hermiticity_defect(m) > 1e-9 * std::max(1.0, scale)) {
        throw NotHermitian("eigh: matrix is not Hermitian within tolerance");
    }

    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    // Symmetrize roundoff so the working copy is exactly Hermitian.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }

    const double tol = 1e-14 * std::max(1.0, scale);
    const int max_sweeps = 60;
    bool converged = n < 2;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        if (off_diagonal_max(a) <= tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > tol * 1e-2) rotate(a, v, p, q);
            }
        }
    }
    if (!converged && off_diagonal_max(a) > tol) {
        throw NoConvergence("eigh: Jacobi sweep budget exhausted");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix spectral_transform(const HermitianSpectrum& s, const std::vector<double>& mapped) {
    const std::size_t n = s.eigenvectors.dim();
    if (mapped.size() != n) {
        throw DimensionMismatch("spectral_transform: need one mapped value per eigenvalue");
    }
    ComplexMatrix scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) scaled(i, k) = s.eigenvectors(i, k) * mapped[k];
    }
    return matmul(scaled, adjoint(s.eigenvectors));
}

namespace {

// Spectral norm and PSD precondition shared by the power functions.
HermitianSpectrum psd_spectrum(const ComplexMatrix& m, const char* who) {
    HermitianSpectrum s = eigh(m);
    if (s.eigenvalues.empty()) return s;
    const double lambda_max = s.eigenvalues.front();
    const double lambda_min = s.eigenvalues.back();
    const double norm = std::max(std::abs(lambda_max), std::abs(lambda_min));
    if (lambda_min < -1e-10 * std::max(1e-300, norm)) {
        throw NotPsd(std::string(who) + ": eigenvalue " + std::to_string(lambda_min) +
                     " below PSD tolerance");
    }
    return s;
}

}  // namespace

ComplexMatrix mat_power(const ComplexMatrix& m, double exponent) {
    if (!(exponent > 0.0)) throw OutOfRange("mat_power: exponent must be positive");
    HermitianSpectrum s = psd_spectrum(m, "mat_power");
    const double lambda_max = s.eigenvalues.empty() ? 0.0 : std::max(0.0, s.eigenvalues.front());
    const double cutoff = kRoundoffFloor * lambda_max;
    std::vector<double> mapped(s.eigenvalues.size());
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        const double lambda = s.eigenvalues[k];
        mapped[k] = lambda > cutoff ? std::pow(lambda, exponent) : 0.0;
    }
    return spectral_transform(s, mapped);
}

ComplexMatrix pinv_sqrt(const ComplexMatrix& m) {
    HermitianSpectrum s = psd_spectrum(m, "pinv_sqrt");
    const double lambda_max = s.eigenvalues.empty() ? 0.0 : std::max(0.0, s.eigenvalues.front());
    const double cutoff = kNullspaceCutoff * lambda_max;
    std::vector<double> mapped(s.eigenvalues.size());
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        const double lambda = s.eigenvalues[k];
        mapped[k] = lambda > cutoff ? 1.0 / std::sqrt(lambda) : 0.0;
    }
    return spectral_transform(s, mapped);
}

}  // namespace cqx
