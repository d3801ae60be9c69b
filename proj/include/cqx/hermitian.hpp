#pragma once

#include <vector>

#include "cqx/complex_matrix.hpp"

namespace cqx {

// Support decisions (inverse square roots, projectors) treat eigenvalues
// below kNullspaceCutoff * lambda_max as exact zeros.
inline constexpr double kNullspaceCutoff = 1e-10;

// Positive powers only truncate eigenvalues that are indistinguishable from
// zero at working precision; sqrt of a genuinely small eigenvalue is still
// far larger than roundoff and must be kept.
inline constexpr double kRoundoffFloor = 1e-13;

struct HermitianSpectrum {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
// Requires |m - m^H|_max <= 1e-9 * max(1, |m|_max), else NotHermitian.
HermitianSpectrum eigh(const ComplexMatrix& m);

// V diag(mapped) V^H for an already computed spectrum.
ComplexMatrix spectral_transform(const HermitianSpectrum& s, const std::vector<double>& mapped);

// Spectral power of a PSD matrix, exponent > 0; null eigenvalues stay null.
// Throws NotPsd when lambda_min < -1e-10 * |m|_2.
ComplexMatrix mat_power(const ComplexMatrix& m, double exponent);

// Pseudo-inverse square root on the support of a PSD matrix.
ComplexMatrix pinv_sqrt(const ComplexMatrix& m);

}  // namespace cqx
