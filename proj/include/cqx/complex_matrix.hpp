#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cqx {

using Complex = std::complex<double>;

// Tensor products refuse to grow past this unless the caller raises the cap.
inline constexpr std::size_t kDefaultDimCap = 4096;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
        return a_[i * dim_ + j];
    }

    std::vector<Complex>& data() noexcept { return a_; }
    const std::vector<Complex>& data() const noexcept { return a_; }

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

bool all_finite(const ComplexMatrix& m);

// max_ij |m_ij|
double max_abs(const ComplexMatrix& m);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix adjoint(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);

// Tr(a*b) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; throws DimensionOverflow above dim_cap.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t dim_cap = kDefaultDimCap);

// acc += w * m
void add_scaled(ComplexMatrix& acc, const ComplexMatrix& m, double w);

// Dense product kernels. matmul() splits output rows across OpenMP threads;
// each element is accumulated in the same order as the serial kernel, so the
// two return bitwise-identical results.
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cqx
