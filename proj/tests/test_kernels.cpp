#include <random>

#include "cqx/code_analysis.hpp"
#include "cqx/complex_matrix.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cqx;

TEST_CASE("parallel matmul is bitwise identical to the serial kernel") {
    std::mt19937_64 rng(131);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t dim : {1, 2, 7, 16, 33, 64, 96, 129}) {
        ComplexMatrix a(dim);
        ComplexMatrix b(dim);
        for (auto& z : a.data()) z = Complex(gauss(rng), gauss(rng));
        for (auto& z : b.data()) z = Complex(gauss(rng), gauss(rng));
        const ComplexMatrix fast = matmul(a, b);
        const ComplexMatrix slow = matmul_serial(a, b);
        CHECK(fast.data() == slow.data());
    }
}

TEST_CASE("matmul against known products") {
    ComplexMatrix a(2);
    a(0, 0) = Complex(1, 1);
    a(0, 1) = 2.0;
    a(1, 0) = 0.0;
    a(1, 1) = Complex(0, -1);
    ComplexMatrix b(2);
    b(0, 0) = 3.0;
    b(0, 1) = Complex(0, 1);
    b(1, 0) = 1.0;
    b(1, 1) = 1.0;

    const ComplexMatrix c = matmul_serial(a, b);
    CHECK(c(0, 0) == Complex(5, 3));   // (1+i)*3 + 2*1
    CHECK(c(0, 1) == Complex(1, 1));   // (1+i)*i + 2
    CHECK(c(1, 0) == Complex(0, -1));  // 0*3 + (-i)*1
    CHECK(c(1, 1) == Complex(0, -1));  // 0*i + (-i)*1

    ComplexMatrix id_prod = matmul(ComplexMatrix::identity(5), ComplexMatrix::identity(5));
    add_scaled(id_prod, ComplexMatrix::identity(5), -1.0);
    CHECK(max_abs(id_prod) == 0.0);
}

TEST_CASE("parallel enumerator and union-bound paths match serial results") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 3; ++trial) {
        const auto code = test::random_code(2, 10, 40, rng);
        CHECK(average_multiplicity(code).counts == average_multiplicity_serial(code).counts);
    }
}
