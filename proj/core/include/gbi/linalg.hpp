#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gbi {

using cplx = std::complex<double>;

// Hard ceiling on tensor dimensions for the brute-force paths. Overridable
// per call; the CLI reads GBI_DIM_CAP.
inline constexpr std::size_t default_dim_cap = 4096;

class dimension_cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense complex matrix, row-major.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> a;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ComplexMatrix identity(std::size_t n);

    ComplexMatrix adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;
    double frobenius_norm() const;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, const ComplexMatrix& m);

struct StateVector {
    std::size_t dim = 0;
    std::vector<cplx> a;

    StateVector() = default;
    explicit StateVector(std::size_t d) : dim(d), a(d) {}

    double norm() const;
};

StateVector operator*(const ComplexMatrix& m, const StateVector& v);

// <x|y>, conjugate-linear in the first argument.
cplx inner(const StateVector& x, const StateVector& y);

// |x><y|
ComplexMatrix outer(const StateVector& x, const StateVector& y);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t dim_cap = default_dim_cap);
StateVector kron(const StateVector& x, const StateVector& y,
                 std::size_t dim_cap = default_dim_cap);

// Tr(A*B) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic Jacobi for Hermitian matrices. Rejects input whose Hermiticity
// defect exceeds hermiticity_tol.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double hermiticity_tol = 1e-12);

}  // namespace gbi
