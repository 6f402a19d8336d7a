#include "gbi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gbi {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i; j < cols; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix add: dimension mismatch");
    ComplexMatrix r(a.rows, a.cols);
    for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = a.a[k] + b.a[k];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix sub: dimension mismatch");
    ComplexMatrix r(a.rows, a.cols);
    for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = a.a[k] - b.a[k];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix mul: dimension mismatch");
    ComplexMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& m) {
    ComplexMatrix r(m.rows, m.cols);
    for (std::size_t k = 0; k < m.a.size(); ++k) r.a[k] = scale * m.a[k];
    return r;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& z : a) s += std::norm(z);
    return std::sqrt(s);
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
    if (m.cols != v.dim) throw std::invalid_argument("matvec: dimension mismatch");
    StateVector r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * v.a[j];
        r.a[i] = s;
    }
    return r;
}

cplx inner(const StateVector& x, const StateVector& y) {
    if (x.dim != y.dim) throw std::invalid_argument("inner: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.dim; ++i) s += std::conj(x.a[i]) * y.a[i];
    return s;
}

ComplexMatrix outer(const StateVector& x, const StateVector& y) {
    ComplexMatrix m(x.dim, y.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < y.dim; ++j) m(i, j) = x.a[i] * std::conj(y.a[j]);
    return m;
}

namespace {

// overflow-safe x*y <= cap check
std::size_t capped_mul(std::size_t x, std::size_t y, std::size_t cap) {
    if (x != 0 && y > cap / x)
        throw dimension_cap_error("kron: result dimension exceeds cap " + std::to_string(cap));
    return x * y;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t dim_cap) {
    const std::size_t R = capped_mul(a.rows, b.rows, dim_cap);
    const std::size_t C = capped_mul(a.cols, b.cols, dim_cap);
    ComplexMatrix r(R, C);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const cplx aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    r(i * b.rows + k, j * b.cols + l) = aij * b(k, l);
        }
    return r;
}

StateVector kron(const StateVector& x, const StateVector& y, std::size_t dim_cap) {
    const std::size_t D = capped_mul(x.dim, y.dim, dim_cap);
    StateVector r(D);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < y.dim; ++j) r.a[i * y.dim + j] = x.a[i] * y.a[j];
    return r;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows || a.rows != b.cols)
        throw std::invalid_argument("trace_product: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) s += a(i, k) * b(k, i);
    return s;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double hermiticity_tol) {
    if (m.rows != m.cols) throw std::invalid_argument("hermitian_eigen: matrix not square");
    if (!m.is_hermitian(hermiticity_tol))
        throw std::invalid_argument("hermitian_eigen: matrix not Hermitian within tolerance");

    const std::size_t n = m.rows;
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    const double stop = 1e-14 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
        if (off_diagonal_norm(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = a(p, q);
                const double absg = std::abs(g);
                if (absg <= 1e-300) continue;
                const cplx w = g / absg;
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double tau = (beta - alpha) / (2.0 * absg);
                // small-|t| root of t^2 - 2*tau*t - 1 = 0, written so large
                // |tau| cannot cancel to an identity rotation
                const double t =
                    (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- V^dag A V with the plane rotation [[c, -s*w], [s*conj(w), c]]
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(w) * aiq;
                    a(i, q) = -s * w * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * w * aqj;
                    a(q, j) = -s * std::conj(w) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);

                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(w) * viq;
                    v(i, q) = -s * w * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace gbi
