#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gbi/linalg.hpp"
#include "test_support.hpp"

using gbi::ComplexMatrix;
using gbi::cplx;
using gbi::StateVector;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& g, std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = cplx(2.0 * ts::urand(g) - 1.0, 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx z(2.0 * ts::urand(g) - 1.0, 2.0 * ts::urand(g) - 1.0);
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

double reconstruction_error(const ComplexMatrix& m, const gbi::EigenDecomposition& ed) {
    const std::size_t n = m.rows;
    ComplexMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        StateVector v(n);
        for (std::size_t i = 0; i < n; ++i) v.a[i] = ed.vectors(i, k);
        rebuilt = rebuilt + (cplx(ed.values[k], 0.0) * gbi::outer(v, v));
    }
    return (rebuilt - m).frobenius_norm();
}

}  // namespace

TEST_CASE("identity, adjoint, hermitian flag") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(id(0, 0) == cplx(1.0, 0.0));
    CHECK(id(0, 1) == cplx(0.0, 0.0));
    CHECK(id.is_hermitian());

    ComplexMatrix m(2, 2);
    m(0, 0) = {1.0, 0.0};
    m(0, 1) = {0.0, 1.0};
    m(1, 0) = {0.0, -1.0};
    m(1, 1) = {1.0, 0.0};
    CHECK(m.is_hermitian());
    const ComplexMatrix mh = m.adjoint();
    CHECK((mh - m).frobenius_norm() == doctest::Approx(0.0));

    m(1, 0) = {0.0, 1.0};
    CHECK_FALSE(m.is_hermitian());
}

TEST_CASE("matrix product and trace_product agree") {
    auto g = ts::rng(1);
    const std::size_t n = 5;
    const ComplexMatrix a = random_hermitian(g, n);
    const ComplexMatrix b = random_hermitian(g, n);
    const ComplexMatrix ab = a * b;
    cplx tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += ab(i, i);
    const cplx tp = gbi::trace_product(a, b);
    CHECK(std::abs(tr - tp) < 1e-12);
}

TEST_CASE("kron of sz/2 with itself is diag(1/4,-1/4,-1/4,1/4)") {
    ComplexMatrix sz(2, 2);
    sz(0, 0) = {0.5, 0.0};
    sz(1, 1) = {-0.5, 0.0};
    const ComplexMatrix k = gbi::kron(sz, sz);
    REQUIRE(k.rows == 4);
    const double want[4] = {0.25, -0.25, -0.25, 0.25};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(k(i, i).real() == doctest::Approx(want[i]));
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(k(i, j)) == 0.0);
    }
}

TEST_CASE("trace of cat density against sz x sz is 1/4") {
    // |psi> = (|++> + |-->)/sqrt2, rho = |psi><psi|
    StateVector psi(4);
    psi.a[0] = 1.0 / std::sqrt(2.0);
    psi.a[3] = 1.0 / std::sqrt(2.0);
    const ComplexMatrix rho = gbi::outer(psi, psi);
    ComplexMatrix sz(2, 2);
    sz(0, 0) = {0.5, 0.0};
    sz(1, 1) = {-0.5, 0.0};
    const cplx t = gbi::trace_product(rho, gbi::kron(sz, sz));
    CHECK(t.real() == doctest::Approx(0.25));
    CHECK(t.imag() == doctest::Approx(0.0));
}

TEST_CASE("kron dimensions and mixed-shape structure") {
    ComplexMatrix a(2, 3);
    ComplexMatrix b(3, 2);
    for (std::size_t i = 0; i < a.a.size(); ++i) a.a[i] = cplx(double(i + 1), 0.0);
    for (std::size_t i = 0; i < b.a.size(); ++i) b.a[i] = cplx(0.0, double(i));
    const ComplexMatrix k = gbi::kron(a, b);
    CHECK(k.rows == 6);
    CHECK(k.cols == 6);
    CHECK(k(0, 0) == a(0, 0) * b(0, 0));
    CHECK(k(2, 1) == a(0, 0) * b(2, 1));
    CHECK(k(5, 5) == a(1, 2) * b(2, 1));
}

TEST_CASE("kron respects the dimension cap") {
    const ComplexMatrix big = ComplexMatrix::identity(64);
    CHECK_NOTHROW(gbi::kron(big, big, 4096));
    CHECK_THROWS_AS(gbi::kron(big, big, 4095), gbi::dimension_cap_error);

    StateVector v(64);
    CHECK_NOTHROW(gbi::kron(v, v, 4096));
    CHECK_THROWS_AS(gbi::kron(v, v, 4095), gbi::dimension_cap_error);
}

TEST_CASE("vector kron, inner, outer basics") {
    StateVector x(2), y(2);
    x.a = {cplx(1.0, 0.0), cplx(0.0, 1.0)};
    y.a = {cplx(0.5, 0.0), cplx(0.5, 0.0)};
    const StateVector k = gbi::kron(x, y);
    REQUIRE(k.dim == 4);
    CHECK(k.a[0] == cplx(0.5, 0.0));
    CHECK(k.a[3] == cplx(0.0, 0.5));

    CHECK(std::abs(gbi::inner(x, x) - cplx(2.0, 0.0)) < 1e-15);
    // conjugate-linear in the first slot
    CHECK(std::abs(gbi::inner(x, y) - (0.5 + cplx(0.0, -1.0) * 0.5)) < 1e-15);

    const ComplexMatrix o = gbi::outer(x, y);
    CHECK(o(1, 1) == cplx(0.0, 1.0) * std::conj(cplx(0.5, 0.0)));
}

TEST_CASE("hermitian_eigen on a known 2x2") {
    ComplexMatrix m(2, 2);
    m(0, 0) = {1.0, 0.0};
    m(0, 1) = {0.0, 1.0};
    m(1, 0) = {0.0, -1.0};
    m(1, 1) = {1.0, 0.0};
    const auto ed = gbi::hermitian_eigen(m);
    REQUIRE(ed.values.size() == 2);
    CHECK(ed.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ed.values[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(reconstruction_error(m, ed) < 1e-12);
}

TEST_CASE("hermitian_eigen reconstructs random matrices up to dim 64") {
    auto g = ts::rng(2);
    for (std::size_t n : {2u, 3u, 8u, 16u, 33u, 64u}) {
        const ComplexMatrix m = random_hermitian(g, n);
        const auto ed = gbi::hermitian_eigen(m);
        CHECK(reconstruction_error(m, ed) < 1e-9);
        for (std::size_t k = 0; k + 1 < n; ++k) CHECK(ed.values[k] <= ed.values[k + 1]);

        // columns orthonormal
        for (std::size_t k = 0; k < n; ++k) {
            StateVector vk(n), v0(n);
            for (std::size_t i = 0; i < n; ++i) {
                vk.a[i] = ed.vectors(i, k);
                v0.a[i] = ed.vectors(i, 0);
            }
            CHECK(std::abs(gbi::inner(vk, vk) - cplx(1.0, 0.0)) < 1e-10);
            if (k > 0) CHECK(std::abs(gbi::inner(v0, vk)) < 1e-10);
        }
    }
}

TEST_CASE("hermitian_eigen of a real diagonal returns the sorted diagonal") {
    ComplexMatrix m(4, 4);
    const double d[4] = {3.0, -1.0, 2.0, 0.5};
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = cplx(d[i], 0.0);
    const auto ed = gbi::hermitian_eigen(m);
    CHECK(ed.values[0] == doctest::Approx(-1.0));
    CHECK(ed.values[1] == doctest::Approx(0.5));
    CHECK(ed.values[2] == doctest::Approx(2.0));
    CHECK(ed.values[3] == doctest::Approx(3.0));
}

TEST_CASE("hermitian_eigen rejects bad input") {
    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(gbi::hermitian_eigen(rect), std::invalid_argument);

    ComplexMatrix skew(2, 2);
    skew(0, 1) = {1.0, 0.0};
    skew(1, 0) = {2.0, 0.0};
    CHECK_THROWS_AS(gbi::hermitian_eigen(skew), std::invalid_argument);
}

TEST_CASE("dimension mismatches throw") {
    ComplexMatrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(gbi::trace_product(a, a), std::invalid_argument);
    StateVector v(2);
    CHECK_THROWS_AS(a * v, std::invalid_argument);
    StateVector w(3);
    CHECK_THROWS_AS(gbi::inner(v, w), std::invalid_argument);
}
