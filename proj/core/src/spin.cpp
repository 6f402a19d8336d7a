#include "gbi/spin.hpp"

#include <cmath>
#include <numbers>

namespace gbi {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// x^k with 0^0 = 1
double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// exact for 2s up to ~60
double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return static_cast<double>(r);
}

}  // namespace

HalfInteger::HalfInteger(int twice_value) : twice(twice_value) {
    if (twice_value < 1) throw std::invalid_argument("spin: twice_value must be >= 1");
}

double reduce_angle(double phi) {
    double r = std::remainder(phi, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    if (r == 0.0) r = 0.0;  // normalize -0.0
    return r;
}

Direction::Direction(double theta_rad, double phi_rad) {
    if (!std::isfinite(theta_rad) || !std::isfinite(phi_rad))
        throw std::invalid_argument("direction: angles must be finite");
    if (theta_rad < 0.0 || theta_rad > std::numbers::pi)
        throw std::invalid_argument("direction: theta must lie in [0, pi]");
    theta = theta_rad;
    phi = reduce_angle(phi_rad);
}

std::array<ComplexMatrix, 3> spin_operators(HalfInteger s) {
    const std::size_t d = s.dim();
    const double sv = s.value();
    ComplexMatrix sx(d, d), sy(d, d), sz(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double m = sv - static_cast<double>(k);
        sz(k, k) = m;
        if (k >= 1) {
            // <m+1| S+ |m> with m = sv - k
            const double val = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
            sx(k - 1, k) = 0.5 * val;
            sx(k, k - 1) = 0.5 * val;
            sy(k - 1, k) = cplx(0.0, -0.5 * val);
            sy(k, k - 1) = cplx(0.0, 0.5 * val);
        }
    }
    return {sx, sy, sz};
}

ComplexMatrix projection_operator(HalfInteger s, const Direction& r) {
    const std::size_t d = s.dim();
    const double sv = s.value();
    const double st = std::sin(r.theta), ct = std::cos(r.theta);
    const cplx em = std::polar(1.0, -r.phi);  // e^{-i phi}
    ComplexMatrix p(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double m = sv - static_cast<double>(k);
        p(k, k) = ct * m;
        if (k >= 1) {
            const double val = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
            p(k - 1, k) = 0.5 * st * val * em;
            p(k, k - 1) = std::conj(p(k - 1, k));
        }
    }
    return p;
}

ScsPair scs_pair(HalfInteger s, const Direction& r) {
    const int twos = s.twice;
    const std::size_t d = s.dim();
    const double K = std::cos(0.5 * r.theta);
    const double G = std::sin(0.5 * r.theta);

    ScsPair pair;
    pair.direction = r;
    pair.spin = s;
    pair.plus = StateVector(d);
    pair.minus = StateVector(d);
    for (int k = 0; k <= twos; ++k) {
        // component m = s - k
        const double w = std::sqrt(binomial(twos, k));
        pair.plus.a[k] = w * ipow(K, twos - k) * ipow(G, k) * std::polar(1.0, k * r.phi);
        pair.minus.a[k] =
            w * ipow(K, k) * ipow(G, twos - k) * std::polar(1.0, k * (r.phi + std::numbers::pi));
    }
    return pair;
}

std::vector<EigenState> rotated_eigenbasis(HalfInteger s, const Direction& r) {
    const auto eig = hermitian_eigen(projection_operator(s, r));
    const std::size_t d = s.dim();

    std::vector<EigenState> basis;
    basis.reserve(d);
    // hermitian_eigen sorts ascending; emit m descending
    for (std::size_t k = d; k-- > 0;) {
        EigenState e;
        e.m = 0.5 * std::round(2.0 * eig.values[k]);  // snap to the half-integer grid
        e.vec = StateVector(d);
        for (std::size_t i = 0; i < d; ++i) e.vec.a[i] = eig.vectors(i, k);

        // gauge: largest component real positive
        std::size_t imax = 0;
        double amax = -1.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double m2 = std::norm(e.vec.a[i]);
            if (m2 > amax) {
                amax = m2;
                imax = i;
            }
        }
        if (amax > 0.0) {
            const cplx ph = e.vec.a[imax] / std::abs(e.vec.a[imax]);
            for (auto& z : e.vec.a) z /= ph;
        }
        basis.push_back(std::move(e));
    }
    return basis;
}

}  // namespace gbi
