#pragma once

#include <array>
#include <vector>

#include "gbi/linalg.hpp"

namespace gbi {

// Spin quantum number held exactly as 2s, so 3/2 is twice=3 and never a
// rounded 1.5.
struct HalfInteger {
    int twice = 1;

    HalfInteger() = default;
    explicit HalfInteger(int twice_value);

    double value() const { return 0.5 * twice; }
    bool is_integer() const { return twice % 2 == 0; }
    bool is_half_integer() const { return twice % 2 != 0; }
    std::size_t dim() const { return static_cast<std::size_t>(twice) + 1; }  // 2s+1

    friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice == b.twice; }
};

// Unit measurement direction. theta in [0, pi]; phi reduced to [0, 2pi).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    Direction() = default;
    Direction(double theta_rad, double phi_rad);
};

// reduce an angle to [0, 2pi); exact for inputs that are already in range
double reduce_angle(double phi);

// The two extremal spin coherent states along a direction. Components are
// ordered m = +s .. -s. `plus` carries the north-pole phase convention
// exp(i (s-m) phi), `minus` the south-pole one exp(i (s-m) (phi+pi)); the
// relative phase between the gauges is what produces the (-1)^{2s} factor
// in the cross correlations downstream, so it is built from the closed
// binomial formula and never from the eigensolver.
struct ScsPair {
    StateVector plus;
    StateVector minus;
    Direction direction;
    HalfInteger spin;
};

// {Sx, Sy, Sz} for spin s, dim 2s+1, Sz = diag(s, s-1, ..., -s).
std::array<ComplexMatrix, 3> spin_operators(HalfInteger s);

// s . r for a unit direction r(theta, phi).
ComplexMatrix projection_operator(HalfInteger s, const Direction& r);

ScsPair scs_pair(HalfInteger s, const Direction& r);

struct EigenState {
    double m;  // eigenvalue of s.r, one of +s .. -s
    StateVector vec;
};

// All 2s+1 eigenstates of s.r, ordered m descending (+s first). Phases are
// fixed so the largest-magnitude component is real positive; extremal
// members match scs_pair only up to such a phase.
std::vector<EigenState> rotated_eigenbasis(HalfInteger s, const Direction& r);

}  // namespace gbi
