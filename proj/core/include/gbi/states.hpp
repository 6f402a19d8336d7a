#pragma once

#include <vector>

#include "gbi/linalg.hpp"
#include "gbi/spin.hpp"

namespace gbi {

// n-party cat state c1 |+s>^n + c2 |-s>^n with c1 = e^{i eta} sin(xi),
// c2 = e^{-i eta} cos(xi).
struct CatState {
    int n = 2;
    HalfInteger s;
    double xi = 0.0;
    double eta = 0.0;
    cplx c1{1.0, 0.0};
    cplx c2{0.0, 0.0};
};

CatState make_cat_state(int n, HalfInteger s, double xi, double eta);

// rho = |psi><psi| split into the diagonal (mixture) dyads and the cross
// (interference) dyads, kept as four weights on product-ket outer products:
//   local    = w_plus_plus |+>< +| + w_minus_minus |-><-|
//   nonlocal = w_plus_minus |+><-| + w_minus_plus |-><+|
// where |+> and |-> are the n-fold product components.
struct DensityParts {
    double w_plus_plus = 0.0;   // sin^2 xi
    double w_minus_minus = 0.0; // cos^2 xi
    cplx w_plus_minus{0.0, 0.0};  // c1 * conj(c2) = e^{i 2 eta} sin(xi) cos(xi)
    cplx w_minus_plus{0.0, 0.0};
};

DensityParts density_parts(const CatState& cat);

// < kets_1 x ... x kets_n | psi >; one ket per particle, each of dim 2s+1,
// components ordered m = +s .. -s.
cplx amplitude_in_basis(const CatState& cat, const std::vector<StateVector>& site_kets);

// Brute-force materializations for cross-checks; dimension (2s+1)^n capped.
std::size_t full_dimension(const CatState& cat, std::size_t dim_cap = default_dim_cap);
StateVector materialize_state(const CatState& cat, std::size_t dim_cap = default_dim_cap);

struct MaterializedDensity {
    ComplexMatrix local;
    ComplexMatrix nonlocal;
};

MaterializedDensity materialize_density_parts(const CatState& cat,
                                              std::size_t dim_cap = default_dim_cap);

}  // namespace gbi
