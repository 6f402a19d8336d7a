#include "gbi/states.hpp"

#include <cmath>

namespace gbi {

CatState make_cat_state(int n, HalfInteger s, double xi, double eta) {
    if (n < 2) throw std::invalid_argument("cat state needs n >= 2 particles");
    if (!std::isfinite(xi) || !std::isfinite(eta))
        throw std::invalid_argument("cat state: xi, eta must be finite");
    CatState cat;
    cat.n = n;
    cat.s = s;
    cat.xi = xi;
    cat.eta = eta;
    const cplx phase = std::exp(cplx(0.0, eta));
    cat.c1 = phase * std::sin(xi);
    cat.c2 = std::conj(phase) * std::cos(xi);
    return cat;
}

DensityParts density_parts(const CatState& cat) {
    DensityParts p;
    p.w_plus_plus = std::norm(cat.c1);
    p.w_minus_minus = std::norm(cat.c2);
    p.w_plus_minus = cat.c1 * std::conj(cat.c2);
    p.w_minus_plus = std::conj(p.w_plus_minus);
    return p;
}

cplx amplitude_in_basis(const CatState& cat, const std::vector<StateVector>& site_kets) {
    if (static_cast<int>(site_kets.size()) != cat.n)
        throw std::invalid_argument("amplitude_in_basis: one ket per particle required");
    const std::size_t d = cat.s.dim();
    cplx amp_plus = 1.0, amp_minus = 1.0;
    for (const StateVector& ket : site_kets) {
        if (ket.dim != d)
            throw std::invalid_argument("amplitude_in_basis: ket dimension mismatch");
        amp_plus *= std::conj(ket.a.front());  // <ket|+s>
        amp_minus *= std::conj(ket.a.back());  // <ket|-s>
    }
    return cat.c1 * amp_plus + cat.c2 * amp_minus;
}

std::size_t full_dimension(const CatState& cat, std::size_t dim_cap) {
    std::size_t dim = 1;
    const std::size_t d = cat.s.dim();
    for (int i = 0; i < cat.n; ++i) {
        if (dim > dim_cap / d)
            throw dimension_cap_error("full Hilbert space dimension exceeds cap " +
                                      std::to_string(dim_cap));
        dim *= d;
    }
    if (dim > dim_cap)
        throw dimension_cap_error("full Hilbert space dimension exceeds cap " +
                                  std::to_string(dim_cap));
    return dim;
}

StateVector materialize_state(const CatState& cat, std::size_t dim_cap) {
    const std::size_t dim = full_dimension(cat, dim_cap);
    StateVector psi(dim);
    psi.a.front() += cat.c1;  // |+s>^n is the first computational index
    psi.a.back() += cat.c2;   // |-s>^n the last
    return psi;
}

MaterializedDensity materialize_density_parts(const CatState& cat, std::size_t dim_cap) {
    const std::size_t dim = full_dimension(cat, dim_cap);
    const DensityParts w = density_parts(cat);
    StateVector plus(dim), minus(dim);
    plus.a.front() = 1.0;
    minus.a.back() = 1.0;

    MaterializedDensity out;
    out.local = cplx(w.w_plus_plus) * outer(plus, plus) + cplx(w.w_minus_minus) * outer(minus, minus);
    out.nonlocal = w.w_plus_minus * outer(plus, minus) + w.w_minus_plus * outer(minus, plus);
    return out;
}

}  // namespace gbi
