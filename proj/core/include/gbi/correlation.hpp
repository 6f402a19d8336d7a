#pragma once

#include <vector>

#include "gbi/states.hpp"

namespace gbi {

// Full: project onto the complete eigenbasis of s.r at every site.
// RestrictedSCS: keep only the extremal +-s outcomes (post-selected).
enum class MeasurementMode { Full, RestrictedSCS };

// Correlation split accompanying one direction set. `local`/`nonlocal` come
// from the mixture/interference density parts, normalized so outcomes are
// +-1; `total` is their sum. `subspace_norm` is the post-selection
// probability (1 in Full mode) and `scaled_total` = total / subspace_norm.
struct CorrelationBreakdown {
    double local = 0.0;
    double nonlocal = 0.0;
    double total = 0.0;
    double subspace_norm = 1.0;
    double scaled_total = 0.0;
};

// Sign pattern of one restricted outcome: bit i of `index` set means site i
// measured -s. parity_sign is +1 for an even number of -s outcomes.
struct OutcomeBasis {
    unsigned index = 0;
    int parity_sign = 1;
};

OutcomeBasis outcome_basis(unsigned index, int n);

CorrelationBreakdown correlation_oracle_full(const CatState& cat,
                                             const std::vector<Direction>& dirs,
                                             std::size_t dim_cap = default_dim_cap);

CorrelationBreakdown correlation_restricted(const CatState& cat,
                                            const std::vector<Direction>& dirs);

CorrelationBreakdown correlate(const CatState& cat, const std::vector<Direction>& dirs,
                               MeasurementMode mode, std::size_t dim_cap = default_dim_cap);

// Diagonal of rho in the 2^n restricted product basis, split into mixture
// and interference parts; index convention as OutcomeBasis.
struct RestrictedDiagonal {
    std::vector<double> local;
    std::vector<double> nonlocal;
};

RestrictedDiagonal restricted_diagonal(const CatState& cat, const std::vector<Direction>& dirs);

// Product closed forms. Local: odd n -> -cos(2 xi) * prod f(theta_i),
// even n -> prod f(theta_i), with f = cos(theta) in Full mode (s=1/2 only)
// and f = K^{4s} - Gamma^{4s} in RestrictedSCS mode.
double closed_form_local(int n, HalfInteger s, double xi, const std::vector<Direction>& dirs,
                         MeasurementMode mode);

// Nonlocal: Full s=1/2 -> sin(2 xi) prod sin(theta_i) cos(sum phi + 2 eta);
// Full s>1/2 -> 0; RestrictedSCS half-integer s ->
// 2^{-n(2s-1)} sin(2 xi) prod sin^{2s}(theta_i) cos(2s sum phi + 2 eta);
// RestrictedSCS integer s -> 0.
double closed_form_nonlocal(int n, HalfInteger s, double xi, double eta,
                            const std::vector<Direction>& dirs, MeasurementMode mode);

// (-1)^{2s}: the geometric phase picked up between the two coherent-state
// gauges. -1 for half-integer spin, +1 for integer spin.
int berry_phase_factor(HalfInteger s);

}  // namespace gbi
