#pragma once

#include <cstdint>
#include <vector>

#include "gbi/correlation.hpp"

namespace gbi {

// 2n-1 measurement directions feeding one inequality evaluation.
struct DirectionSet {
    int n = 2;
    std::vector<Direction> dirs;

    DirectionSet(int particles, std::vector<Direction> directions);
};

// Index scheme over the 2n-1 direction labels: n sliding windows of length
// n, window k = (k, ..., k+n-1), plus the odd-label tuple (0, 2, ..., 2n-2).
// Indices are 0-based.
struct WindowScheme {
    std::vector<std::vector<int>> windows;
    std::vector<int> odd;
};

WindowScheme windows(int n);

// Which correlation enters the inequality: the mixture part only (the
// classical side), the full normalized correlation, or the post-selection
// scaled one.
enum class Functional { LocalOnly, FullQuantum, ScaledQuantum };

inline constexpr double violation_threshold = 1e-9;

struct GbiReport {
    std::vector<double> window_values;
    double odd_value = 0.0;
    double lhs = 1.0;   // product of window values
    double rhs = 0.0;   // |odd_value|
    double p_gb = 0.0;  // lhs - rhs; positive means violation
    bool violated = false;
};

GbiReport evaluate_gbi(const CatState& cat, const DirectionSet& ds, MeasurementMode mode,
                       Functional which, std::size_t dim_cap = default_dim_cap);

// The textbook maximum-violation recipe: xi = eta = pi/4, every theta =
// pi/2, azimuths zero except the even-label ones listed below. Violation
// requires half-integer s; integer s is rejected.
//   odd n:  phi at labels n-1 and n+1 set to 3 pi / (8 s), bound 1/2
//   even n: phi at every even label set to pi / (2 n s), bound 1
struct AnalyticMaxConfig {
    CatState cat;
    DirectionSet ds;
    double bound;
};

AnalyticMaxConfig analytic_max_config(int n, HalfInteger s);

struct OptimizerConfig {
    int restarts = 32;
    int max_iterations = 3000;   // per restart
    std::uint64_t seed = 20240811;
    double convergence_tol = 1e-12;
};

// AnglesOnly frees the 2n-1 azimuths; AnglesAndState additionally frees
// xi and eta. Polar angles stay at pi/2 in both: that is where the scaled
// correlation is a bona fide +-1 statistic, and freeing theta lets integer
// spins fake violations through vanishing post-selection probability.
enum class FreeParameters { AnglesOnly, AnglesAndState };

struct MaximizeResult {
    double best_p_gb = 0.0;
    std::vector<double> phis;  // canonicalized to [0, 2pi)
    double xi = 0.0;
    double eta = 0.0;
    GbiReport report;
};

// Multi-start Nelder-Mead over the free parameters; deterministic for a
// fixed seed. One restart warm-starts at the analytic recipe whenever that
// configuration is feasible. Ties within 1e-12 resolve to the
// lexicographically smallest canonical angle vector.
MaximizeResult maximize_violation(int n, HalfInteger s, MeasurementMode mode,
                                  const OptimizerConfig& cfg = {},
                                  FreeParameters free = FreeParameters::AnglesOnly);

struct ParityRow {
    int n;
    HalfInteger s;
    double max_p_gb;
    bool violated;
};

std::vector<ParityRow> parity_scan(const std::vector<int>& particle_counts,
                                   const std::vector<HalfInteger>& spins, MeasurementMode mode,
                                   const OptimizerConfig& cfg = {});

}  // namespace gbi
