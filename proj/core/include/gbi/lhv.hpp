#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gbi/gbi.hpp"

namespace gbi {

// Deterministic local model: every observer measuring direction a with
// hidden value lambda gets outcome_rule(a, lambda) in {-1, +1}. lambda is
// a 3-slot parameter; angle models use slot 0, sphere models all three.
struct LhvModel {
    std::string name;
    std::string description;
    std::function<int(const Direction&, const std::array<double, 3>&)> outcome_rule;
    std::function<std::array<double, 3>(std::mt19937_64&)> sample_lambda;
};

struct LhvEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

// RNG contract: std::mt19937_64 seeded per estimate, uniform doubles taken
// as (x >> 11) * 2^-53. Identical seeds give identical estimates bit for
// bit; sub-streams derive from a master seed via splitmix64.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);
double uniform01(std::mt19937_64& gen);

LhvEstimate lhv_correlation(const LhvModel& model, const std::vector<Direction>& dirs,
                            std::size_t samples, std::uint64_t seed);

// Monte-Carlo check of the classical window-product bound
//   prod_k <A(a_k)...A(a_{k+n-1})>  <=  |<A(a_1)A(a_3)...A(a_{2n-1})>|
// within 4 propagated standard errors. premise_ok reports (informationally)
// whether the odd-pair correlation and the covariance of the first window
// pair carry the same sign, the assumption behind the derivation's
// mean-to-product step.
struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double sigma = 0.0;   // propagated std error of lhs - rhs
    double margin = 0.0;  // rhs + 4 sigma - lhs
    bool holds = false;
    bool premise_ok = true;
    std::vector<LhvEstimate> window_estimates;
    LhvEstimate odd_estimate;
};

BoundCheck verify_classical_bound(const LhvModel& model, const DirectionSet& ds,
                                  std::size_t samples, std::uint64_t seed);

// Max LocalOnly p_GB over random configurations; the quantum mixture part
// must stay below the classical bound.
struct LocalBoundReport {
    double max_p_gb = 0.0;
    std::size_t trials = 0;
    bool ok = false;
};

LocalBoundReport local_part_is_lhv(int n, HalfInteger s, MeasurementMode mode, std::size_t trials,
                                   std::uint64_t seed);

// Built-in threshold family A(a, lambda) = sign(g(a) . h(lambda) - t).
LhvModel sign_cos_model();          // sign(cos(phi_a - lambda)), lambda ~ U[0, 2pi)
LhvModel sign_dot_model();          // sign(r(a) . lambda), lambda uniform on the sphere
LhvModel threshold_model(double t); // sign(cos(phi_a - lambda) - t)

const std::vector<LhvModel>& builtin_models();
const LhvModel* find_model(std::string_view name);

}  // namespace gbi
