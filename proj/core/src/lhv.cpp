#include "gbi/lhv.hpp"

#include <cmath>
#include <numbers>

namespace gbi {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int sign_pm(double x) { return x >= 0.0 ? 1 : -1; }

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t state = master ^ (0xD6E8FEB86659FD93ULL * (stream + 1));
    std::uint64_t s = splitmix64(state);
    return splitmix64(state) ^ s;
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

LhvEstimate lhv_correlation(const LhvModel& model, const std::vector<Direction>& dirs,
                            std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("lhv_correlation: samples must be >= 1");
    std::mt19937_64 gen(seed);
    long long sum = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::array<double, 3> lambda = model.sample_lambda(gen);
        int prod = 1;
        for (const Direction& d : dirs) prod *= model.outcome_rule(d, lambda);
        sum += prod;
    }
    LhvEstimate est;
    est.samples = samples;
    est.mean = static_cast<double>(sum) / static_cast<double>(samples);
    if (samples >= 2) {
        // products are exactly +-1, so sum of squares is the sample count
        const double var =
            (static_cast<double>(samples) - static_cast<double>(samples) * est.mean * est.mean) /
            (static_cast<double>(samples) - 1.0);
        est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
    }
    return est;
}

BoundCheck verify_classical_bound(const LhvModel& model, const DirectionSet& ds,
                                  std::size_t samples, std::uint64_t seed) {
    const WindowScheme ws = windows(ds.n);
    BoundCheck out;

    std::vector<Direction> sub(ds.n);
    for (std::size_t k = 0; k < ws.windows.size(); ++k) {
        for (int j = 0; j < ds.n; ++j) sub[j] = ds.dirs[ws.windows[k][j]];
        out.window_estimates.push_back(
            lhv_correlation(model, sub, samples, derive_seed(seed, k)));
    }
    for (int j = 0; j < ds.n; ++j) sub[j] = ds.dirs[ws.odd[j]];
    out.odd_estimate = lhv_correlation(model, sub, samples, derive_seed(seed, ws.windows.size()));

    out.lhs = 1.0;
    for (const LhvEstimate& e : out.window_estimates) out.lhs *= e.mean;
    out.rhs = std::abs(out.odd_estimate.mean);

    // delta method on f = prod_k m_k - |m_odd|
    double var = out.odd_estimate.std_error * out.odd_estimate.std_error;
    for (std::size_t k = 0; k < out.window_estimates.size(); ++k) {
        double grad = 1.0;
        for (std::size_t j = 0; j < out.window_estimates.size(); ++j)
            if (j != k) grad *= out.window_estimates[j].mean;
        var += grad * grad * out.window_estimates[k].std_error * out.window_estimates[k].std_error;
    }
    out.sigma = std::sqrt(var);
    out.margin = out.rhs + 4.0 * out.sigma - out.lhs;
    out.holds = out.margin >= 0.0;

    // same-sign premise between <A(a1)A(a3)> and its covariance
    const std::size_t base = ws.windows.size() + 1;
    const LhvEstimate pair13 = lhv_correlation(
        model, {ds.dirs[0], ds.dirs[2]}, samples, derive_seed(seed, base));
    const LhvEstimate single1 =
        lhv_correlation(model, {ds.dirs[0]}, samples, derive_seed(seed, base + 1));
    const LhvEstimate single3 =
        lhv_correlation(model, {ds.dirs[2]}, samples, derive_seed(seed, base + 2));
    const double cov = pair13.mean - single1.mean * single3.mean;
    const double noise =
        4.0 * (pair13.std_error + single1.std_error + single3.std_error);
    out.premise_ok = pair13.mean * cov >= -noise;
    return out;
}

LocalBoundReport local_part_is_lhv(int n, HalfInteger s, MeasurementMode mode, std::size_t trials,
                                   std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    LocalBoundReport rep;
    rep.trials = trials;
    const int m = 2 * n - 1;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Direction> dirs;
        dirs.reserve(m);
        for (int i = 0; i < m; ++i)
            dirs.emplace_back(std::numbers::pi * uniform01(gen), two_pi * uniform01(gen));
        const double xi = std::numbers::pi * uniform01(gen);
        const double eta = two_pi * uniform01(gen);
        const GbiReport r = evaluate_gbi(make_cat_state(n, s, xi, eta), DirectionSet(n, dirs),
                                         mode, Functional::LocalOnly);
        rep.max_p_gb = std::max(rep.max_p_gb, r.p_gb);
    }
    rep.ok = rep.max_p_gb <= 1e-12;
    return rep;
}

LhvModel sign_cos_model() {
    LhvModel m;
    m.name = "sign-cos";
    m.description = "A(a, lambda) = sign(cos(phi_a - lambda)), lambda uniform on [0, 2pi)";
    m.outcome_rule = [](const Direction& a, const std::array<double, 3>& lambda) {
        return sign_pm(std::cos(a.phi - lambda[0]));
    };
    m.sample_lambda = [](std::mt19937_64& gen) {
        return std::array<double, 3>{two_pi * uniform01(gen), 0.0, 0.0};
    };
    return m;
}

LhvModel sign_dot_model() {
    LhvModel m;
    m.name = "sign-dot";
    m.description = "A(a, lambda) = sign(r(a) . lambda), lambda uniform on the unit sphere";
    m.outcome_rule = [](const Direction& a, const std::array<double, 3>& lambda) {
        const double st = std::sin(a.theta);
        const double dot = st * std::cos(a.phi) * lambda[0] + st * std::sin(a.phi) * lambda[1] +
                           std::cos(a.theta) * lambda[2];
        return sign_pm(dot);
    };
    m.sample_lambda = [](std::mt19937_64& gen) {
        const double z = 2.0 * uniform01(gen) - 1.0;
        const double az = two_pi * uniform01(gen);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return std::array<double, 3>{r * std::cos(az), r * std::sin(az), z};
    };
    return m;
}

LhvModel threshold_model(double t) {
    LhvModel m;
    m.name = "threshold";
    m.description = "A(a, lambda) = sign(cos(phi_a - lambda) - t), lambda uniform on [0, 2pi)";
    m.outcome_rule = [t](const Direction& a, const std::array<double, 3>& lambda) {
        return sign_pm(std::cos(a.phi - lambda[0]) - t);
    };
    m.sample_lambda = [](std::mt19937_64& gen) {
        return std::array<double, 3>{two_pi * uniform01(gen), 0.0, 0.0};
    };
    return m;
}

const std::vector<LhvModel>& builtin_models() {
    static const std::vector<LhvModel> models = {sign_cos_model(), sign_dot_model(),
                                                 threshold_model(0.25)};
    return models;
}

const LhvModel* find_model(std::string_view name) {
    for (const LhvModel& m : builtin_models()) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

}  // namespace gbi
