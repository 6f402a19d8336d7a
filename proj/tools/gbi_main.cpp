// gbi: correlations, Bell-type window inequality, violation search, parity
// scans and hidden-variable checks for n-particle spin-s cat states.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "angle_text.hpp"
#include "gbi/gbi.hpp"
#include "gbi/lhv.hpp"

using nlohmann::ordered_json;

namespace {

std::string number_text(double x) { return ordered_json(x).dump(); }

ordered_json angle_json(double radians) {
    std::string form = gbi_cli::pi_form(radians);
    if (form.empty()) form = number_text(radians / std::numbers::pi) + "pi";
    return ordered_json{{"radians", radians}, {"pi_form", form}};
}

ordered_json direction_json(const gbi::Direction& d) {
    return ordered_json{{"theta", angle_json(d.theta)}, {"phi", angle_json(d.phi)}};
}

ordered_json breakdown_json(const gbi::CorrelationBreakdown& b) {
    return ordered_json{{"local", b.local},
                        {"nonlocal", b.nonlocal},
                        {"total", b.total},
                        {"subspace_norm", b.subspace_norm},
                        {"scaled_total", b.scaled_total}};
}

ordered_json report_json(const gbi::GbiReport& r) {
    return ordered_json{{"window_values", r.window_values}, {"odd_value", r.odd_value},
                        {"lhs", r.lhs},                     {"rhs", r.rhs},
                        {"p_gb", r.p_gb},                   {"violated", r.violated}};
}

gbi::MeasurementMode parse_mode(const std::string& text) {
    if (text == "full") return gbi::MeasurementMode::Full;
    if (text == "scs") return gbi::MeasurementMode::RestrictedSCS;
    throw std::invalid_argument("mode: expected 'full' or 'scs', got '" + text + "'");
}

gbi::Functional parse_which(const std::string& text) {
    if (text == "local") return gbi::Functional::LocalOnly;
    if (text == "quantum") return gbi::Functional::FullQuantum;
    if (text == "scaled") return gbi::Functional::ScaledQuantum;
    throw std::invalid_argument("which: expected 'local', 'quantum' or 'scaled'");
}

std::vector<gbi::Direction> parse_directions(const std::string& theta_list,
                                             const std::string& phi_list, std::size_t expected) {
    const std::vector<double> thetas = gbi_cli::parse_angle_list(theta_list);
    const std::vector<double> phis = gbi_cli::parse_angle_list(phi_list);
    if (thetas.size() != expected || phis.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " comma-separated theta and phi values");
    std::vector<gbi::Direction> dirs;
    dirs.reserve(expected);
    for (std::size_t i = 0; i < expected; ++i) dirs.emplace_back(thetas[i], phis[i]);
    return dirs;
}

std::vector<int> parse_int_list(const std::string& raw) {
    std::vector<int> out;
    std::string_view rest = raw;
    while (true) {
        const auto comma = rest.find(',');
        const std::string item = gbi_cli::trim(rest.substr(0, comma));
        const double v = gbi_cli::parse_number(item, "n");
        if (v != std::floor(v) || v < 2) throw std::invalid_argument("n: '" + item + "' invalid");
        out.push_back(static_cast<int>(v));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<gbi::HalfInteger> parse_spin_list(const std::string& raw) {
    std::vector<gbi::HalfInteger> out;
    std::string_view rest = raw;
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(gbi_cli::parse_spin(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::size_t dim_cap_from_env() {
    const char* raw = std::getenv("GBI_DIM_CAP");
    if (raw == nullptr) return gbi::default_dim_cap;
    const double v = gbi_cli::parse_number(raw, "GBI_DIM_CAP");
    if (v < 1.0 || v != std::floor(v)) throw std::invalid_argument("GBI_DIM_CAP: invalid value");
    return static_cast<std::size_t>(v);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
}

void emit_doc(const ordered_json& doc, const std::string& csv, const std::string& format,
              const std::string& out_path) {
    if (format == "json")
        emit(doc.dump(2) + "\n", out_path);
    else if (format == "csv")
        emit(csv, out_path);
    else
        throw std::invalid_argument("format: expected 'json' or 'csv'");
}

struct CorrelateOpts {
    int n = 3;
    std::string spin = "1/2", xi = "pi/4", eta = "pi/4", mode = "scs";
    std::string theta, phi, out, format = "json";
};

void run_correlate(const CorrelateOpts& o, std::size_t dim_cap) {
    const gbi::HalfInteger s = gbi_cli::parse_spin(o.spin);
    const double xi = gbi_cli::parse_angle(o.xi), eta = gbi_cli::parse_angle(o.eta);
    const auto dirs = parse_directions(o.theta, o.phi, static_cast<std::size_t>(o.n));
    const gbi::MeasurementMode mode = parse_mode(o.mode);

    const gbi::CatState cat = gbi::make_cat_state(o.n, s, xi, eta);
    const gbi::CorrelationBreakdown b = gbi::correlate(cat, dirs, mode, dim_cap);

    ordered_json doc{{"schema", "gbi/1"},
                     {"command", "correlate"},
                     {"n", o.n},
                     {"spin", gbi_cli::spin_text(s)},
                     {"twice_spin", s.twice},
                     {"xi", angle_json(xi)},
                     {"eta", angle_json(eta)},
                     {"mode", o.mode}};
    ordered_json jdirs = ordered_json::array();
    for (const auto& d : dirs) jdirs.push_back(direction_json(d));
    doc["directions"] = jdirs;
    doc["correlation"] = breakdown_json(b);

    std::string csv = "local,nonlocal,total,subspace_norm,scaled_total\n";
    csv += number_text(b.local) + "," + number_text(b.nonlocal) + "," + number_text(b.total) +
           "," + number_text(b.subspace_norm) + "," + number_text(b.scaled_total) + "\n";
    emit_doc(doc, csv, o.format, o.out);
}

struct GbiOpts {
    int n = 3;
    std::string spin = "1/2", xi = "pi/4", eta = "pi/4", mode = "scs", which = "scaled";
    std::string theta, phi, out, format = "json";
};

void run_gbi(const GbiOpts& o, std::size_t dim_cap) {
    const gbi::HalfInteger s = gbi_cli::parse_spin(o.spin);
    const double xi = gbi_cli::parse_angle(o.xi), eta = gbi_cli::parse_angle(o.eta);
    const auto dirs = parse_directions(o.theta, o.phi, static_cast<std::size_t>(2 * o.n - 1));
    const gbi::MeasurementMode mode = parse_mode(o.mode);
    const gbi::Functional which = parse_which(o.which);

    const gbi::CatState cat = gbi::make_cat_state(o.n, s, xi, eta);
    const gbi::GbiReport rep =
        gbi::evaluate_gbi(cat, gbi::DirectionSet(o.n, dirs), mode, which, dim_cap);

    ordered_json doc{{"schema", "gbi/1"},
                     {"command", "gbi"},
                     {"n", o.n},
                     {"spin", gbi_cli::spin_text(s)},
                     {"twice_spin", s.twice},
                     {"xi", angle_json(xi)},
                     {"eta", angle_json(eta)},
                     {"mode", o.mode},
                     {"which", o.which}};
    ordered_json jdirs = ordered_json::array();
    for (const auto& d : dirs) jdirs.push_back(direction_json(d));
    doc["directions"] = jdirs;
    doc["report"] = report_json(rep);

    std::string csv;
    for (std::size_t k = 0; k < rep.window_values.size(); ++k)
        csv += "window_" + std::to_string(k + 1) + ",";
    csv += "odd_value,lhs,rhs,p_gb,violated\n";
    for (double v : rep.window_values) csv += number_text(v) + ",";
    csv += number_text(rep.odd_value) + "," + number_text(rep.lhs) + "," + number_text(rep.rhs) +
           "," + number_text(rep.p_gb) + "," + (rep.violated ? "true" : "false") + "\n";
    emit_doc(doc, csv, o.format, o.out);
}

struct MaximizeOpts {
    int n = 3;
    std::string spin = "1/2", mode = "scs", free = "angles";
    int restarts = 32, max_iter = 3000;
    std::uint64_t seed = 20240811;
    double tol = 1e-12;
    std::string out, format = "json";
};

void run_maximize(const MaximizeOpts& o) {
    const gbi::HalfInteger s = gbi_cli::parse_spin(o.spin);
    const gbi::MeasurementMode mode = parse_mode(o.mode);
    gbi::FreeParameters free = gbi::FreeParameters::AnglesOnly;
    if (o.free == "angles-state")
        free = gbi::FreeParameters::AnglesAndState;
    else if (o.free != "angles")
        throw std::invalid_argument("free: expected 'angles' or 'angles-state'");

    gbi::OptimizerConfig cfg;
    cfg.restarts = o.restarts;
    cfg.max_iterations = o.max_iter;
    cfg.seed = o.seed;
    cfg.convergence_tol = o.tol;
    const gbi::MaximizeResult r = gbi::maximize_violation(o.n, s, mode, cfg, free);

    ordered_json phis = ordered_json::array();
    for (double phi : r.phis) phis.push_back(angle_json(phi));
    ordered_json doc{{"schema", "gbi/1"},
                     {"command", "maximize"},
                     {"n", o.n},
                     {"spin", gbi_cli::spin_text(s)},
                     {"twice_spin", s.twice},
                     {"mode", o.mode},
                     {"free", o.free},
                     {"seed", o.seed},
                     {"restarts", o.restarts},
                     {"best_p_gb", r.best_p_gb},
                     {"violated", r.report.violated},
                     {"argmax", ordered_json{{"theta", angle_json(std::numbers::pi / 2)},
                                             {"phi", phis},
                                             {"xi", angle_json(r.xi)},
                                             {"eta", angle_json(r.eta)}}},
                     {"report", report_json(r.report)}};

    std::string csv = "n,twice_s,mode,free,seed,best_p_gb,violated\n";
    csv += std::to_string(o.n) + "," + std::to_string(s.twice) + "," + o.mode + "," + o.free +
           "," + std::to_string(o.seed) + "," + number_text(r.best_p_gb) + "," +
           (r.report.violated ? "true" : "false") + "\n";
    emit_doc(doc, csv, o.format, o.out);
}

struct ScanOpts {
    std::string n = "3,4", spin = "1/2,1,3/2", mode = "scs";
    int restarts = 32, max_iter = 3000;
    std::uint64_t seed = 20240811;
    std::string out, format = "csv";
};

void run_scan(const ScanOpts& o) {
    const std::vector<int> ns = parse_int_list(o.n);
    const std::vector<gbi::HalfInteger> spins = parse_spin_list(o.spin);
    const gbi::MeasurementMode mode = parse_mode(o.mode);

    gbi::OptimizerConfig cfg;
    cfg.restarts = o.restarts;
    cfg.max_iterations = o.max_iter;
    cfg.seed = o.seed;
    const std::vector<gbi::ParityRow> rows = gbi::parity_scan(ns, spins, mode, cfg);

    ordered_json jrows = ordered_json::array();
    std::string csv = "n,twice_s,max_p_gb,violated\n";
    for (const gbi::ParityRow& row : rows) {
        jrows.push_back(ordered_json{{"n", row.n},
                                     {"twice_s", row.s.twice},
                                     {"spin", gbi_cli::spin_text(row.s)},
                                     {"max_p_gb", row.max_p_gb},
                                     {"violated", row.violated}});
        csv += std::to_string(row.n) + "," + std::to_string(row.s.twice) + "," +
               number_text(row.max_p_gb) + "," + (row.violated ? "true" : "false") + "\n";
    }
    ordered_json doc{{"schema", "gbi/1"}, {"command", "scan-parity"}, {"mode", o.mode},
                     {"seed", o.seed},    {"restarts", o.restarts},   {"rows", jrows}};
    emit_doc(doc, csv, o.format, o.out);
}

struct LhvOpts {
    std::string model = "sign-cos";
    int n = 3;
    int trials = 100;
    std::uint64_t samples = 100000, seed = 20240811;
    std::string out, format = "json";
};

void run_lhv(const LhvOpts& o) {
    const gbi::LhvModel* model = gbi::find_model(o.model);
    if (model == nullptr) throw std::invalid_argument("model: unknown model '" + o.model + "'");

    std::mt19937_64 dir_gen(gbi::derive_seed(o.seed, 0));
    ordered_json jtrials = ordered_json::array();
    std::string csv = "trial,lhs,rhs,sigma,margin,holds,premise_ok\n";
    int failures = 0;
    for (int t = 0; t < o.trials; ++t) {
        std::vector<gbi::Direction> dirs;
        dirs.reserve(2 * o.n - 1);
        for (int i = 0; i < 2 * o.n - 1; ++i)
            dirs.emplace_back(std::numbers::pi * gbi::uniform01(dir_gen),
                              2.0 * std::numbers::pi * gbi::uniform01(dir_gen));
        const gbi::BoundCheck c = gbi::verify_classical_bound(
            *model, gbi::DirectionSet(o.n, dirs), o.samples,
            gbi::derive_seed(o.seed, static_cast<std::uint64_t>(t) + 1));
        if (!c.holds) ++failures;
        jtrials.push_back(ordered_json{{"trial", t},
                                       {"lhs", c.lhs},
                                       {"rhs", c.rhs},
                                       {"sigma", c.sigma},
                                       {"margin", c.margin},
                                       {"holds", c.holds},
                                       {"premise_ok", c.premise_ok}});
        csv += std::to_string(t) + "," + number_text(c.lhs) + "," + number_text(c.rhs) + "," +
               number_text(c.sigma) + "," + number_text(c.margin) + "," +
               (c.holds ? "true" : "false") + "," + (c.premise_ok ? "true" : "false") + "\n";
    }
    ordered_json doc{{"schema", "gbi/1"},
                     {"command", "lhv"},
                     {"model", o.model},
                     {"n", o.n},
                     {"trials", o.trials},
                     {"samples", o.samples},
                     {"seed", o.seed},
                     {"failures", failures},
                     {"all_hold", failures == 0},
                     {"results", jtrials}};
    emit_doc(doc, csv, o.format, o.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell-type window inequality toolkit for spin-s cat states"};
    app.require_subcommand(1);

    CorrelateOpts co;
    CLI::App* correlate = app.add_subcommand("correlate", "Correlation for one direction set");
    correlate->add_option("--n", co.n, "particle count")->check(CLI::Range(2, 24));
    correlate->add_option("--spin", co.spin, "spin, e.g. 1/2, 3/2 or 1");
    correlate->add_option("--xi", co.xi, "state mixing angle");
    correlate->add_option("--eta", co.eta, "state phase angle");
    correlate->add_option("--mode", co.mode, "full | scs");
    correlate->add_option("--theta", co.theta, "n comma-separated polar angles")->required();
    correlate->add_option("--phi", co.phi, "n comma-separated azimuths")->required();
    correlate->add_option("--out", co.out, "output file (default stdout)");
    correlate->add_option("--format", co.format, "json | csv");

    GbiOpts go;
    CLI::App* gbi_cmd = app.add_subcommand("gbi", "Evaluate the window inequality");
    gbi_cmd->add_option("--n", go.n, "particle count")->check(CLI::Range(2, 24));
    gbi_cmd->add_option("--spin", go.spin, "spin");
    gbi_cmd->add_option("--xi", go.xi, "state mixing angle");
    gbi_cmd->add_option("--eta", go.eta, "state phase angle");
    gbi_cmd->add_option("--mode", go.mode, "full | scs");
    gbi_cmd->add_option("--which", go.which, "local | quantum | scaled");
    gbi_cmd->add_option("--theta", go.theta, "2n-1 comma-separated polar angles")->required();
    gbi_cmd->add_option("--phi", go.phi, "2n-1 comma-separated azimuths")->required();
    gbi_cmd->add_option("--out", go.out, "output file (default stdout)");
    gbi_cmd->add_option("--format", go.format, "json | csv");

    MaximizeOpts mo;
    CLI::App* maximize = app.add_subcommand("maximize", "Search for the maximum violation");
    maximize->add_option("--n", mo.n, "particle count")->check(CLI::Range(2, 16));
    maximize->add_option("--spin", mo.spin, "spin");
    maximize->add_option("--mode", mo.mode, "full | scs");
    maximize->add_option("--free", mo.free, "angles | angles-state");
    maximize->add_option("--restarts", mo.restarts, "optimizer restarts")->check(CLI::Range(1, 4096));
    maximize->add_option("--max-iter", mo.max_iter, "iterations per restart");
    maximize->add_option("--seed", mo.seed, "random seed");
    maximize->add_option("--tol", mo.tol, "simplex convergence tolerance");
    maximize->add_option("--out", mo.out, "output file (default stdout)");
    maximize->add_option("--format", mo.format, "json | csv");

    ScanOpts so;
    CLI::App* scan = app.add_subcommand("scan-parity", "Max violation over an (n, spin) grid");
    scan->add_option("--n", so.n, "comma-separated particle counts");
    scan->add_option("--spin", so.spin, "comma-separated spins");
    scan->add_option("--mode", so.mode, "full | scs");
    scan->add_option("--restarts", so.restarts, "optimizer restarts")->check(CLI::Range(1, 4096));
    scan->add_option("--seed", so.seed, "random seed");
    scan->add_option("--out", so.out, "output file (default stdout)");
    scan->add_option("--format", so.format, "json | csv");

    LhvOpts lo;
    CLI::App* lhv = app.add_subcommand("lhv", "Hidden-variable bound Monte Carlo");
    lhv->add_option("--model", lo.model, "sign-cos | sign-dot | threshold");
    lhv->add_option("--n", lo.n, "particle count")->check(CLI::Range(2, 24));
    lhv->add_option("--trials", lo.trials, "random direction sets")->check(CLI::Range(1, 1000000));
    lhv->add_option("--samples", lo.samples, "Monte Carlo samples per estimate");
    lhv->add_option("--seed", lo.seed, "random seed");
    lhv->add_option("--out", lo.out, "output file (default stdout)");
    lhv->add_option("--format", lo.format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::size_t dim_cap = dim_cap_from_env();
        if (correlate->parsed()) run_correlate(co, dim_cap);
        if (gbi_cmd->parsed()) run_gbi(go, dim_cap);
        if (maximize->parsed()) run_maximize(mo);
        if (scan->parsed()) run_scan(so);
        if (lhv->parsed()) run_lhv(lo);
        return 0;
    } catch (const gbi::dimension_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
