#pragma once

// Text <-> angle helpers for the CLI: angles are accepted in radians or as
// rational multiples of pi ("pi/4", "3pi/4", "-pi/2", "0.5pi"), spins as
// "p/2" rationals or half-integer decimals.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gbi/spin.hpp"

namespace gbi_cli {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_number(const std::string& text, const std::string& what) {
    if (text.empty()) throw std::invalid_argument(what + ": empty value");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v))
        throw std::invalid_argument(what + ": cannot parse '" + text + "'");
    return v;
}

inline double parse_angle(std::string_view raw) {
    const std::string text = trim(raw);
    const auto at = text.find("pi");
    if (at == std::string::npos) return parse_number(text, "angle");

    const std::string head = text.substr(0, at);
    const std::string tail = text.substr(at + 2);

    double factor = 1.0;
    if (head == "-")
        factor = -1.0;
    else if (!head.empty() && head != "+")
        factor = parse_number(head, "angle");

    double denom = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') throw std::invalid_argument("angle: cannot parse '" + text + "'");
        denom = parse_number(tail.substr(1), "angle");
        if (denom == 0.0) throw std::invalid_argument("angle: division by zero in '" + text + "'");
    }
    return factor * std::numbers::pi / denom;
}

inline std::vector<double> parse_angle_list(std::string_view raw) {
    std::vector<double> out;
    std::string_view rest = raw;
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_angle(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

inline gbi::HalfInteger parse_spin(std::string_view raw) {
    const std::string text = trim(raw);
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double num = parse_number(text.substr(0, slash), "spin");
        const double den = parse_number(text.substr(slash + 1), "spin");
        if (den == 2.0 && num == std::floor(num))
            return gbi::HalfInteger(static_cast<int>(num));
        if (den == 1.0 && num == std::floor(num))
            return gbi::HalfInteger(2 * static_cast<int>(num));
        throw std::invalid_argument("spin: '" + text + "' is not a half-integer");
    }
    const double v = parse_number(text, "spin");
    const double twice = 2.0 * v;
    const double rounded = std::round(twice);
    if (std::abs(twice - rounded) > 1e-9 || rounded < 1.0)
        throw std::invalid_argument("spin: '" + text + "' is not a positive half-integer");
    return gbi::HalfInteger(static_cast<int>(rounded));
}

inline std::string spin_text(gbi::HalfInteger s) {
    if (s.is_integer()) return std::to_string(s.twice / 2);
    return std::to_string(s.twice) + "/2";
}

// render x as a small rational multiple of pi when one fits within 1e-12
inline std::string pi_form(double x) {
    if (x == 0.0) return "0";
    for (int q = 1; q <= 96; ++q) {
        const double p_real = x * q / std::numbers::pi;
        const double p = std::round(p_real);
        if (p == 0.0 || std::abs(p) > 1e6) continue;
        if (std::abs(x - p * std::numbers::pi / q) <= 1e-12) {
            const long long pi_num = static_cast<long long>(p);
            const long long g = std::gcd(std::llabs(pi_num), static_cast<long long>(q));
            const long long num = pi_num / g, den = q / g;
            std::string out = (num < 0) ? "-" : "";
            if (std::llabs(num) != 1) out += std::to_string(std::llabs(num));
            out += "pi";
            if (den != 1) out += "/" + std::to_string(den);
            return out;
        }
    }
    return {};  // caller falls back to the radian value
}

}  // namespace gbi_cli
