#include "tlab/phi.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

std::string fmt_num(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

double parse_num(std::string_view s, std::string_view what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw InvalidParameters("cannot parse " + std::string(what) + " from '" +
                                std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

PhiSpec PhiSpec::half_plane() { return PhiSpec(family::HalfPlane{}); }

PhiSpec PhiSpec::alpha(double a) {
    if (!(a >= 0.0 && a < 1.0)) {
        throw InvalidParameters("alpha must satisfy 0 <= alpha < 1, got " + fmt_num(a));
    }
    return PhiSpec(family::Alpha{a});
}

PhiSpec PhiSpec::janowski(double d, double e) {
    if (!(e >= -1.0 && e < d && d <= 1.0)) {
        throw InvalidParameters("janowski parameters must satisfy -1 <= E < D <= 1, got D=" +
                                fmt_num(d) + " E=" + fmt_num(e));
    }
    return PhiSpec(family::Janowski{d, e});
}

PhiSpec PhiSpec::power(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw InvalidParameters("power exponent must satisfy 0 < gamma <= 1, got " +
                                fmt_num(gamma));
    }
    return PhiSpec(family::Power{gamma});
}

PhiSpec PhiSpec::custom(Series series, std::optional<Series> inverse, std::string source) {
    if (series.order() < 2) {
        throw InvalidParameters("custom series needs at least coefficients c0..c2");
    }
    if (std::abs(series[0] - cplx{1.0}) > kCoeffTol) {
        throw InvalidParameters("custom series must satisfy Phi(0) = 1");
    }
    if (std::abs(series[1].imag()) > kCoeffTol || !(series[1].real() > 0.0)) {
        throw InvalidParameters("custom series must have real Phi'(0) > 0");
    }
    if (std::abs(series[2].imag()) > kCoeffTol) {
        throw InvalidParameters("custom series must have real Phi''(0)");
    }
    if (inverse && std::abs((*inverse)[0]) > kCoeffTol) {
        throw InvalidParameters("inverse series must vanish at 0");
    }
    return PhiSpec(family::Custom{std::move(series), std::move(inverse), std::move(source)});
}

std::string PhiSpec::describe() const {
    return std::visit(
        overloaded{
            [](const family::HalfPlane&) { return std::string("starlike"); },
            [](const family::Alpha& f) { return "alpha:" + fmt_num(f.alpha); },
            [](const family::Janowski& f) {
                return "janowski:" + fmt_num(f.d) + ":" + fmt_num(f.e);
            },
            [](const family::Power& f) { return "power:" + fmt_num(f.gamma); },
            [](const family::Custom& f) { return "custom:" + f.source; },
        },
        family_);
}

PhiSpec parse_phi(std::string_view text) {
    auto parts = split(text, ':');
    const auto head = parts.front();
    if (head == "starlike" && parts.size() == 1) return PhiSpec::half_plane();
    if (head == "alpha" && parts.size() == 2) return PhiSpec::alpha(parse_num(parts[1], "alpha"));
    if (head == "power" && parts.size() == 2) return PhiSpec::power(parse_num(parts[1], "gamma"));
    if (head == "janowski" && parts.size() == 3) {
        return PhiSpec::janowski(parse_num(parts[1], "D"), parse_num(parts[2], "E"));
    }
    if (head == "custom" && parts.size() >= 2) {
        return load_custom_phi(std::string(text.substr(head.size() + 1)));
    }
    throw InvalidParameters("unknown family '" + std::string(text) + "'");
}

PhiSpec load_custom_phi(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameters("cannot open coefficient file '" + path + "'");
    std::vector<cplx> fwd;
    std::vector<cplx> inv;
    bool in_inverse = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a;
        std::string b;
        if (!(ls >> a)) continue;
        if (a == "inverse") {
            in_inverse = true;
            continue;
        }
        const double re = parse_num(a, "real part (line " + std::to_string(lineno) + ")");
        double im = 0.0;
        if (ls >> b) im = parse_num(b, "imaginary part (line " + std::to_string(lineno) + ")");
        (in_inverse ? inv : fwd).emplace_back(re, im);
    }
    if (fwd.empty()) throw InvalidParameters("coefficient file '" + path + "' is empty");
    const int order = static_cast<int>(fwd.size()) - 1;
    std::optional<Series> inverse;
    if (!inv.empty()) {
        const int inv_order = static_cast<int>(inv.size()) - 1;
        inverse = Series(std::move(inv), inv_order);
    }
    return PhiSpec::custom(Series(std::move(fwd), order), std::move(inverse), path);
}

Jet2 jet2(const PhiSpec& phi) {
    return std::visit(
        overloaded{
            [](const family::HalfPlane&) { return Jet2{2.0, 4.0}; },
            [](const family::Alpha& f) {
                const double b = 1.0 - f.alpha;
                return Jet2{2.0 * b, 4.0 * b};
            },
            [](const family::Janowski& f) {
                const double s = f.d - f.e;
                return Jet2{s, -2.0 * f.e * s};
            },
            [](const family::Power& f) {
                return Jet2{2.0 * f.gamma, 4.0 * f.gamma * f.gamma};
            },
            [](const family::Custom& f) {
                return Jet2{f.series[1].real(), 2.0 * f.series[2].real()};
            },
        },
        phi.family());
}

Series phi_series(const PhiSpec& phi, int order) {
    const Series z = Series::variable(order);
    const Series one = Series::constant(1.0, order);
    return std::visit(
        overloaded{
            [&](const family::HalfPlane&) { return div(one + z, one - z); },
            [&](const family::Alpha& f) {
                return div(one + (1.0 - 2.0 * f.alpha) * z, one - z);
            },
            [&](const family::Janowski& f) { return div(one + f.d * z, one + f.e * z); },
            [&](const family::Power& f) {
                const Series base = div(one + z, one - z);
                return exp_series(cplx{f.gamma} * log_series(base));
            },
            [&](const family::Custom& f) { return f.series.truncated(order); },
        },
        phi.family());
}

cplx phi_inverse(const PhiSpec& phi, cplx w) {
    const cplx one{1.0};
    return std::visit(
        overloaded{
            [&](const family::HalfPlane&) { return (w - one) / (w + one); },
            [&](const family::Alpha& f) { return (w - one) / (w + one - 2.0 * f.alpha); },
            [&](const family::Janowski& f) { return (w - one) / (f.d - f.e * w); },
            [&](const family::Power& f) {
                const cplx u = std::exp(std::log(w) / f.gamma);
                return (u - one) / (u + one);
            },
            [&](const family::Custom& f) {
                if (!f.inverse) throw NoInverseAvailable();
                // The inverse series is expanded about Phi(0) = 1.
                return f.inverse->eval(w - one);
            },
        },
        phi.family());
}

bool condition_t22(const Jet2& jet) {
    return jet.d1 > 0.0 && std::abs(jet.d2 + 2.0 * jet.d1 * jet.d1) >= 2.0 * jet.d1;
}

bool condition_t22(const PhiSpec& phi) { return condition_t22(jet2(phi)); }

bool condition_t31(const Jet2& jet) {
    const double sq = jet.d1 * jet.d1;
    return jet.d1 > 0.0 && 2.0 * jet.d1 - 2.0 * sq <= jet.d2 &&
           jet.d2 <= 6.0 * sq - 2.0 * jet.d1;
}

bool condition_t31(const PhiSpec& phi) { return condition_t31(jet2(phi)); }

bool subordination_check(const Series& candidate, const PhiSpec& phi, int grid) {
    if (std::abs(candidate[0] - cplx{1.0}) > kCoeffTol) {
        throw std::invalid_argument("subordination candidate must satisfy candidate(0) = 1");
    }
    if (grid < 1) throw std::invalid_argument("subordination grid must be positive");
    constexpr double radii[] = {0.3, 0.6, 0.9};
    for (double r : radii) {
        for (int j = 0; j < grid; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid;
            const cplx w = candidate.eval(std::polar(r, theta));
            // NaN/inf from a pole of the inverse fails the comparison too.
            if (!(std::abs(phi_inverse(phi, w)) < 1.0)) return false;
        }
    }
    return true;
}

}  // namespace tlab
