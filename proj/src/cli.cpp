#include "tlab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "tlab/bounds.hpp"
#include "tlab/errors.hpp"
#include "tlab/extremal.hpp"
#include "tlab/highdim.hpp"
#include "tlab/json_io.hpp"
#include "tlab/sampler.hpp"

namespace tlab {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

std::string fmt_num(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw InvalidParameters("cannot parse " + what + " from '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

cplx parse_lambda(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() == 1) return {parse_double(parts[0], "lambda"), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0], "lambda"), parse_double(parts[1], "lambda")};
    throw InvalidParameters("lambda must be 're' or 're,im', got '" + s + "'");
}

// Emits to --out when given, otherwise to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidParameters("cannot open output file '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void emit(const RunConfig& cfg, std::ostream& out, const Json& j) {
    Sink sink(cfg.out, out);
    sink.stream() << j.dump(2) << "\n";
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const PhiSpec phi = parse_phi(cfg.family);
    std::vector<cplx> lambdas;
    for (const auto& l : cfg.lambdas) lambdas.push_back(parse_lambda(l));
    emit(cfg, out, to_json(report(phi, lambdas)));
    return exit_code::kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhiSpec phi = parse_phi(cfg.family);
    const Jet2 jet = jet2(phi);
    std::vector<Theorem> theorems;
    if (cfg.theorem == "t22" || cfg.theorem == "both") theorems.push_back(Theorem::T22);
    if (cfg.theorem == "t31" || cfg.theorem == "both") theorems.push_back(Theorem::T31);
    if (theorems.empty()) throw InvalidParameters("--theorem must be t22, t31 or both");

    if (cfg.theorem == "both") {
        std::erase_if(theorems, [&](Theorem t) {
            return t == Theorem::T22 ? !condition_t22(jet) : !condition_t31(jet);
        });
        if (theorems.empty()) {
            err << "no theorem applies to " << phi.describe() << "\n";
            return exit_code::kConditionNotMet;
        }
    }

    McOptions opts;
    opts.order = cfg.order;
    opts.max_factors = cfg.max_factors;
    opts.tol = cfg.tol.value_or(1e-6);
    Json reports = Json::array();
    bool violated = false;
    for (Theorem t : theorems) {
        const auto rep = montecarlo_verify(phi, t, cfg.samples, cfg.seed, opts);
        violated = violated || !rep.violations.empty();
        reports.push_back(to_json(rep));
    }
    emit(cfg, out, reports);
    return violated ? exit_code::kViolation : exit_code::kOk;
}

int cmd_sharpness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhiSpec phi = parse_phi(cfg.family);
    const Jet2 jet = jet2(phi);
    Json j;
    try {
        j["certificate"] = to_json(certify(phi, cfg.order, cfg.tol.value_or(kCertifyTol)));
    } catch (const CertificationFailed& e) {
        err << e.what() << "\n";
        return exit_code::kViolation;
    }
    const double oracle_tol = cfg.oracle_tol.value_or(1e-3);
    OracleOptions oo;
    oo.grid = cfg.grid;
    Json oracle = Json::object();
    bool violated = false;
    auto run = [&](const char* name, const Target& target, bool holds, double bound) {
        if (!holds) return;
        const auto res = oracle_sup(phi, target, oo);
        Json o = to_json(res, bound);
        o["within_tolerance"] = bound - res.value <= oracle_tol && res.value <= bound + 1e-9;
        // A grid point is an attainable coefficient pair, so exceeding the
        // closed form is a genuine counterexample.
        if (res.value > bound + 1e-9) violated = true;
        oracle[name] = o;
    };
    run("t22", Target::t22(), condition_t22(jet), t22_bound(jet));
    run("t31", Target::t31(), condition_t31(jet), t31_bound(jet));
    j["oracle"] = oracle;
    j["oracle_tolerance"] = oracle_tol;
    emit(cfg, out, j);
    return violated ? exit_code::kViolation : exit_code::kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const auto parts = split(cfg.sweep, ':');
    std::string fam;
    std::string fixed;
    std::size_t first = 1;
    if (!parts.empty()) fam = parts[0];
    if (fam == "janowski") {
        if (parts.size() != 5) {
            throw InvalidParameters("janowski sweep is janowski:<E>:<D start>:<D stop>:<step>");
        }
        fixed = parts[1];
        first = 2;
    } else if ((fam != "alpha" && fam != "power") || parts.size() != 4) {
        throw InvalidParameters("sweep must be alpha|power:<start>:<stop>:<step>");
    }
    const double start = parse_double(parts[first], "sweep start");
    const double stop = parse_double(parts[first + 1], "sweep stop");
    const double step = parse_double(parts[first + 2], "sweep step");
    if (!(step > 0.0)) throw InvalidParameters("sweep step must be positive");

    // Build every family before writing anything so a bad range fails cleanly.
    std::vector<std::pair<double, PhiSpec>> families;
    if (stop >= start) {
        const auto rows = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < rows; ++i) {
            const double param = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
            families.emplace_back(param, fam == "alpha"   ? PhiSpec::alpha(param)
                                         : fam == "power" ? PhiSpec::power(param)
                                                          : PhiSpec::janowski(param, parse_double(fixed, "E")));
        }
    }

    Sink sink(cfg.out, out);
    auto& os = sink.stream();
    os << "param,t22,t31,cond_t22,cond_t31\n";
    for (const auto& [param, phi] : families) {
        const auto r = report(phi, {});
        os << fmt_num(param) << "," << (r.t22 ? fmt_num(*r.t22) : "") << ","
           << (r.t31 ? fmt_num(*r.t31) : "") << "," << (r.cond_t22 ? "true" : "false") << ","
           << (r.cond_t31 ? "true" : "false") << "\n";
    }
    return exit_code::kOk;
}

int cmd_highdim(const RunConfig& cfg, std::ostream& out) {
    const PhiSpec phi = parse_phi(cfg.family);
    const NormKind kind = parse_norm_kind(cfg.norm);
    if (cfg.n == 0) throw InvalidParameters("--n must be at least 1");
    const double tol = cfg.tol.value_or(1e-9);
    const Series h = extremal_lift(phi, cfg.order);

    bool violated = false;
    Json extremal = Json::array();
    for (double r : cfg.radii) {
        std::vector<cplx> coords(cfg.n);
        coords[0] = r;
        const NormedPoint z = NormedPoint::make(std::move(coords), kind);
        Json e;
        e["r"] = r;
        const auto ball = verify_ball(phi, h, z);
        e["ball"] = to_json(ball);
        try {
            enforce(ball, tol);
        } catch (const BoundViolated&) {
            violated = true;
        }
        if (kind == NormKind::Sup) {
            const auto poly = verify_polydisc(phi, h, z);
            e["polydisc"] = to_json(poly);
            e["res_equality"] = std::abs(poly.res.margin) <= tol;
            try {
                enforce(poly, tol, cfg.homogeneous_t31);
            } catch (const BoundViolated&) {
                violated = true;
            }
        }
        extremal.push_back(e);
    }

    HighdimOptions ho;
    ho.order = cfg.order;
    ho.max_factors = cfg.max_factors;
    ho.tol = tol;
    ho.homogeneous_un2 = cfg.homogeneous_t31;
    const auto sweep = highdim_sweep(phi, cfg.n, kind, cfg.samples, cfg.seed, ho);
    violated = violated || !sweep.violations.empty();

    Json j;
    j["family"] = phi.describe();
    j["n"] = cfg.n;
    j["norm"] = to_string(kind);
    j["t31_weight"] = cfg.homogeneous_t31 ? "homogeneous" : "printed";
    j["extremal"] = extremal;
    j["random"] = to_json(sweep);
    if (cfg.n == 1) j["one_dim_certificate"] = to_json(certify(phi, cfg.order));
    emit(cfg, out, j);
    return violated ? exit_code::kViolation : exit_code::kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Toeplitz determinant bound laboratory", "toeplitz_lab"};
    app.require_subcommand(1, 1);

    std::optional<std::uint64_t> seed_flag;
    std::vector<std::string> radii_text;
    auto common = [&](CLI::App* sub, bool with_seed) {
        sub->add_option("--family", cfg.family, "starlike | alpha:<a> | janowski:<D>:<E> | power:<g> | custom:<path>");
        sub->add_option("--order", cfg.order, "series truncation order")->check(CLI::Range(3, 512));
        sub->add_option("--out", cfg.out, "write output to this file");
        if (with_seed) {
            sub->add_option("--seed", seed_flag, "RNG seed (fallback: TOEPLITZ_LAB_SEED)");
        }
    };

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds and Fekete-Szego table");
    common(bounds, false);
    bounds->add_option("--lambda", cfg.lambdas, "lambda as 're' or 're,im' (repeatable)");

    auto* verify = app.add_subcommand("verify", "Monte-Carlo check of the bounds on sampled class members");
    common(verify, true);
    verify->add_option("--samples", cfg.samples, "number of sampled functions")->default_val(10000);
    verify->add_option("--theorem", cfg.theorem, "t22 | t31 | both");
    verify->add_option("--tol", cfg.tol, "violation tolerance (default 1e-6)");
    verify->add_option("--max-factors", cfg.max_factors, "max Blaschke factors per word")->check(CLI::NonNegativeNumber);

    auto* sharp = app.add_subcommand("sharpness", "extremal certificate and grid oracle");
    common(sharp, false);
    sharp->add_option("--grid", cfg.grid, "oracle lattice points per axis")->check(CLI::Range(8, 100000));
    sharp->add_option("--tol", cfg.tol, "certificate gap tolerance (default 1e-10)");
    sharp->add_option("--oracle-tol", cfg.oracle_tol, "oracle deficit tolerance (default 1e-3)");

    auto* table = app.add_subcommand("table", "CSV of bounds over a parameter sweep");
    table->add_option("--sweep", cfg.sweep, "alpha|power:<start>:<stop>:<step> or janowski:<E>:<start>:<stop>:<step>")
        ->required();
    table->add_option("--out", cfg.out, "write output to this file");

    auto* hd = app.add_subcommand("highdim", "ball and polydisc checks");
    common(hd, true);
    hd->add_option("--n", cfg.n, "dimension");
    hd->add_option("--norm", cfg.norm, "sup | euclid");
    hd->add_option("--r", radii_text, "radii for the extremal points (comma list or repeated)")->delimiter(',');
    hd->add_option("--samples", cfg.samples, "random lifted samples")->default_val(100);
    hd->add_option("--tol", cfg.tol, "margin tolerance (default 1e-9)");
    hd->add_option("--max-factors", cfg.max_factors, "max Blaschke factors per word")->check(CLI::NonNegativeNumber);
    hd->add_flag("--homogeneous-t31", cfg.homogeneous_t31,
                 "judge the polydisc T31 check against the degree-consistent ||z||^3 weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_code::kUsage;
    }

    if (seed_flag) {
        cfg.seed = *seed_flag;
    } else if (const char* env = std::getenv("TOEPLITZ_LAB_SEED")) {
        std::uint64_t v = 0;
        const std::string s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            err << "TOEPLITZ_LAB_SEED must be an unsigned integer\n";
            return exit_code::kUsage;
        }
        cfg.seed = v;
    } else {
        cfg.seed = kDefaultSeed;
    }

    try {
        if (!radii_text.empty()) {
            cfg.radii.clear();
            for (const auto& r : radii_text) cfg.radii.push_back(parse_double(r, "radius"));
        }
        auto* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (cfg.command == "bounds") return cmd_bounds(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "sharpness") return cmd_sharpness(cfg, out, err);
        if (cfg.command == "table") return cmd_table(cfg, out);
        if (cfg.command == "highdim") return cmd_highdim(cfg, out);
    } catch (const ConditionNotMet& e) {
        err << e.what() << "\n";
        return exit_code::kConditionNotMet;
    } catch (const BoundViolated& e) {
        err << e.what() << "\n";
        return exit_code::kViolation;
    } catch (const CertificationFailed& e) {
        err << e.what() << "\n";
        return exit_code::kViolation;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code::kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_code::kUsage;
    }
    return exit_code::kUsage;
}

}  // namespace tlab
