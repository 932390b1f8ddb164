#include "tlab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tlab/bounds.hpp"
#include "tlab/errors.hpp"
#include "tlab/parallel.hpp"
#include "tlab/rng.hpp"

namespace tlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Series lift_from_phi_series(const Series& phi_s, const SchwarzWord& w, int order) {
    const Series omega = omega_series(w, order);
    const Series g_log_deriv = compose(phi_s, omega);  // z g'/g
    return exp_series(integrate_div_t(g_log_deriv - Series::constant(1.0, order)));
}

// Squared modulus of each target functional given b2^2 and b3, in real
// arithmetic so the lattice loop stays cheap.
struct T22Sq {
    double operator()(double pr, double pi, double br, double bi) const {
        const double vr = pr - (br * br - bi * bi);
        const double vi = pi - 2.0 * br * bi;
        return vr * vr + vi * vi;
    }
};

struct T31Sq {
    double operator()(double pr, double pi, double br, double bi) const {
        // (1 - 2 b2^2) + b3 (2 b2^2 - b3)
        const double mr = 2.0 * pr - br;
        const double mi = 2.0 * pi - bi;
        const double vr = 1.0 - 2.0 * pr + (br * mr - bi * mi);
        const double vi = -2.0 * pi + (br * mi + bi * mr);
        return vr * vr + vi * vi;
    }
};

struct FsSq {
    double lr;
    double li;
    double operator()(double pr, double pi, double br, double bi) const {
        const double vr = br - (lr * pr - li * pi);
        const double vi = bi - (lr * pi + li * pr);
        return vr * vr + vi * vi;
    }
};

struct Best {
    double value_sq = -1.0;
    double r1 = 0.0, t1 = 0.0, s = 0.0, t2 = 0.0;
};

template <class F>
Best scan_lattice(const Jet2& jet, const F& f, int grid, unsigned threads) {
    const int n = grid - 1;
    std::vector<double> cs(static_cast<std::size_t>(n));
    std::vector<double> sn(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        cs[l] = std::cos(kTwoPi * l / n);
        sn[l] = std::sin(kTwoPi * l / n);
    }
    const double quad = 0.5 * jet.d2 + jet.d1 * jet.d1;

    const std::size_t rows = static_cast<std::size_t>(n) + 1;
    const unsigned workers = detail::worker_count(threads, rows);
    std::vector<Best> partial(workers);
    detail::parallel_chunks(rows, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        Best best;
        for (std::size_t i = begin; i < end; ++i) {
            const double r1 = static_cast<double>(i) / n;
            const double c = 0.5 * jet.d1 * (1.0 - r1 * r1);
            for (int j = 0; j < n; ++j) {
                const double w1r = r1 * cs[j];
                const double w1i = r1 * sn[j];
                const double sqr = w1r * w1r - w1i * w1i;
                const double sqi = 2.0 * w1r * w1i;
                const double pr = jet.d1 * jet.d1 * sqr;
                const double pi = jet.d1 * jet.d1 * sqi;
                const double ar = 0.5 * quad * sqr;
                const double ai = 0.5 * quad * sqi;
                for (int k = 0; k <= n; ++k) {
                    const double rad = c * k / n;
                    double row_best = -1.0;
                    int row_arg = 0;
                    for (int l = 0; l < n; ++l) {
                        const double v = f(pr, pi, ar + rad * cs[l], ai + rad * sn[l]);
                        if (v > row_best) {
                            row_best = v;
                            row_arg = l;
                        }
                    }
                    if (row_best > best.value_sq) {
                        best = {row_best, r1, kTwoPi * j / n, static_cast<double>(k) / n,
                                kTwoPi * row_arg / n};
                    }
                }
            }
        }
        partial[w] = best;
    });
    Best best;
    for (const Best& b : partial) {
        if (b.value_sq > best.value_sq) best = b;
    }
    return best;
}

template <class F>
double eval_point(const Jet2& jet, const F& f, double r1, double t1, double s, double t2) {
    const cplx w1 = std::polar(r1, t1);
    const cplx w2 = std::polar(s * (1.0 - r1 * r1), t2);
    const CoeffJet cj = coeffs_from_jet_body(jet, {w1, w2});
    const cplx p = cj.b2 * cj.b2;
    return f(p.real(), p.imag(), cj.b3.real(), cj.b3.imag());
}

template <class F>
Best refine_around(const Jet2& jet, const F& f, const Best& seed, int grid) {
    constexpr int kSteps = 21;
    const double cell_r = 1.0 / (grid - 1);
    const double cell_t = kTwoPi / (grid - 1);
    auto axis = [](double centre, double half, double lo, double hi) {
        std::vector<double> v;
        v.reserve(kSteps);
        for (int q = 0; q < kSteps; ++q) {
            const double x = centre - half + 2.0 * half * q / (kSteps - 1);
            v.push_back(std::clamp(x, lo, hi));
        }
        return v;
    };
    const auto r1s = axis(seed.r1, cell_r, 0.0, 1.0);
    const auto t1s = axis(seed.t1, cell_t, -1e300, 1e300);
    const auto ss = axis(seed.s, cell_r, 0.0, 1.0);
    const auto t2s = axis(seed.t2, cell_t, -1e300, 1e300);
    Best best = seed;
    for (double r1 : r1s)
        for (double t1 : t1s)
            for (double s : ss)
                for (double t2 : t2s) {
                    const double v = eval_point(jet, f, r1, t1, s, t2);
                    if (v > best.value_sq) best = {v, r1, t1, s, t2};
                }
    return best;
}

template <class F>
OracleResult run_oracle(const Jet2& jet, const F& f, const OracleOptions& opts) {
    Best best = scan_lattice(jet, f, opts.grid, opts.threads);
    if (opts.refine) best = refine_around(jet, f, best, opts.grid);
    return OracleResult{
        .value = std::sqrt(best.value_sq),
        .argmax = {std::polar(best.r1, best.t1), std::polar(best.s * (1.0 - best.r1 * best.r1), best.t2)},
        .grid = opts.grid,
        .refined = opts.refine,
    };
}

}  // namespace

SchwarzWord SchwarzWord::make(cplx rotation, std::vector<cplx> factors, int leading_power) {
    if (std::abs(std::abs(rotation) - 1.0) > 1e-12) {
        throw InvalidParameters("Schwarz word rotation must have modulus 1");
    }
    for (const cplx& a : factors) {
        if (!(std::abs(a) < 1.0)) throw InvalidParameters("Blaschke factor must lie in the open disk");
    }
    if (leading_power < 1) throw InvalidParameters("Schwarz word leading power must be >= 1");
    return SchwarzWord(rotation, std::move(factors), leading_power);
}

std::string SchwarzWord::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "rotation=(" << rotation_.real() << "," << rotation_.imag() << ") power=" << leading_power_
       << " factors=[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ";";
        os << "(" << factors_[i].real() << "," << factors_[i].imag() << ")";
    }
    os << "]";
    return os.str();
}

bool in_jet_body(const JetBodyPoint& p, double tol) {
    const double r1 = std::abs(p.w1);
    return r1 <= 1.0 + tol && std::abs(p.w2) <= 1.0 - r1 * r1 + tol;
}

Series omega_series(const SchwarzWord& w, int order) {
    Series omega = Series::monomial(w.rotation(), w.leading_power(), order);
    const Series z = Series::variable(order);
    const Series one = Series::constant(1.0, order);
    for (const cplx& a : w.factors()) {
        omega = omega * div(z + Series::constant(a, order), one + std::conj(a) * z);
    }
    return omega;
}

Series lift_from_schwarz(const PhiSpec& phi, const SchwarzWord& w, int order) {
    return lift_from_phi_series(phi_series(phi, order), w, order);
}

Series g_from_schwarz(const PhiSpec& phi, const SchwarzWord& w, int order) {
    return times_z(lift_from_schwarz(phi, w, order));
}

std::vector<SchwarzWord> sample_words(std::size_t count, std::uint64_t seed, int max_factors) {
    if (max_factors < 0) throw std::invalid_argument("max_factors must be non-negative");
    Rng rng(seed);
    std::vector<SchwarzWord> words;
    words.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const cplx rotation = std::polar(1.0, kTwoPi * rng.uniform());
        const int nf = rng.uniform_int(0, max_factors);
        std::vector<cplx> factors;
        factors.reserve(static_cast<std::size_t>(nf));
        for (int f = 0; f < nf; ++f) {
            const double radius = std::sqrt(rng.uniform());
            factors.push_back(std::polar(radius, kTwoPi * rng.uniform()));
        }
        const int power = rng.uniform_int(1, 3);
        words.push_back(SchwarzWord::make(rotation, std::move(factors), power));
    }
    return words;
}

std::string Target::describe() const {
    switch (kind) {
        case Functional::T22: return "t22";
        case Functional::T31: return "t31";
        case Functional::FS: {
            std::ostringstream os;
            os.precision(17);
            os << "fs(" << lambda.real() << "," << lambda.imag() << ")";
            return os.str();
        }
    }
    return "?";
}

double evaluate_target(const Target& t, const CoeffJet& j) {
    switch (t.kind) {
        case Functional::T22: return std::abs(det_t22(j));
        case Functional::T31: return std::abs(det_t31(j));
        case Functional::FS: return std::abs(j.b3 - t.lambda * j.b2 * j.b2);
    }
    return 0.0;
}

CoeffJet coeffs_from_jet_body(const Jet2& jet, const JetBodyPoint& p) {
    const cplx b2 = jet.d1 * p.w1;
    const cplx second = jet.d1 * p.w2 + 0.5 * jet.d2 * p.w1 * p.w1;  // 2 b3 - b2^2
    return {b2, 0.5 * (second + b2 * b2)};
}

OracleResult oracle_sup(const PhiSpec& phi, const Target& target, const OracleOptions& opts) {
    if (opts.grid < 8) throw std::invalid_argument("oracle grid must be at least 8");
    const Jet2 jet = jet2(phi);
    switch (target.kind) {
        case Functional::T22: return run_oracle(jet, T22Sq{}, opts);
        case Functional::T31: return run_oracle(jet, T31Sq{}, opts);
        case Functional::FS:
            return run_oracle(jet, FsSq{target.lambda.real(), target.lambda.imag()}, opts);
    }
    throw std::logic_error("unknown target");
}

std::string to_string(Theorem t) { return t == Theorem::T22 ? "t22" : "t31"; }

VerificationReport montecarlo_verify(const PhiSpec& phi, Theorem theorem, std::size_t count,
                                     std::uint64_t seed, const McOptions& opts) {
    const Jet2 jet = jet2(phi);
    const bool holds = theorem == Theorem::T22 ? condition_t22(jet) : condition_t31(jet);
    if (!holds) {
        throw ConditionNotMet("hypothesis of the " + to_string(theorem) + " bound fails for " +
                              phi.describe());
    }
    const double bound = theorem == Theorem::T22 ? t22_bound(jet) : t31_bound(jet);
    const Target target = theorem == Theorem::T22 ? Target::t22() : Target::t31();

    VerificationReport rep{
        .family = phi.describe(),
        .theorem = theorem,
        .samples = count,
        .seed = seed,
        .bound = bound,
        .max_observed = 0.0,
        .argmax_index = 0,
        .margin_histogram = std::vector<std::size_t>(10, 0),
        .violations = {},
    };
    if (count == 0) return rep;

    const auto words = sample_words(count, seed, opts.max_factors);
    const Series phi_s = phi_series(phi, opts.order);
    std::vector<double> values(count);
    detail::parallel_chunks(count, detail::worker_count(opts.threads, count),
                            [&](unsigned, std::size_t begin, std::size_t end) {
                                for (std::size_t i = begin; i < end; ++i) {
                                    const Series g =
                                        times_z(lift_from_phi_series(phi_s, words[i], opts.order));
                                    values[i] = evaluate_target(target, coeff_jet(g));
                                }
                            });

    for (std::size_t i = 0; i < count; ++i) {
        const double v = values[i];
        if (v > rep.max_observed) {
            rep.max_observed = v;
            rep.argmax_index = i;
        }
        if (v > bound + opts.tol) {
            rep.violations.push_back({i, words[i], v});
            continue;
        }
        const double slack = std::clamp((bound - v) / bound, 0.0, 1.0);
        const auto bin = std::min<std::size_t>(9, static_cast<std::size_t>(slack * 10.0));
        ++rep.margin_histogram[bin];
    }
    return rep;
}

}  // namespace tlab
