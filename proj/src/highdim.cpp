#include "tlab/highdim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tlab/bounds.hpp"
#include "tlab/errors.hpp"
#include "tlab/sampler.hpp"

namespace tlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t sup_index(std::span<const cplx> w) {
    std::size_t k = 0;
    for (std::size_t j = 1; j < w.size(); ++j) {
        if (std::abs(w[j]) > std::abs(w[k])) k = j;  // strict: ties keep the lowest index
    }
    return k;
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

Check make_check(double lhs, double bound, bool asserted) {
    return {lhs, bound, bound - lhs, asserted};
}

std::string describe_direction(const Direction& dir) {
    if (const auto* c = std::get_if<Coordinate>(&dir)) {
        return "coordinate:" + std::to_string(c->index);
    }
    std::ostringstream os;
    os.precision(17);
    os << "functional:[";
    const auto& u = std::get<AlongFunctional>(dir).u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) os << ";";
        os << "(" << u[i].real() << "," << u[i].imag() << ")";
    }
    os << "]";
    return os.str();
}

double gaussian(Rng& rng) {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace

std::string to_string(NormKind k) { return k == NormKind::Sup ? "sup" : "euclid"; }

NormKind parse_norm_kind(std::string_view s) {
    if (s == "sup") return NormKind::Sup;
    if (s == "euclid" || s == "euclidean") return NormKind::Euclidean;
    throw InvalidParameters("unknown norm kind '" + std::string(s) + "'");
}

double norm_of(std::span<const cplx> w, NormKind kind) {
    if (kind == NormKind::Sup) {
        double m = 0.0;
        for (const cplx& x : w) m = std::max(m, std::abs(x));
        return m;
    }
    double s = 0.0;
    for (const cplx& x : w) s += std::norm(x);
    return std::sqrt(s);
}

NormedPoint NormedPoint::make(std::vector<cplx> coords, NormKind kind) {
    if (coords.empty()) throw InvalidParameters("point must have at least one coordinate");
    const double n = norm_of(coords, kind);
    if (!(n > 0.0 && n < 1.0)) {
        throw InvalidParameters("point must satisfy 0 < ||z|| < 1");
    }
    const std::size_t k = sup_index(coords);
    return NormedPoint(std::move(coords), kind, n, k);
}

LzFunctional::LzFunctional(std::vector<cplx> base, NormKind kind)
    : base_(std::move(base)), kind_(kind), norm_(norm_of(base_, kind)), k_index_(sup_index(base_)) {
    if (!(norm_ > 0.0)) throw InvalidParameters("support functional needs a nonzero base point");
}

LzFunctional::LzFunctional(const NormedPoint& base) : LzFunctional(base.coords(), base.kind()) {}

LzFunctional LzFunctional::support(std::span<const cplx> base, NormKind kind) {
    return LzFunctional(std::vector<cplx>(base.begin(), base.end()), kind);
}

cplx LzFunctional::apply(std::span<const cplx> w) const {
    if (w.size() != base_.size()) throw DimensionMismatch(base_.size(), w.size());
    if (kind_ == NormKind::Sup) {
        const cplx zk = base_[k_index_];
        return w[k_index_] * std::conj(zk) / std::abs(zk);
    }
    cplx acc{};
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * std::conj(base_[j]);
    return acc / norm_;
}

cplx ell(const Direction& dir, std::span<const cplx> w, NormKind kind) {
    if (const auto* c = std::get_if<Coordinate>(&dir)) {
        if (c->index >= w.size()) throw DimensionMismatch(c->index + 1, w.size());
        return w[c->index];
    }
    return LzFunctional::support(std::get<AlongFunctional>(dir).u, kind).apply(w);
}

HomogeneousTerms homogeneous_terms(const Series& h, const NormedPoint& z, const Direction& dir) {
    if (h.order() < 2) throw std::invalid_argument("lift series needs order >= 2");
    if (std::abs(h[0] - cplx{1.0}) > kCoeffTol) {
        throw std::invalid_argument("lift series must satisfy h(0) = 1");
    }
    const auto& x = z.coords();
    const cplx lz = ell(dir, x, z.kind());
    HomogeneousTerms t;
    t.q2.reserve(x.size());
    t.q3.reserve(x.size());
    for (const cplx& xj : x) {
        t.q2.push_back(h[1] * lz * xj);
        t.q3.push_back(h[2] * lz * lz * xj);
    }
    // The quadratic part Q(v) = h1 ell(v) v polarizes to
    // B(v, w) = h1 (ell(v) w + ell(w) v) / 2, and D^2G(0)(v, w) = 2 B(v, w).
    const cplx lq2 = ell(dir, t.q2, z.kind());
    t.b2sq_vec.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        t.b2sq_vec.push_back(0.5 * h[1] * (lz * t.q2[j] + lq2 * x[j]));
    }
    return t;
}

BallMargins verify_ball(const PhiSpec& phi, const Series& h, const NormedPoint& z,
                        const Direction& dir) {
    const Jet2 jet = jet2(phi);
    const HomogeneousTerms t = homogeneous_terms(h, z, dir);
    const LzFunctional lz(z);
    const double r = z.norm();
    const cplx b2 = lz.apply(t.q2) / (r * r);
    const cplx b3 = lz.apply(t.q3) / (r * r * r);
    const CoeffJet cj{b2, b3};
    return BallMargins{
        .b2 = b2,
        .b3 = b3,
        .t22 = make_check(std::abs(det_t22(cj)), t22_bound(jet), condition_t22(jet)),
        .t31 = make_check(std::abs(det_t31(cj)), t31_bound(jet), condition_t31(jet)),
    };
}

double res_rhs(const Jet2& jet, double norm) {
    const double sq = jet.d1 * jet.d1;
    const double mid = 0.5 * jet.d2 / jet.d1 + jet.d1;
    return sq * std::pow(norm, 6) / 4.0 * mid * mid + sq * std::pow(norm, 4);
}

namespace {

double un2_cubic_part(const Jet2& jet, double norm) {
    const double sq = jet.d1 * jet.d1;
    const double ratio = jet.d2 / (2.0 * jet.d1);
    return sq * std::pow(norm, 6) / 4.0 * (3.0 * jet.d1 - ratio) * (ratio + jet.d1);
}

}  // namespace

double un2_rhs(const Jet2& jet, double norm) {
    return 1.0 + un2_cubic_part(jet, norm) + 2.0 * jet.d1 * jet.d1 * std::pow(norm, 4);
}

double un2_rhs_homogeneous(const Jet2& jet, double norm) {
    return 1.0 + un2_cubic_part(jet, norm) + 2.0 * jet.d1 * jet.d1 * std::pow(norm, 3);
}

PolydiscMargins verify_polydisc(const PhiSpec& phi, const Series& h, const NormedPoint& z,
                                const Direction& dir) {
    if (z.kind() != NormKind::Sup) {
        throw InvalidParameters("polydisc verification requires the sup norm");
    }
    const Jet2 jet = jet2(phi);
    const HomogeneousTerms t = homogeneous_terms(h, z, dir);
    const std::size_t n = z.dim();
    std::vector<cplx> res(n);
    std::vector<cplx> un2(n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx q2 = t.q2[k];
        const cplx q3 = t.q3[k];
        const cplx b = t.b2sq_vec[k];
        res[k] = q3 * q3 - q2 * q2;
        un2[k] = 2.0 * b * q3 - q3 * q3 - 2.0 * b + 1.0;
    }
    const double r = z.norm();
    const bool c22 = condition_t22(jet);
    const bool c31 = condition_t31(jet);
    const double un2_lhs = max_abs(un2);
    return PolydiscMargins{
        .res = make_check(max_abs(res), res_rhs(jet, r), c22),
        .un2 = make_check(un2_lhs, un2_rhs(jet, r), c31),
        .un2_homogeneous = make_check(un2_lhs, un2_rhs_homogeneous(jet, r), c31),
    };
}

void enforce(const BallMargins& m, double tol) {
    for (const auto& [name, c] : {std::pair{"ball t22", m.t22}, std::pair{"ball t31", m.t31}}) {
        if (c.asserted && c.margin < -tol) {
            throw BoundViolated(std::string(name) + " bound exceeded by " + std::to_string(-c.margin));
        }
    }
}

void enforce(const PolydiscMargins& m, double tol, bool homogeneous_un2) {
    const Check& un2 = homogeneous_un2 ? m.un2_homogeneous : m.un2;
    for (const auto& [name, c] : {std::pair{"polydisc res", m.res}, std::pair{"polydisc t31", un2}}) {
        if (c.asserted && c.margin < -tol) {
            throw BoundViolated(std::string(name) + " bound exceeded by " + std::to_string(-c.margin));
        }
    }
}

Series extremal_lift(const PhiSpec& phi, int order) {
    const Series it = Series::monomial(cplx{0.0, 1.0}, 1, order);
    const Series phi_it = compose(phi_series(phi, order), it);
    return exp_series(integrate_div_t(phi_it - Series::constant(1.0, order)));
}

std::vector<cplx> sample_unit(Rng& rng, std::size_t n, NormKind kind) {
    std::vector<cplx> u(n);
    while (true) {
        if (kind == NormKind::Sup) {
            for (auto& x : u) x = std::polar(std::sqrt(rng.uniform()), kTwoPi * rng.uniform());
        } else {
            for (auto& x : u) x = cplx{gaussian(rng), gaussian(rng)};
        }
        const double nrm = norm_of(u, kind);
        if (nrm > 0.0) {
            for (auto& x : u) x /= nrm;
            return u;
        }
    }
}

NormedPoint sample_point(Rng& rng, std::size_t n, NormKind kind, double max_norm) {
    if (!(max_norm > 0.0 && max_norm < 1.0)) {
        throw InvalidParameters("max_norm must lie in (0, 1)");
    }
    while (true) {
        std::vector<cplx> z(n);
        if (kind == NormKind::Sup) {
            for (auto& x : z) x = std::polar(max_norm * std::sqrt(rng.uniform()), kTwoPi * rng.uniform());
        } else {
            const auto u = sample_unit(rng, n, kind);
            const double radius = max_norm * std::pow(rng.uniform(), 1.0 / (2.0 * static_cast<double>(n)));
            for (std::size_t j = 0; j < n; ++j) z[j] = radius * u[j];
        }
        const double nrm = norm_of(z, kind);
        if (nrm > 0.0 && nrm < 1.0) return NormedPoint::make(std::move(z), kind);
    }
}

HighdimSweep highdim_sweep(const PhiSpec& phi, std::size_t n, NormKind kind, std::size_t count,
                           std::uint64_t seed, const HighdimOptions& opts) {
    if (n == 0) throw InvalidParameters("dimension must be at least 1");
    HighdimSweep sweep;
    sweep.n = n;
    sweep.kind = kind;
    sweep.samples = count;
    sweep.seed = seed;
    const auto words = sample_words(count, seed, opts.max_factors);
    Rng rng = Rng(seed).split(1);
    double min_t22 = INFINITY, min_t31 = INFINITY, min_res = INFINITY, min_un2 = INFINITY,
           min_un2h = INFINITY;
    for (std::size_t i = 0; i < count; ++i) {
        const Series h = lift_from_schwarz(phi, words[i], opts.order);
        const NormedPoint z = sample_point(rng, n, kind);
        Direction dir = Coordinate{0};
        if (i % 2 == 1) dir = AlongFunctional{sample_unit(rng, n, kind)};
        HighdimSample s{i, z.coords(), words[i].describe(), describe_direction(dir),
                        verify_ball(phi, h, z, dir), std::nullopt};
        bool bad = false;
        auto track = [&](double& mn, const Check& c) {
            mn = std::min(mn, c.margin);
            if (c.asserted && c.margin < -opts.tol) bad = true;
        };
        track(min_t22, s.ball.t22);
        track(min_t31, s.ball.t31);
        if (kind == NormKind::Sup) {
            s.polydisc = verify_polydisc(phi, h, z, dir);
            track(min_res, s.polydisc->res);
            if (opts.homogeneous_un2) {
                track(min_un2h, s.polydisc->un2_homogeneous);
                min_un2 = std::min(min_un2, s.polydisc->un2.margin);
            } else {
                track(min_un2, s.polydisc->un2);
                min_un2h = std::min(min_un2h, s.polydisc->un2_homogeneous.margin);
            }
        }
        if (bad) sweep.violations.push_back(std::move(s));
    }
    auto finite_or_zero = [](double v) { return std::isfinite(v) ? v : 0.0; };
    sweep.min_ball_t22 = finite_or_zero(min_t22);
    sweep.min_ball_t31 = finite_or_zero(min_t31);
    sweep.min_res = finite_or_zero(min_res);
    sweep.min_un2 = finite_or_zero(min_un2);
    sweep.min_un2_homogeneous = finite_or_zero(min_un2h);
    return sweep;
}

}  // namespace tlab
