#include <doctest.h>

#include "support.hpp"
#include "tlab/bounds.hpp"
#include "tlab/errors.hpp"
#include "tlab/highdim.hpp"
#include "tlab/sampler.hpp"

using namespace tlab;

namespace {

using Vec = std::vector<cplx>;

// Coefficient of t^k in G(t v) = t v h(t ell(v)), read off a univariate
// series composition rather than the closed-form homogeneous terms.
Vec restriction_coeff(const Series& h, const Vec& v, cplx ell_v, int k) {
    const int order = h.order();
    const Series along = times_z(compose(h, Series::monomial(ell_v, 1, order)));
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = along[k] * v[j];
    return out;
}

Vec combine(const Vec& a, const Vec& b, double sign) {
    Vec out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + sign * b[j];
    return out;
}

double max_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

Series random_lift(Rng& rng, const PhiSpec& phi, int order) {
    const auto words = sample_words(1, rng.uniform_int(0, 1u << 30));
    return lift_from_schwarz(phi, words[0], order);
}

}  // namespace

TEST_CASE("norms and points") {
    const Vec v{cplx{0.3, 0.4}, 0.2};
    CHECK(norm_of(v, NormKind::Sup) == doctest::Approx(0.5));
    CHECK(norm_of(v, NormKind::Euclidean) == doctest::Approx(std::sqrt(0.29)));
    CHECK(parse_norm_kind("sup") == NormKind::Sup);
    CHECK(parse_norm_kind("euclid") == NormKind::Euclidean);
    CHECK_THROWS_AS(parse_norm_kind("l1"), InvalidParameters);
    CHECK_THROWS_AS(NormedPoint::make({0.0, 0.0}, NormKind::Sup), InvalidParameters);
    CHECK_THROWS_AS(NormedPoint::make({1.0, 0.0}, NormKind::Sup), InvalidParameters);
    CHECK_THROWS_AS(NormedPoint::make({0.8, 0.8}, NormKind::Euclidean), InvalidParameters);
    CHECK(NormedPoint::make({0.4, cplx{0, -0.4}, 0.1}, NormKind::Sup).k_index() == 0);
    CHECK(NormedPoint::make({0.1, cplx{0, -0.4}, 0.4}, NormKind::Sup).k_index() == 1);
}

TEST_CASE("l_z examples") {
    const auto z = NormedPoint::make({0.5, 0.2}, NormKind::Sup);
    const LzFunctional l(z);
    CHECK_CLOSE(l.apply(Vec{cplx{0.7, -0.1}, 3.0}), cplx(0.7, -0.1), 1e-15);
    CHECK_CLOSE(l.apply(z.coords()), 0.5, 1e-15);
    CHECK_THROWS_AS(l.apply(Vec{1.0}), DimensionMismatch);

    const auto e = NormedPoint::make({cplx{0.3, 0.1}, cplx{0, 0.2}}, NormKind::Euclidean);
    const LzFunctional le(e);
    CHECK_CLOSE(le.apply(e.coords()), e.norm(), 1e-15);
    // orthogonal to (a, b) is (-conj(b), conj(a))
    CHECK_CLOSE(le.apply(Vec{-std::conj(e.coords()[1]), std::conj(e.coords()[0])}), 0.0, 1e-15);
}

TEST_CASE("l_z has norm one") {
    Rng rng(12);
    for (NormKind kind : {NormKind::Sup, NormKind::Euclidean}) {
        for (int i = 0; i < 200; ++i) {
            const std::size_t n = 2 + i % 4;
            const auto z = sample_point(rng, n, kind);
            const LzFunctional l(z);
            CHECK_CLOSE(l.apply(z.coords()), z.norm(), 1e-14);
            Vec w(n);
            for (auto& x : w) x = tlab::test::random_unit_square(rng);
            CHECK(std::abs(l.apply(w)) <= norm_of(w, kind) + 1e-14);
            const auto u = sample_unit(rng, n, kind);
            CHECK(std::abs(norm_of(u, kind) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("homogeneous terms of the starlike extremal") {
    const Series h = extremal_lift(PhiSpec::half_plane());
    CHECK_CLOSE(h[1], cplx(0, 2), 1e-14);
    CHECK_CLOSE(h[2], -3.0, 1e-14);
    const double r = 0.7;
    const auto t = homogeneous_terms(h, NormedPoint::make({r, 0.0}, NormKind::Sup));
    CHECK(max_diff(t.q2, {cplx(0, 2 * r * r), 0.0}) <= 1e-14);
    CHECK(max_diff(t.q3, {-3 * r * r * r, 0.0}) <= 1e-14);
    CHECK(max_diff(t.b2sq_vec, {-4 * r * r * r, 0.0}) <= 1e-14);

    const auto id = homogeneous_terms(Series::constant(1.0, 4), NormedPoint::make({0.2, 0.3}, NormKind::Sup));
    CHECK(max_diff(id.q2, {0.0, 0.0}) == 0.0);
    CHECK(max_diff(id.q3, {0.0, 0.0}) == 0.0);
    CHECK_THROWS(homogeneous_terms(Series::constant(2.0, 4), NormedPoint::make({0.2, 0.3}, NormKind::Sup)));
}

TEST_CASE("homogeneous terms agree with the restriction oracle") {
    Rng rng(21);
    const PhiSpec phi = PhiSpec::janowski(0.8, -0.6);
    for (int i = 0; i < 200; ++i) {
        const Series h = random_lift(rng, phi, 8);
        const NormKind kind = i % 2 ? NormKind::Euclidean : NormKind::Sup;
        const std::size_t n = 2 + i % 4;
        const auto z = sample_point(rng, n, kind);
        Direction dir = Coordinate{static_cast<std::size_t>(i) % n};
        if (i % 3 == 0) dir = AlongFunctional{sample_unit(rng, n, kind)};
        const auto t = homogeneous_terms(h, z, dir);

        auto lin = [&](const Vec& v) { return ell(dir, v, kind); };
        CHECK(max_diff(t.q2, restriction_coeff(h, z.coords(), lin(z.coords()), 2)) <= 1e-12);
        CHECK(max_diff(t.q3, restriction_coeff(h, z.coords(), lin(z.coords()), 3)) <= 1e-12);
        // (1/2) D^2G(0)(z, q2) by polarization of the quadratic form Q(x) = D^2G(0)(x^2)/2
        const Vec plus = combine(z.coords(), t.q2, 1.0);
        const Vec minus = combine(z.coords(), t.q2, -1.0);
        const Vec qp = restriction_coeff(h, plus, lin(plus), 2);
        const Vec qm = restriction_coeff(h, minus, lin(minus), 2);
        Vec polar(n);
        for (std::size_t j = 0; j < n; ++j) polar[j] = (qp[j] - qm[j]) / 4.0;
        CHECK(max_diff(t.b2sq_vec, polar) <= 1e-12);
    }
}

TEST_CASE("ball theorems: equality along z = r u") {
    Rng rng(8);
    for (const auto& phi : {PhiSpec::half_plane(), PhiSpec::alpha(0.3), PhiSpec::janowski(0.8, -0.6)}) {
        const Series h = extremal_lift(phi);
        const Jet2 jet = jet2(phi);
        for (NormKind kind : {NormKind::Sup, NormKind::Euclidean}) {
            for (double r : {0.3, 0.6, 0.9}) {
                const auto u = sample_unit(rng, 3, kind);
                Vec z(3);
                for (std::size_t j = 0; j < 3; ++j) z[j] = r * u[j];
                const auto m = verify_ball(phi, h, NormedPoint::make(z, kind), AlongFunctional{u});
                CHECK(std::abs(m.t22.lhs - t22_bound(jet)) <= 1e-9);
                CHECK(std::abs(m.t31.lhs - t31_bound(jet)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("ball theorems: identity mapping") {
    const auto m = verify_ball(PhiSpec::half_plane(), Series::constant(1.0, 4),
                               NormedPoint::make({0.3, -0.2}, NormKind::Euclidean));
    CHECK(m.t31.lhs == doctest::Approx(1.0));
    CHECK(m.t31.margin == doctest::Approx(23.0));
    CHECK(m.t22.lhs == 0.0);
}

TEST_CASE("polydisc extremal values") {
    const PhiSpec hp = PhiSpec::half_plane();
    const Series h = extremal_lift(hp);
    for (std::size_t n : {2u, 3u, 5u}) {
        for (double r : {0.3, 0.6, 0.9}) {
            Vec z(n, 0.0);
            z[0] = r;
            const auto m = verify_polydisc(hp, h, NormedPoint::make(z, NormKind::Sup));
            CHECK(std::abs(m.res.lhs - (9 * std::pow(r, 6) + 4 * std::pow(r, 4))) <= 1e-9);
            CHECK(std::abs(m.res.margin) <= 1e-9);
            // b2sq_vec is cubic in z, so the attained value carries r^3, not r^4
            CHECK(std::abs(m.un2.lhs - (15 * std::pow(r, 6) + 8 * std::pow(r, 3) + 1)) <= 1e-9);
            CHECK(std::abs(m.un2_homogeneous.margin) <= 1e-9);
            CHECK(m.un2.bound == doctest::Approx(15 * std::pow(r, 6) + 8 * std::pow(r, 4) + 1));
            CHECK(m.un2.margin < 0.0);
        }
    }
    CHECK_THROWS_AS(verify_polydisc(hp, h, NormedPoint::make({0.3, 0.0}, NormKind::Euclidean)),
                    InvalidParameters);
}

TEST_CASE("polydisc identity mapping") {
    const auto m = verify_polydisc(PhiSpec::alpha(0.5), Series::constant(1.0, 4),
                                   NormedPoint::make({0.3, cplx(0, 0.5)}, NormKind::Sup));
    CHECK(m.res.lhs == 0.0);
    CHECK(m.res.margin > 0.0);
}

TEST_CASE("sup-norm ties do not change the verified quantities") {
    const PhiSpec phi = PhiSpec::power(0.6);
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        const Series h = random_lift(rng, phi, 6);
        const double r = rng.uniform(0.1, 0.95);
        const cplx a = std::polar(r, rng.uniform(0.0, 6.28));
        // conjugation and negation keep the modulus bit-for-bit, so the tie is exact
        const cplx tied[] = {std::conj(a), -a, -std::conj(a)};
        const Vec z{a, tied[i % 3], std::polar(r * 0.5, 1.0)};
        const auto p = NormedPoint::make(z, NormKind::Sup);
        REQUIRE(p.k_index() == 0);
        const auto m = verify_ball(phi, h, p, Coordinate{0});
        const auto t = homogeneous_terms(h, p, Coordinate{0});
        // the support functional through the other tied index
        auto l1 = [&](const Vec& w) { return w[1] * std::conj(z[1]) / std::abs(z[1]); };
        CHECK_CLOSE(l1(t.q2) / (r * r), m.b2, 1e-12);
        CHECK_CLOSE(l1(t.q3) / (r * r * r), m.b3, 1e-12);
    }
}

TEST_CASE("n = 1 reduces to the scalar theorems") {
    const PhiSpec phi = PhiSpec::alpha(0.2);
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        const auto words = sample_words(1, 1000 + i);
        const Series h = lift_from_schwarz(phi, words[0], 8);
        const auto m = verify_ball(phi, h, NormedPoint::make({rng.uniform(0.05, 0.95)}, NormKind::Sup));
        const CoeffJet cj = coeff_jet(g_from_schwarz(phi, words[0], 8));
        CHECK_CLOSE(m.b2, cj.b2, 1e-12);
        CHECK_CLOSE(m.b3, cj.b3, 1e-12);
        CHECK(std::abs(m.t22.lhs - std::abs(det_t22(cj))) <= 1e-12);
        CHECK(m.t22.bound == doctest::Approx(t22_bound(jet2(phi))));
    }
}

TEST_CASE("right-hand sides increase with the radius") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const Jet2 jet = jet2(PhiSpec::alpha(rng.uniform(0.0, 2.0 / 3.0)));
        double prev_res = 0.0;
        double prev_un2 = 0.0;
        for (int k = 1; k < 64; ++k) {
            const double r = k / 64.0;
            CHECK(res_rhs(jet, r) > prev_res);
            CHECK(un2_rhs_homogeneous(jet, r) > prev_un2);
            prev_res = res_rhs(jet, r);
            prev_un2 = un2_rhs_homogeneous(jet, r);
        }
    }
}

TEST_CASE("random sweeps keep the ball and res margins") {
    for (std::size_t n : {2u, 3u, 5u}) {
        const auto sup = highdim_sweep(PhiSpec::half_plane(), n, NormKind::Sup, 100, 77);
        CHECK(sup.min_ball_t22 >= -1e-9);
        CHECK(sup.min_ball_t31 >= -1e-9);
        CHECK(sup.min_res >= -1e-9);
        CHECK(sup.min_un2_homogeneous >= -1e-9);
        const auto euc = highdim_sweep(PhiSpec::janowski(0.8, -0.6), n, NormKind::Euclidean, 100, 78);
        CHECK(euc.violations.empty());
    }
    HighdimOptions opts;
    opts.homogeneous_un2 = true;
    CHECK(highdim_sweep(PhiSpec::alpha(0.5), 3, NormKind::Sup, 100, 5, opts).violations.empty());
}

TEST_CASE("enforce") {
    BallMargins bad{};
    bad.t22 = {2.0, 1.0, -1.0, true};
    bad.t31 = {0.0, 1.0, 1.0, true};
    CHECK_THROWS_AS(enforce(bad, 1e-9), BoundViolated);
    bad.t22.asserted = false;
    CHECK_NOTHROW(enforce(bad, 1e-9));
}
