#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "tlab/errors.hpp"
#include "tlab/phi.hpp"

using namespace tlab;
using tlab::test::check_coeffs;

namespace {

// Generalized binomial coefficients of (1+s z)^p, independent of the series engine.
std::vector<double> binomial_series(double p, double s, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    double coef = 1.0;
    for (int k = 0; k <= order; ++k) {
        c[k] = coef * std::pow(s, k);
        coef *= (p - k) / (k + 1);
    }
    return c;
}

std::vector<PhiSpec> random_builtins(Rng& rng, int count) {
    std::vector<PhiSpec> out;
    for (int i = 0; i < count; ++i) {
        switch (i % 4) {
            case 0: out.push_back(PhiSpec::half_plane()); break;
            case 1: out.push_back(PhiSpec::alpha(rng.uniform(0.0, 0.999))); break;
            case 2: {
                const double d = rng.uniform(-0.99, 1.0);
                out.push_back(PhiSpec::janowski(d, rng.uniform(-1.0, d - 1e-3)));
                break;
            }
            default: out.push_back(PhiSpec::power(rng.uniform(0.01, 1.0))); break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("jet2 closed forms") {
    const auto hp = jet2(PhiSpec::half_plane());
    CHECK(hp.d1 == 2.0);
    CHECK(hp.d2 == 4.0);

    const auto a = jet2(PhiSpec::alpha(0.25));
    CHECK(a.d1 == doctest::Approx(1.5));
    CHECK(a.d2 == doctest::Approx(3.0));

    const auto j = jet2(PhiSpec::janowski(0.8, -0.6));
    CHECK(j.d1 == doctest::Approx(1.4));
    CHECK(j.d2 == doctest::Approx(-2.0 * -0.6 * 1.4));

    const auto p = jet2(PhiSpec::power(0.5));
    CHECK(p.d1 == doctest::Approx(1.0));
    CHECK(p.d2 == doctest::Approx(1.0));
}

TEST_CASE("family reductions share the half-plane jet exactly") {
    const auto hp = jet2(PhiSpec::half_plane());
    for (const auto& phi : {PhiSpec::alpha(0.0), PhiSpec::power(1.0), PhiSpec::janowski(1.0, -1.0)}) {
        const auto j = jet2(phi);
        CHECK(j.d1 == hp.d1);
        CHECK(j.d2 == hp.d2);
    }
}

TEST_CASE("phi_series") {
    check_coeffs(phi_series(PhiSpec::half_plane(), 3), {1, 2, 2, 2});
    const Series hp = phi_series(PhiSpec::half_plane(), 16);
    CHECK(max_abs_diff(phi_series(PhiSpec::power(1.0), 16), hp) <= 1e-12);
    CHECK(max_abs_diff(phi_series(PhiSpec::janowski(1.0, -1.0), 16), hp) <= 1e-12);
    CHECK(max_abs_diff(phi_series(PhiSpec::alpha(0.0), 16), hp) <= 1e-12);
}

TEST_CASE("power series matches the binomial product (1+z)^g (1-z)^-g") {
    for (double g : {0.2, 1.0 / 3.0, 0.5, 0.77}) {
        const int n = 12;
        const auto up = binomial_series(g, 1.0, n);
        const auto down = binomial_series(-g, -1.0, n);
        std::vector<cplx> expected(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) expected[i + j] += up[i] * down[j];
        check_coeffs(phi_series(PhiSpec::power(g), n), expected, 1e-12);
    }
}

TEST_CASE("jet read from phi_series matches the closed form") {
    Rng rng(7);
    for (const auto& phi : random_builtins(rng, 400)) {
        CAPTURE(phi.describe());
        const Series s = phi_series(phi, 8);
        const Jet2 j = jet2(phi);
        CHECK(std::abs(s[0] - 1.0) <= 1e-12);
        CHECK(std::abs(s[1] - j.d1) <= 1e-12);
        CHECK(std::abs(2.0 * s[2] - j.d2) <= 1e-12);
        // conditions agree whether evaluated on the closed-form or the read jet
        const Jet2 read{s[1].real(), 2.0 * s[2].real()};
        const bool near_edge_22 =
            std::abs(std::abs(j.d2 + 2 * j.d1 * j.d1) - 2 * j.d1) < 1e-9;
        const bool near_edge_31 = std::abs(j.d2 - (2 * j.d1 - 2 * j.d1 * j.d1)) < 1e-9 ||
                                  std::abs(j.d2 - (6 * j.d1 * j.d1 - 2 * j.d1)) < 1e-9;
        if (!near_edge_22) CHECK(condition_t22(read) == condition_t22(j));
        if (!near_edge_31) CHECK(condition_t31(read) == condition_t31(j));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PhiSpec::alpha(1.0), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::alpha(-0.1), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::janowski(0.5, 0.5), InvalidParameters);  // D = E gives Phi'(0) = 0
    CHECK_THROWS_AS(PhiSpec::janowski(1.2, 0.0), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::janowski(0.0, -1.5), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::power(0.0), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::power(1.5), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::custom(Series({1, -1, 0}, 2)), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::custom(Series({1, 1, cplx{0, 1}}, 2)), InvalidParameters);
    CHECK_THROWS_AS(PhiSpec::custom(Series({2, 1, 0}, 2)), InvalidParameters);
}

TEST_CASE("parse_phi grammar") {
    CHECK(parse_phi("starlike").describe() == "starlike");
    CHECK(parse_phi("alpha:0.5").describe() == "alpha:0.5");
    CHECK(parse_phi("janowski:0.8:-0.6").describe() == "janowski:0.8:-0.6");
    CHECK(parse_phi("power:0.25").describe() == "power:0.25");
    CHECK_THROWS_AS(parse_phi("alpha"), InvalidParameters);
    CHECK_THROWS_AS(parse_phi("alpha:x"), InvalidParameters);
    CHECK_THROWS_AS(parse_phi("circle"), InvalidParameters);
    CHECK_THROWS_AS(parse_phi("custom:/nonexistent/file"), InvalidParameters);
}

TEST_CASE("custom coefficient file") {
    const auto path = std::filesystem::temp_directory_path() / "tlab_custom_phi.txt";
    {
        std::ofstream f(path);
        f << "# (1+z)/(1-z) truncated\n1\n2 0\n2\n2\n2\ninverse\n0\n0.5\n-0.25\n0.125\n";
    }
    const PhiSpec phi = parse_phi("custom:" + path.string());
    const Jet2 j = jet2(phi);
    CHECK(j.d1 == 2.0);
    CHECK(j.d2 == 4.0);
    // (w-1)/(w+1) = u/2 - u^2/4 + u^3/8 - ... with u = w - 1
    CHECK_CLOSE(phi_inverse(phi, 1.2), 0.2 / 2.2, 1e-4);
    const auto no_inv = PhiSpec::custom(Series({1, 2, 2, 2}, 3));
    CHECK_THROWS_AS(phi_inverse(no_inv, 1.0), NoInverseAvailable);
    CHECK_THROWS_AS(subordination_check(Series::constant(1.0, 3), no_inv), NoInverseAvailable);
    std::filesystem::remove(path);
}

TEST_CASE("phi_inverse undoes phi for built-ins") {
    Rng rng(99);
    for (const auto& phi : random_builtins(rng, 80)) {
        CAPTURE(phi.describe());
        const Series s = phi_series(phi, 200);
        for (int t = 0; t < 5; ++t) {
            const cplx z = std::polar(rng.uniform(0.0, 0.5), rng.uniform(0.0, 6.283185307179586));
            CHECK_CLOSE(phi_inverse(phi, s.eval(z)), z, 1e-10);
        }
    }
}

TEST_CASE("condition_t22") {
    CHECK(condition_t22(PhiSpec::half_plane()));
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const double d = rng.uniform(-0.99, 1.0);
        const double e = rng.uniform(-1.0, d - 1e-3);
        if (std::abs(std::abs(d - 2 * e) - 1.0) < 1e-9) continue;
        CHECK(condition_t22(PhiSpec::janowski(d, e)) == (std::abs(d - 2 * e) >= 1.0));
    }
    for (int i = 0; i < 300; ++i) {
        const double g = rng.uniform(0.001, 1.0);
        if (std::abs(g - 1.0 / 3.0) < 1e-9) continue;
        CHECK(condition_t22(PhiSpec::power(g)) == (g >= 1.0 / 3.0));
    }
}

TEST_CASE("condition_t31") {
    CHECK(condition_t31(PhiSpec::half_plane()));
    CHECK_FALSE(condition_t31(PhiSpec::power(0.25)));
    Rng rng(6);
    for (int i = 0; i < 300; ++i) {
        const double a = rng.uniform(0.0, 0.999);
        if (std::abs(a - 2.0 / 3.0) < 1e-9) continue;
        CHECK(condition_t31(PhiSpec::alpha(a)) == (a <= 2.0 / 3.0));
    }
    // Janowski: E <= min{(D-1)/2, (3D-1)/2}
    for (int i = 0; i < 300; ++i) {
        const double d = rng.uniform(-0.99, 1.0);
        const double e = rng.uniform(-1.0, d - 1e-3);
        const double lim = std::min((d - 1) / 2, (3 * d - 1) / 2);
        if (std::abs(e - lim) < 1e-9) continue;
        CHECK(condition_t31(PhiSpec::janowski(d, e)) == (e <= lim));
    }
}

TEST_CASE("subordination_check") {
    for (const auto& phi : {PhiSpec::half_plane(), PhiSpec::alpha(0.4), PhiSpec::janowski(0.8, -0.6),
                            PhiSpec::power(0.5)}) {
        CAPTURE(phi.describe());
        const Series half_z = Series::monomial(0.5, 1, 16);
        CHECK(subordination_check(compose(phi_series(phi, 16), half_z), phi));
        CHECK(subordination_check(Series::constant(1.0, 16), phi));
    }
    // Phi^{-1}(1 + 10z) at z = -0.3 is (-3)/(-1) = 3
    CHECK_FALSE(subordination_check(Series({1, 10}, 16), PhiSpec::half_plane()));
    CHECK_THROWS_AS(subordination_check(Series::constant(2.0, 4), PhiSpec::half_plane()),
                    std::invalid_argument);
}
