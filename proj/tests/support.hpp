#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "tlab/rng.hpp"
#include "tlab/series.hpp"

namespace tlab::test {

inline cplx random_unit_square(Rng& rng) { return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}; }

inline Series random_series(Rng& rng, int order, bool zero_constant = false) {
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = random_unit_square(rng);
    if (zero_constant) c[0] = 0.0;
    return Series(std::move(c), order);
}

inline bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

#define CHECK_CLOSE(a, b, tol) CHECK(std::abs(::tlab::cplx(a) - ::tlab::cplx(b)) <= (tol))
#define REQUIRE_CLOSE(a, b, tol) REQUIRE(std::abs(::tlab::cplx(a) - ::tlab::cplx(b)) <= (tol))

inline void check_coeffs(const Series& s, const std::vector<cplx>& expected, double tol = 1e-12) {
    REQUIRE(s.order() + 1 >= static_cast<int>(expected.size()));
    for (std::size_t k = 0; k < expected.size(); ++k) {
        INFO("coefficient " << k << ": got " << s[static_cast<int>(k)] << " expected " << expected[k]);
        CHECK(std::abs(s[static_cast<int>(k)] - expected[k]) <= tol);
    }
}

}  // namespace tlab::test
