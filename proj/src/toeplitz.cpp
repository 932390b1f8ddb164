#include "tlab/toeplitz.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "tlab/errors.hpp"

namespace tlab {

CoeffJet coeff_jet(const Series& g) {
    if (g.order() < 3) throw NotNormalized("series order must be at least 3 to read b2, b3");
    if (std::abs(g[0]) > kCoeffTol || std::abs(g[1] - cplx{1.0}) > kCoeffTol) {
        throw NotNormalized("series is not normalized (need g(0) = 0, g'(0) = 1)");
    }
    return {g[2], g[3]};
}

cplx det_t22(const CoeffJet& j) { return j.b2 * j.b2 - j.b3 * j.b3; }

cplx det_t31(const CoeffJet& j) {
    const cplx b2sq = j.b2 * j.b2;
    return 2.0 * b2sq * j.b3 - 2.0 * b2sq - j.b3 * j.b3 + 1.0;
}

cplx det_generic(std::span<const cplx> first_row) {
    constexpr std::size_t kMax = 6;
    const std::size_t m = first_row.size();
    if (m == 0 || m > kMax) {
        throw std::invalid_argument("det_generic supports sizes 1..6");
    }
    std::array<std::array<cplx, kMax>, kMax> a{};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            a[i][j] = first_row[i > j ? i - j : j - i];
        }
    }
    cplx det{1.0};
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (a[piv][col] == cplx{}) return cplx{};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < m; ++r) {
            const cplx f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace tlab
