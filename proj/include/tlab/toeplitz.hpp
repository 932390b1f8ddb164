#pragma once

#include <span>

#include "tlab/series.hpp"

namespace tlab {

/// Second and third Taylor coefficients of g(z) = z + b2 z^2 + b3 z^3 + ...
struct CoeffJet {
    cplx b2;
    cplx b3;
};

/// Reads (b2, b3) from a normalized series; throws NotNormalized unless
/// g(0) = 0 and g'(0) = 1.
CoeffJet coeff_jet(const Series& g);

/// det T_{2,2} = b2^2 - b3^2
cplx det_t22(const CoeffJet& j);

/// det T_{3,1} = 2 b2^2 b3 - 2 b2^2 - b3^2 + 1
cplx det_t31(const CoeffJet& j);

/// Determinant of the m x m symmetric Toeplitz matrix with the given first
/// row, by Gaussian elimination with partial pivoting. m <= 6.
cplx det_generic(std::span<const cplx> first_row);

}  // namespace tlab
