#pragma once

#include <optional>
#include <string>

#include "tlab/phi.hpp"
#include "tlab/toeplitz.hpp"

namespace tlab {

/// g_Phi(z) = z exp( integral_0^z (Phi(i t) - 1)/t dt ).
/// Its coefficients are b2 = i Phi'(0), b3 = -(Phi''(0) + 2 Phi'(0)^2)/4.
Series extremal_g(const PhiSpec& phi, int order = kDefaultOrder);

inline constexpr double kCertifyTol = 1e-10;

struct BoundAttainment {
    double attained;  // |det| at g_Phi
    double bound;     // closed form
    double gap;       // |attained - bound|
    bool asserted;    // the theorem's condition holds, so the gap must vanish
};

struct ExtremalCertificate {
    std::string family;
    CoeffJet jet;
    BoundAttainment t22;
    BoundAttainment t31;
};

/// Builds g_Phi and compares |det T22|, |det T31| against the closed forms.
/// Throws CertificationFailed if an asserted gap exceeds `tol`.
ExtremalCertificate certify(const PhiSpec& phi, int order = kDefaultOrder,
                            double tol = kCertifyTol);

}  // namespace tlab
