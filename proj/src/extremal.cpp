#include "tlab/extremal.hpp"

#include <cmath>
#include <sstream>

#include "tlab/bounds.hpp"
#include "tlab/errors.hpp"

namespace tlab {

Series extremal_g(const PhiSpec& phi, int order) {
    const Series it = Series::monomial(cplx{0.0, 1.0}, 1, order);
    const Series phi_it = compose(phi_series(phi, order), it);
    return times_z(exp_series(integrate_div_t(phi_it - Series::constant(1.0, order))));
}

ExtremalCertificate certify(const PhiSpec& phi, int order, double tol) {
    const Jet2 jet = jet2(phi);
    const CoeffJet cj = coeff_jet(extremal_g(phi, order));
    auto attain = [](double attained, double bound, bool asserted) {
        return BoundAttainment{attained, bound, std::abs(attained - bound), asserted};
    };
    ExtremalCertificate cert{
        .family = phi.describe(),
        .jet = cj,
        .t22 = attain(std::abs(det_t22(cj)), t22_bound(jet), condition_t22(jet)),
        .t31 = attain(std::abs(det_t31(cj)), t31_bound(jet), condition_t31(jet)),
    };
    auto check = [&](const char* name, const BoundAttainment& a) {
        if (a.asserted && !(a.gap < tol)) {
            std::ostringstream os;
            os.precision(17);
            os << cert.family << ": " << name << " extremal value " << a.attained
               << " misses bound " << a.bound << " by " << a.gap;
            throw CertificationFailed(os.str());
        }
    };
    check("t22", cert.t22);
    check("t31", cert.t31);
    return cert;
}

}  // namespace tlab
