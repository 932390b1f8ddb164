#include "tlab/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace tlab {

double fekete_szego_bound(const Jet2& jet, cplx lambda) {
    const double ratio = jet.d2 / (2.0 * jet.d1);
    const double inner = std::abs(ratio + (1.0 - 2.0 * lambda) * jet.d1);
    return 0.5 * jet.d1 * std::max(1.0, inner);
}

double t22_bound(const Jet2& jet) {
    const double sq = jet.d1 * jet.d1;
    const double mid = 0.5 * jet.d2 / jet.d1 + jet.d1;
    return sq / 4.0 * mid * mid + sq;
}

double t31_bound(const Jet2& jet) {
    const double sq = jet.d1 * jet.d1;
    const double ratio = jet.d2 / (2.0 * jet.d1);
    return 1.0 + 2.0 * sq + sq / 4.0 * (3.0 * jet.d1 - ratio) * (ratio + jet.d1);
}

BoundReport report(const PhiSpec& phi, const std::vector<cplx>& lambdas) {
    const Jet2 jet = jet2(phi);
    BoundReport r{
        .family = phi.describe(),
        .jet = jet,
        .cond_t22 = condition_t22(jet),
        .cond_t31 = condition_t31(jet),
        .t22 = std::nullopt,
        .t31 = std::nullopt,
        .t22_formula = t22_bound(jet),
        .t31_formula = t31_bound(jet),
        .fs = {},
    };
    if (r.cond_t22) r.t22 = r.t22_formula;
    if (r.cond_t31) r.t31 = r.t31_formula;
    r.fs.reserve(lambdas.size());
    for (const cplx& l : lambdas) r.fs.push_back({l, fekete_szego_bound(jet, l)});
    return r;
}

}  // namespace tlab
