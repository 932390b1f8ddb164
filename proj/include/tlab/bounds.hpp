#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlab/phi.hpp"

namespace tlab {

/// (d1/2) max{1, |d2/(2 d1) + (1 - 2 lambda) d1|}: the Fekete-Szego envelope
/// for |b3 - lambda b2^2|.
double fekete_szego_bound(const Jet2& jet, cplx lambda);

/// Sharp bound on |det T_{2,2}| = |b2^2 - b3^2|. Only a theorem when
/// condition_t22 holds; evaluated regardless.
double t22_bound(const Jet2& jet);

/// Sharp bound on |det T_{3,1}|. Only a theorem when condition_t31 holds.
double t31_bound(const Jet2& jet);

struct FsEntry {
    cplx lambda;
    double bound;
};

struct BoundReport {
    std::string family;
    Jet2 jet;
    bool cond_t22;
    bool cond_t31;
    // Present only when the matching condition holds.
    std::optional<double> t22;
    std::optional<double> t31;
    // Formula values regardless of the conditions, for exploring where
    // sharpness breaks down.
    double t22_formula;
    double t31_formula;
    std::vector<FsEntry> fs;
};

BoundReport report(const PhiSpec& phi, const std::vector<cplx>& lambdas);

}  // namespace tlab
