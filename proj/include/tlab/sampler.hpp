#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tlab/phi.hpp"
#include "tlab/toeplitz.hpp"

namespace tlab {

/// Finite Blaschke-type Schwarz function
///   omega(z) = rotation * z^p * prod_i (z + a_i) / (1 + conj(a_i) z),
/// with |rotation| = 1, |a_i| < 1 and p >= 1, so omega(0) = 0 and |omega| < 1.
class SchwarzWord {
public:
    static SchwarzWord make(cplx rotation, std::vector<cplx> factors = {}, int leading_power = 1);

    cplx rotation() const noexcept { return rotation_; }
    const std::vector<cplx>& factors() const noexcept { return factors_; }
    int leading_power() const noexcept { return leading_power_; }

    std::string describe() const;

private:
    SchwarzWord(cplx r, std::vector<cplx> f, int p)
        : rotation_(r), factors_(std::move(f)), leading_power_(p) {}

    cplx rotation_;
    std::vector<cplx> factors_;
    int leading_power_;
};

/// (omega'(0), omega''(0)/2). Attainable pairs fill |w1| <= 1, |w2| <= 1 - |w1|^2.
struct JetBodyPoint {
    cplx w1;
    cplx w2;
};

bool in_jet_body(const JetBodyPoint& p, double tol = 0.0);

Series omega_series(const SchwarzWord& w, int order = kDefaultOrder);

/// h(z) = exp( integral_0^z (Phi(omega(t)) - 1)/t dt ). Then g = z h satisfies
/// z g'/g = Phi o omega, i.e. g/g' lies in M_Phi.
Series lift_from_schwarz(const PhiSpec& phi, const SchwarzWord& w, int order = kDefaultOrder);

/// g(z) = z * lift_from_schwarz(phi, w), normalized: g(0) = 0, g'(0) = 1.
Series g_from_schwarz(const PhiSpec& phi, const SchwarzWord& w, int order = kDefaultOrder);

/// Deterministic pseudo-random words: uniform rotation phase, factor count
/// uniform in 0..max_factors, a_i uniform by area in the disk, p in {1,2,3}.
std::vector<SchwarzWord> sample_words(std::size_t count, std::uint64_t seed, int max_factors = 3);

enum class Functional { T22, T31, FS };

/// The functional a supremum is taken of: |det T22|, |det T31| or
/// |b3 - lambda b2^2|.
struct Target {
    Functional kind;
    cplx lambda{};

    static Target t22() { return {Functional::T22, {}}; }
    static Target t31() { return {Functional::T31, {}}; }
    static Target fs(cplx lambda) { return {Functional::FS, lambda}; }

    std::string describe() const;
};

double evaluate_target(const Target& t, const CoeffJet& j);

/// Coefficients of any g with z g'/g = Phi(omega), from omega's 2-jet:
///   b2 = d1 w1,  2 b3 - b2^2 = d1 w2 + (d2/2) w1^2.
CoeffJet coeffs_from_jet_body(const Jet2& jet, const JetBodyPoint& p);

struct OracleOptions {
    int grid = 200;
    bool refine = true;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct OracleResult {
    double value;
    JetBodyPoint argmax;
    int grid;
    bool refined;
};

/// Grid maximum of the target over the Schwarz-Pick 2-jet body, parametrized
/// as w1 = r1 e^{i t1}, w2 = s (1 - r1^2) e^{i t2} with r1, s in [0, 1]. Each of
/// the four axes carries `grid` lattice points (grid - 1 intervals, so lattices
/// for grid g and 2g - 1 are nested); an optional pass then re-scans a finer
/// lattice spanning one cell around the best point.
OracleResult oracle_sup(const PhiSpec& phi, const Target& target, const OracleOptions& opts = {});

enum class Theorem { T22, T31 };

std::string to_string(Theorem t);

struct McOptions {
    int order = kDefaultOrder;
    int max_factors = 3;
    double tol = 1e-6;
    unsigned threads = 0;
};

struct Violation {
    std::size_t index;
    SchwarzWord word;
    double value;
};

struct VerificationReport {
    std::string family;
    Theorem theorem;
    std::size_t samples;
    std::uint64_t seed;
    double bound;
    double max_observed;
    std::size_t argmax_index;
    /// Ten bins of relative slack (bound - |det|) / bound over [0, 1].
    std::vector<std::size_t> margin_histogram;
    std::vector<Violation> violations;
};

/// Samples `count` class members, checks |det| <= bound + tol for each.
/// Throws ConditionNotMet when the theorem's hypothesis fails for phi.
VerificationReport montecarlo_verify(const PhiSpec& phi, Theorem theorem, std::size_t count,
                                     std::uint64_t seed, const McOptions& opts = {});

}  // namespace tlab
