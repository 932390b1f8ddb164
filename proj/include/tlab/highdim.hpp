#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tlab/phi.hpp"
#include "tlab/rng.hpp"

namespace tlab {

enum class NormKind { Sup, Euclidean };

std::string to_string(NormKind k);
NormKind parse_norm_kind(std::string_view s);

double norm_of(std::span<const cplx> w, NormKind kind);

/// A point of the open unit ball of C^n under the sup or Euclidean norm.
class NormedPoint {
public:
    /// Throws InvalidParameters unless 0 < ||z|| < 1.
    static NormedPoint make(std::vector<cplx> coords, NormKind kind);

    const std::vector<cplx>& coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    NormKind kind() const noexcept { return kind_; }
    double norm() const noexcept { return norm_; }
    /// Lowest index attaining the sup norm (Euclidean points: also computed).
    std::size_t k_index() const noexcept { return k_index_; }

private:
    NormedPoint(std::vector<cplx> c, NormKind k, double n, std::size_t idx)
        : coords_(std::move(c)), kind_(k), norm_(n), k_index_(idx) {}

    std::vector<cplx> coords_;
    NormKind kind_;
    double norm_;
    std::size_t k_index_;
};

/// Norm-one linear functional with l(base) = ||base||.
///   sup:       l(w) = w_k conj(base_k) / |base_k|
///   Euclidean: l(w) = <w, base> / ||base||
class LzFunctional {
public:
    explicit LzFunctional(const NormedPoint& base);
    /// Support functional at an arbitrary nonzero vector (e.g. a unit direction u).
    static LzFunctional support(std::span<const cplx> base, NormKind kind);

    /// Throws DimensionMismatch on a wrong-length argument.
    cplx apply(std::span<const cplx> w) const;

private:
    LzFunctional(std::vector<cplx> base, NormKind kind);

    std::vector<cplx> base_;
    NormKind kind_;
    double norm_;
    std::size_t k_index_;
};

/// Which scalar ell(z) the mapping G(z) = z h(ell(z)) depends on.
struct Coordinate {
    std::size_t index = 0;
};
struct AlongFunctional {
    std::vector<cplx> u;  // the functional is l_u in the point's norm
};
using Direction = std::variant<Coordinate, AlongFunctional>;

cplx ell(const Direction& dir, std::span<const cplx> w, NormKind kind);

/// Homogeneous pieces of G(z) = z h(ell(z)), h = 1 + h1 w + h2 w^2 + ...:
///   q2 = D^2G(0)(z^2)/2! = h1 ell(z) z
///   q3 = D^3G(0)(z^3)/3! = h2 ell(z)^2 z
///   b2sq_vec = (1/2) D^2G(0)(z, q2)
struct HomogeneousTerms {
    std::vector<cplx> q2;
    std::vector<cplx> q3;
    std::vector<cplx> b2sq_vec;
};

HomogeneousTerms homogeneous_terms(const Series& h, const NormedPoint& z,
                                   const Direction& dir = Coordinate{});

/// One inequality: lhs <= bound, margin = bound - lhs. `asserted` is the
/// theorem's hypothesis on Phi.
struct Check {
    double lhs;
    double bound;
    double margin;
    bool asserted;
};

struct BallMargins {
    cplx b2;  // l_z(q2) / ||z||^2
    cplx b3;  // l_z(q3) / ||z||^3
    Check t22;
    Check t31;
};

BallMargins verify_ball(const PhiSpec& phi, const Series& h, const NormedPoint& z,
                        const Direction& dir = Coordinate{});

struct PolydiscMargins {
    /// || q3^2 - q2^2 || (componentwise squares, sup norm) against the
    /// ||z||^6, ||z||^4 weighted bound.
    Check res;
    /// || 2 B q3 - q3^2 - 2 B + 1 || with B = b2sq_vec, against the bound as
    /// printed with weights ||z||^6 and ||z||^4 on the quadratic term.
    Check un2;
    /// Same left side against the degree-consistent weight ||z||^3 (B is cubic
    /// in z). The extremal mapping attains this one with equality.
    Check un2_homogeneous;
};

/// Sup norm only; throws InvalidParameters otherwise.
PolydiscMargins verify_polydisc(const PhiSpec& phi, const Series& h, const NormedPoint& z,
                                const Direction& dir = Coordinate{});

double res_rhs(const Jet2& jet, double norm);
double un2_rhs(const Jet2& jet, double norm);
double un2_rhs_homogeneous(const Jet2& jet, double norm);

/// Throws BoundViolated if any asserted check has margin < -tol.
void enforce(const BallMargins& m, double tol);
void enforce(const PolydiscMargins& m, double tol, bool homogeneous_un2 = false);

/// Lift of the extremal function: h(w) = exp( integral_0^w (Phi(i t) - 1)/t dt ).
Series extremal_lift(const PhiSpec& phi, int order = kDefaultOrder);

/// Uniform-by-volume-ish random point with 0 < ||z|| <= max_norm.
NormedPoint sample_point(Rng& rng, std::size_t n, NormKind kind, double max_norm = 0.999);

/// Random unit vector in the given norm.
std::vector<cplx> sample_unit(Rng& rng, std::size_t n, NormKind kind);

struct HighdimSample {
    std::size_t index;
    std::vector<cplx> z;
    std::string word;
    std::string direction;
    BallMargins ball;
    std::optional<PolydiscMargins> polydisc;
};

struct HighdimSweep {
    std::size_t n;
    NormKind kind;
    std::size_t samples;
    std::uint64_t seed;
    double min_ball_t22 = 0.0;
    double min_ball_t31 = 0.0;
    double min_res = 0.0;
    double min_un2 = 0.0;
    double min_un2_homogeneous = 0.0;
    /// Samples where some asserted check fell below -tol.
    std::vector<HighdimSample> violations;
};

struct HighdimOptions {
    int order = kDefaultOrder;
    int max_factors = 3;
    double tol = 1e-9;
    bool homogeneous_un2 = false;
};

/// Random lifts h (from Schwarz words) at random points; even samples use
/// ell = z_1, odd samples a random support functional.
HighdimSweep highdim_sweep(const PhiSpec& phi, std::size_t n, NormKind kind, std::size_t count,
                           std::uint64_t seed, const HighdimOptions& opts = {});

}  // namespace tlab
