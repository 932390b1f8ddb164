#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tlab/series.hpp"

namespace tlab {

/// Phi'(0) and Phi''(0). Every closed-form bound consumes only these two reals.
struct Jet2 {
    double d1;
    double d2;
};

namespace family {

/// (1+z)/(1-z): starlike functions.
struct HalfPlane {};

/// (1+(1-2a)z)/(1-z), 0 <= a < 1: starlike of order a.
struct Alpha {
    double alpha;
};

/// (1+Dz)/(1+Ez), -1 <= E < D <= 1.
struct Janowski {
    double d;
    double e;
};

/// ((1+z)/(1-z))^g, 0 < g <= 1, principal branch (value 1 at z = 0).
struct Power {
    double gamma;
};

/// User-supplied Taylor series, optionally with the series of its inverse.
struct Custom {
    Series series;
    std::optional<Series> inverse;
    std::string source;
};

}  // namespace family

/// A validated generator Phi. Construction rejects parameters outside each
/// family's range and any Phi with Phi(0) != 1, Phi'(0) <= 0 or complex Phi''(0).
class PhiSpec {
public:
    using Family = std::variant<family::HalfPlane, family::Alpha, family::Janowski,
                                family::Power, family::Custom>;

    static PhiSpec half_plane();
    static PhiSpec alpha(double a);
    static PhiSpec janowski(double d, double e);
    static PhiSpec power(double gamma);
    static PhiSpec custom(Series series, std::optional<Series> inverse = std::nullopt,
                          std::string source = "inline");

    const Family& family() const noexcept { return family_; }

    /// Round-trippable descriptor, the same grammar `parse_phi` accepts.
    std::string describe() const;

private:
    explicit PhiSpec(Family f) : family_(std::move(f)) {}
    Family family_;
};

/// Parses "starlike", "alpha:<x>", "janowski:<D>:<E>", "power:<g>" or
/// "custom:<path>". Throws InvalidParameters on anything else.
PhiSpec parse_phi(std::string_view text);

/// Reads a custom coefficient file: one coefficient per line as "re [im]",
/// starting at c_0; '#' starts a comment; a line reading "inverse" switches to
/// the coefficients of the inverse series.
PhiSpec load_custom_phi(const std::string& path);

Jet2 jet2(const PhiSpec& phi);

/// Taylor series of Phi at 0 to the given order.
Series phi_series(const PhiSpec& phi, int order = kDefaultOrder);

/// Pointwise Phi^{-1}(w). Analytic for built-in families; Custom evaluates its
/// inverse series and throws NoInverseAvailable without one.
cplx phi_inverse(const PhiSpec& phi, cplx w);

/// |Phi''(0) + 2 Phi'(0)^2| >= 2 Phi'(0) > 0
bool condition_t22(const Jet2& jet);
bool condition_t22(const PhiSpec& phi);

/// 2 Phi'(0) - 2 Phi'(0)^2 <= Phi''(0) <= 6 Phi'(0)^2 - 2 Phi'(0)
bool condition_t31(const Jet2& jet);
bool condition_t31(const PhiSpec& phi);

/// Sampled subordination test: true iff |Phi^{-1}(candidate(z))| < 1 at
/// z = r e^{i theta}, r in {0.3, 0.6, 0.9}, theta on `grid` uniform angles.
bool subordination_check(const Series& candidate, const PhiSpec& phi, int grid = 64);

}  // namespace tlab
