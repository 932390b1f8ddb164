#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tlab {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 16;

/// Truncated univariate power series c_0 + c_1 z + ... + c_N z^N.
///
/// Values are immutable once built. Binary operations truncate to the smaller
/// of the two operand orders, so coefficients past an operand's order are
/// never read.
class Series {
public:
    /// Zero series of the given truncation order.
    explicit Series(int order = kDefaultOrder);

    /// Coefficients c_0..c_k, zero-padded (or truncated) to `order`.
    Series(std::initializer_list<cplx> coeffs, int order);
    Series(std::vector<cplx> coeffs, int order);

    static Series constant(cplx c, int order = kDefaultOrder);
    /// The identity series z.
    static Series variable(int order = kDefaultOrder);
    /// c z^k (zero if k > order).
    static Series monomial(cplx c, int k, int order = kDefaultOrder);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    cplx operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation of the truncated polynomial.
    cplx eval(cplx z) const noexcept;

    /// Same coefficients at a different truncation order.
    Series truncated(int order) const;

    Series operator-() const;

private:
    std::vector<cplx> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, cplx s);

/// a / b; throws ZeroConstantTerm when b(0) == 0.
Series div(const Series& a, const Series& b);

/// outer(inner(z)); throws NonzeroInnerConstant when inner(0) != 0.
Series compose(const Series& outer, const Series& inner);

/// exp(a) for a(0) == 0; throws NonzeroConstant otherwise.
Series exp_series(const Series& a);

/// Principal log(a) for a(0) == 1; throws NonzeroConstant otherwise.
Series log_series(const Series& a);

/// sum_{k>=1} a_k z^k  ->  sum_{k>=1} (a_k / k) z^k, i.e. the integral of a(t)/t
/// from 0 to z. Requires a(0) == 0.
Series integrate_div_t(const Series& a);

/// Term-by-term derivative; the result has order N-1 (order 0 stays order 0).
Series derivative(const Series& a);

/// z * a, keeping a's truncation order.
Series times_z(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }
inline Series operator*(cplx s, const Series& a) { return scale(a, s); }

/// Max |a_k - b_k| over the shared order.
double max_abs_diff(const Series& a, const Series& b);

/// Coefficient tolerance used for "is this coefficient zero / one" checks.
inline constexpr double kCoeffTol = 1e-12;

}  // namespace tlab
