#include "tlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

void require_order(int order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative, got " +
                                    std::to_string(order));
    }
}

std::size_t len(int order) { return static_cast<std::size_t>(order) + 1; }

}  // namespace

Series::Series(int order) {
    require_order(order);
    coeffs_.assign(len(order), cplx{});
}

Series::Series(std::initializer_list<cplx> coeffs, int order)
    : Series(std::vector<cplx>(coeffs), order) {}

Series::Series(std::vector<cplx> coeffs, int order) : coeffs_(std::move(coeffs)) {
    require_order(order);
    coeffs_.resize(len(order), cplx{});
}

Series Series::constant(cplx c, int order) { return Series({c}, order); }

Series Series::variable(int order) { return monomial(1.0, 1, order); }

Series Series::monomial(cplx c, int k, int order) {
    Series s(order);
    if (k >= 0 && k <= order) {
        s.coeffs_[static_cast<std::size_t>(k)] = c;
    }
    return s;
}

cplx Series::eval(cplx z) const noexcept {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Series Series::truncated(int order) const {
    std::vector<cplx> c(coeffs_.begin(),
                        coeffs_.begin() + std::min<std::ptrdiff_t>(
                                              static_cast<std::ptrdiff_t>(coeffs_.size()),
                                              static_cast<std::ptrdiff_t>(order) + 1));
    return Series(std::move(c), order);
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series add(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(len(n));
    for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
    return Series(std::move(c), n);
}

Series sub(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(len(n));
    for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
    return Series(std::move(c), n);
}

Series scale(const Series& a, cplx s) {
    std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return Series(std::move(c), a.order());
}

Series mul(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(len(n));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == cplx{}) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return Series(std::move(c), n);
}

Series div(const Series& a, const Series& b) {
    if (std::abs(b[0]) == 0.0) throw ZeroConstantTerm();
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> q(len(n));
    for (int k = 0; k <= n; ++k) {
        cplx acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return Series(std::move(q), n);
}

Series compose(const Series& outer, const Series& inner) {
    if (std::abs(inner[0]) > kCoeffTol) throw NonzeroInnerConstant();
    const int n = std::min(outer.order(), inner.order());
    // Horner over series: the inner series has no constant term, so the
    // truncation at n is exact at every step.
    Series acc = Series::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = mul(acc, inner);
        acc = add(acc, Series::constant(outer[k], n));
    }
    return acc;
}

Series exp_series(const Series& a) {
    if (std::abs(a[0]) > kCoeffTol) {
        throw NonzeroConstant("exp_series requires a(0) == 0");
    }
    const int n = a.order();
    std::vector<cplx> e(len(n));
    e[0] = 1.0;
    // (exp a)' = a' exp a  =>  k e_k = sum_{j=1}^k j a_j e_{k-j}
    for (int k = 1; k <= n; ++k) {
        cplx acc{};
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
        e[k] = acc / static_cast<double>(k);
    }
    return Series(std::move(e), n);
}

Series log_series(const Series& a) {
    if (std::abs(a[0] - cplx{1.0}) > kCoeffTol) {
        throw NonzeroConstant("log_series requires a(0) == 1");
    }
    const int n = a.order();
    std::vector<cplx> l(len(n));
    // a (log a)' = a'  =>  k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
    for (int k = 1; k <= n; ++k) {
        cplx acc = static_cast<double>(k) * a[k];
        for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a[k - j];
        l[k] = acc / static_cast<double>(k);
    }
    return Series(std::move(l), n);
}

Series integrate_div_t(const Series& a) {
    if (std::abs(a[0]) > kCoeffTol) {
        throw NonzeroConstant("integrate_div_t requires a(0) == 0");
    }
    const int n = a.order();
    std::vector<cplx> c(len(n));
    for (int k = 1; k <= n; ++k) c[k] = a[k] / static_cast<double>(k);
    return Series(std::move(c), n);
}

Series derivative(const Series& a) {
    const int n = std::max(a.order() - 1, 0);
    std::vector<cplx> c(len(n));
    for (int k = 1; k <= a.order(); ++k) c[k - 1] = static_cast<double>(k) * a[k];
    return Series(std::move(c), n);
}

Series times_z(const Series& a) {
    const int n = a.order();
    std::vector<cplx> c(len(n));
    for (int k = 1; k <= n; ++k) c[k] = a[k - 1];
    return Series(std::move(c), n);
}

double max_abs_diff(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace tlab
