#pragma once

// Lambert W (branches 0 and -1) and incomplete elliptic integrals of the
// first and second kind for complex arguments, evaluated by adaptive
// Gauss-Kronrod quadrature along the straight path from 0 to z.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace sgflow {

using cplx = std::complex<double>;

struct domain_error_sf : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_path_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Branch {
    int index = 0;  // 0 = principal, -1 = lower real branch
};

// -----------------------------------------------------------------------------
// Lambert W
// -----------------------------------------------------------------------------

namespace detail {

inline cplx lambert_seed(cplx x, int branch) {
    const double e = std::exp(1.0);
    if (branch == -1) {
        // real branch on [-1/e, 0)
        const double xr = x.real();
        if (xr > -0.3) {
            // near zero: W_{-1} ~ log(-x) - log(-log(-x))
            double l1 = std::log(-xr);
            return cplx(l1 - std::log(-l1), 0.0);
        }
        const double p = -std::sqrt(std::max(0.0, 2.0 * (e * xr + 1.0)));
        return cplx(-1.0 + p - p * p / 3.0, 0.0);
    }
    // principal branch
    const bool below_cut = (x.imag() == 0.0 && x.real() < -1.0 / e);
    if (!below_cut && std::abs(x) < 0.25) return x * (1.0 - x);
    if (std::abs(x + 1.0 / e) < 0.3) {
        // branch-point expansion; the square root turns complex left of -1/e,
        // which is what pulls the iteration off the real axis
        const cplx p = std::sqrt(cplx(2.0 * (e * x.real() + 1.0), 2.0 * e * x.imag()));
        return -1.0 + p - p * p / 3.0;
    }
    if (!below_cut && std::abs(x) <= 3.0 && std::abs(x + 1.0) > 0.3)
        return std::log(1.0 + x);
    cplx l1 = std::log(x);
    if (below_cut) l1 = cplx(std::log(std::abs(x.real())), std::acos(-1.0));
    return l1 - std::log(l1);
}

}  // namespace detail

inline cplx lambert_w(cplx x, Branch branch = {0}) {
    const double e = std::exp(1.0);
    if (branch.index != 0 && branch.index != -1)
        throw domain_error_sf("only branches 0 and -1 are supported");
    if (branch.index == -1) {
        if (x.imag() != 0.0 || x.real() < -1.0 / e - 1e-15 || x.real() >= 0.0)
            throw domain_error_sf("branch -1 requires real x in [-1/e, 0)");
    }
    if (x == cplx(0.0, 0.0)) return {0.0, 0.0};

    cplx w = detail::lambert_seed(x, branch.index);
    for (int it = 0; it < 60; ++it) {
        const cplx ew = std::exp(w);
        const cplx f = w * ew - x;
        if (std::abs(f) <= 1e-14 * std::max(1.0, std::abs(x))) break;
        const cplx fp = ew * (1.0 + w);
        const cplx fpp = ew * (2.0 + w);
        const cplx denom = fp - f * fpp / (2.0 * fp);
        w -= f / denom;  // Halley step
    }
    const cplx resid = w * std::exp(w) - x;
    if (std::abs(resid) > 1e-10 * std::max(1.0, std::abs(x)))
        throw domain_error_sf("lambert_w did not converge");
    return w;
}

// Real-typed entry enforcing the real-branch domain conditions.
inline double lambert_w_real(double x, Branch branch = {0}) {
    const double e = std::exp(1.0);
    if (branch.index == 0 && x < -1.0 / e - 1e-15)
        throw domain_error_sf("branch 0 requires real x >= -1/e");
    return lambert_w(cplx(x, 0.0), branch).real();
}

// -----------------------------------------------------------------------------
// Adaptive Gauss-Kronrod (G7, K15) on [0, 1]
// -----------------------------------------------------------------------------

namespace detail {

// Kronrod 15 nodes on [-1, 1] (symmetric) and weights; Gauss 7 weights on the
// odd-index subset.
inline constexpr double kronrod_x[8] = {0.0,
                                        0.2077849550078985,
                                        0.4058451513773972,
                                        0.5860872354676911,
                                        0.7415311855993945,
                                        0.8648644233597691,
                                        0.9491079123427585,
                                        0.9914553711208126};
inline constexpr double kronrod_w[8] = {0.2094821410847278, 0.2044329400752989,
                                        0.1903505780647854, 0.1690047266392679,
                                        0.1406532597155259, 0.1047900103222502,
                                        0.0630920926299786, 0.0229353220105292};
inline constexpr double gauss_w[4] = {0.4179591836734694, 0.3818300505051189,
                                      0.2797053914892767, 0.1294849661688697};

struct GKResult {
    cplx value;
    double error;
};

inline GKResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx f0 = f(c);
    cplx kron = kronrod_w[0] * f0;
    cplx gauss = gauss_w[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const cplx fp = f(c + h * kronrod_x[i]);
        const cplx fm = f(c - h * kronrod_x[i]);
        kron += kronrod_w[i] * (fp + fm);
        if (i % 2 == 0) gauss += gauss_w[i / 2] * (fp + fm);
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

inline cplx adaptive_gk(const std::function<cplx(double)>& f, double a, double b, double tol,
                        int depth) {
    const GKResult r = gk15(f, a, b);
    if (r.error <= tol || depth <= 0) return r.value;
    const double m = 0.5 * (a + b);
    return adaptive_gk(f, a, m, tol / 2.0, depth - 1) + adaptive_gk(f, m, b, tol / 2.0, depth - 1);
}

inline void check_path(cplx z, cplx k) {
    // branch points of the integrands at alpha = +-1 and +-1/k
    auto dist_to_segment = [&](cplx p) {
        // segment from 0 to z
        const double zz = std::norm(z);
        if (zz == 0.0) return std::abs(p);
        double t = std::clamp((p.real() * z.real() + p.imag() * z.imag()) / zz, 0.0, 1.0);
        return std::abs(p - t * z);
    };
    const double tol = 1e-8;
    if (dist_to_segment(1.0) < tol || dist_to_segment(-1.0) < tol)
        throw singular_path_error("integration path passes through alpha = +-1");
    if (std::abs(k) > 1e-300) {
        const cplx bp = 1.0 / k;
        if (dist_to_segment(bp) < tol || dist_to_segment(-bp) < tol)
            throw singular_path_error("integration path passes through alpha = +-1/k");
    }
}

}  // namespace detail

// F(z, k) = int_0^z dalpha / (sqrt(1 - alpha^2) sqrt(1 - k^2 alpha^2))
inline cplx ellip_F(cplx z, cplx k) {
    if (z == cplx(0.0, 0.0)) return {0.0, 0.0};
    detail::check_path(z, k);
    return detail::adaptive_gk(
        [&](double t) {
            const cplx a = t * z;
            return z / (std::sqrt(1.0 - a * a) * std::sqrt(1.0 - k * k * a * a));
        },
        0.0, 1.0, 1e-12, 30);
}

// E(z, k) = int_0^z sqrt(1 - k^2 alpha^2) / sqrt(1 - alpha^2) dalpha
inline cplx ellip_E(cplx z, cplx k) {
    if (z == cplx(0.0, 0.0)) return {0.0, 0.0};
    detail::check_path(z, k);
    return detail::adaptive_gk(
        [&](double t) {
            const cplx a = t * z;
            return z * std::sqrt(1.0 - k * k * a * a) / std::sqrt(1.0 - a * a);
        },
        0.0, 1.0, 1e-12, 30);
}

}  // namespace sgflow
