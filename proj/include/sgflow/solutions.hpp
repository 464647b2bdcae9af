#pragma once

// The closed-form solution catalog: a constructor per explicit solution,
// with registered first and second derivatives wherever the closed form
// permits, a per-entry residual gate, and the density/velocity observables.

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grassmann.hpp"
#include "pde.hpp"
#include "reductions.hpp"
#include "specfun.hpp"

namespace sgflow {

struct unknown_entry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Context standard_context() {
    return GeneratorSet::make({"theta", "eta1", "eta2", "E1", "K1", "K2"});
}

using Params = std::map<std::string, double>;

inline double param_or(const Params& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

// -----------------------------------------------------------------------------
// Curve builders for the closed forms
// -----------------------------------------------------------------------------

namespace curves {

// F = sqrt(1+xi^2) (sg arctan xi + C1), the condensation-wave profile
inline Curve kink_F(const Context& ctx, double C1, double sg = 1.0) {
    Curve c;
    c.label = "kink.F";
    c.ctx = ctx;
    auto A = [C1, sg](double xi) { return sg * std::atan(xi) + C1; };
    c.eval = [ctx, A](double xi) {
        return Grassmann::scalar(ctx, std::sqrt(1 + xi * xi) * A(xi));
    };
    c.d1 = [ctx, A, sg](double xi) {
        return Grassmann::scalar(ctx, (xi * A(xi) + sg) / std::sqrt(1 + xi * xi));
    };
    c.d2 = [ctx, A](double xi) {
        return Grassmann::scalar(ctx, A(xi) / std::pow(1 + xi * xi, 1.5));
    };
    return c;
}

// Lambda = E1 (1+xi^2)^{3/4} A^{3/4} exp(-(sg 3C1/4 + 3 arctan(xi)/8) arctan xi)
inline Curve kink_Lambda(const Context& ctx, double C1, double sg = 1.0) {
    Curve c;
    c.label = "kink.Lambda";
    c.ctx = ctx;
    const Grassmann E1 = Grassmann::generator(ctx, "E1");
    auto parts = [C1, sg](double xi) {
        const double T = std::atan(xi);
        const double A = sg * T + C1;
        const double u2 = 1 + xi * xi;
        const double val =
            std::pow(u2, 0.75) * std::pow(A, 0.75) * std::exp(-(sg * 0.75 * C1 + 0.375 * T) * T);
        const double h =
            1.5 * xi / u2 + 0.75 * sg / (A * u2) - 0.75 * (sg * C1 + T) / u2;
        const double hp = 1.5 * (1 - xi * xi) / (u2 * u2) -
                          0.75 * sg * (sg + 2 * xi * A) / (A * A * u2 * u2) -
                          0.75 * (1 - 2 * xi * (sg * C1 + T)) / (u2 * u2);
        return std::array<double, 3>{val, h, hp};
    };
    c.domain_ok = [C1, sg](double xi) { return sg * std::atan(xi) + C1 > 1e-3; };
    c.eval = [E1, parts](double xi) { return parts(xi)[0] * E1; };
    c.d1 = [E1, parts](double xi) {
        auto p = parts(xi);
        return (p[0] * p[1]) * E1;
    };
    c.d2 = [E1, parts](double xi) {
        auto p = parts(xi);
        return (p[0] * (p[2] + p[1] * p[1])) * E1;
    };
    return c;
}

inline Curve linear_F(const Context& ctx, double C1, double C2) {
    Curve c;
    c.label = "linear.F";
    c.ctx = ctx;
    c.eval = [ctx, C1, C2](double xi) { return Grassmann::scalar(ctx, C1 * xi + C2); };
    c.d1 = [ctx, C1](double) { return Grassmann::scalar(ctx, C1); };
    c.d2 = [ctx](double) { return Grassmann(ctx); };
    return c;
}

// Lambda = E1 W^{3/2} / V^{3/2} for linear F with eps = +1, on W, V > 0
inline Curve linear_ratio_Lambda(const Context& ctx, double C1, double C2) {
    if (C1 * C1 + C2 * C2 <= 1.0)
        throw parameter_error("linear ratio profile needs C1^2 + C2^2 > 1");
    Curve c;
    c.label = "linear.ratio.Lambda";
    c.ctx = ctx;
    const double s = std::sqrt(C1 * C1 + C2 * C2 - 1.0);
    const Grassmann E1 = Grassmann::generator(ctx, "E1");
    auto W = [C1, C2](double xi) {
        return (C2 * C2 - 1) * xi * xi - 2 * C1 * C2 * xi + (C1 * C1 - 1);
    };
    auto V = [C1, C2, s](double xi) { return (1 - C2 * C2) * xi + C1 * C2 + s; };
    c.domain_ok = [W, V](double xi) { return W(xi) > 1e-3 && V(xi) > 1e-3; };
    auto parts = [W, V, C1, C2](double xi) {
        const double Wv = W(xi), Vv = V(xi);
        const double Wp = 2 * (C2 * C2 - 1) * xi - 2 * C1 * C2, Wpp = 2 * (C2 * C2 - 1);
        const double Vp = 1 - C2 * C2;
        const double val = std::pow(Wv, 1.5) / std::pow(Vv, 1.5);
        const double h = 1.5 * (Wp / Wv - Vp / Vv);
        const double hp = 1.5 * (Wpp / Wv - (Wp / Wv) * (Wp / Wv) + (Vp / Vv) * (Vp / Vv));
        return std::array<double, 3>{val, h, hp};
    };
    c.eval = [E1, parts](double xi) { return parts(xi)[0] * E1; };
    c.d1 = [E1, parts](double xi) {
        auto p = parts(xi);
        return (p[0] * p[1]) * E1;
    };
    c.d2 = [E1, parts](double xi) {
        auto p = parts(xi);
        return (p[0] * (p[2] + p[1] * p[1])) * E1;
    };
    return c;
}

// the eps = -1 profile in terms of the incomplete elliptic integrals, as
// printed, with principal complex branches throughout
inline Curve elliptic_F(const Context& ctx, double C1, double sg = 1.0) {
    Curve c;
    c.label = "elliptic.F";
    c.ctx = ctx;
    const cplx I{0.0, 1.0};
    auto J = [I](double xi) { return ellip_F(cplx(xi, 0), I) - ellip_E(cplx(xi, 0), I); };
    c.domain_ok = [](double xi) { return std::abs(xi) < 0.97; };
    c.eval = [ctx, C1, sg, J](double xi) {
        // radicands built with an explicit +0 imaginary part so the negative
        // reals sit on the upper side of the principal cut
        const cplx rm = std::sqrt(cplx(xi - 1.0, 0.0));
        const cplx rp = std::sqrt(cplx(xi + 1.0, 0.0));
        const cplx rn = std::sqrt(cplx(-1.0 - xi * xi, 0.0));
        const cplx r1 = std::sqrt(cplx(1.0 - xi * xi, 0.0));
        const cplx r2 = std::sqrt(cplx(1.0 + xi * xi, 0.0));
        const cplx val = C1 * rm * rp +
                         sg * rn / (1.0 + xi * xi) *
                             (xi + xi * xi * xi + r1 * r2 * J(xi));
        return Grassmann::scalar(ctx, val);
    };
    c.d1 = [ctx, C1, sg, J](double xi) {
        const double u = std::sqrt(1 + xi * xi), v = std::sqrt(1 - xi * xi);
        const cplx I2{0.0, 1.0};
        const cplx val = I2 * (-C1 * xi / v + sg * (u - xi * J(xi).real() / v));
        return Grassmann::scalar(ctx, val);
    };
    c.d2 = [ctx, C1, sg, J](double xi) {
        const double u = std::sqrt(1 + xi * xi), v = std::sqrt(1 - xi * xi);
        const double v3 = v * v * v;
        const cplx I2{0.0, 1.0};
        const cplx val =
            I2 * (-C1 / v3 + sg * (xi / ((1 - xi * xi) * u) - J(xi).real() / v3));
        return Grassmann::scalar(ctx, val);
    };
    return c;
}

// Lambda = sqrt(g) (C3 sinh Iq + C4 cosh Iq) E1 for linear F with eps = -1
inline Curve hyperbolic_Lambda(const Context& ctx, double C1, double C2, double C3, double C4,
                               double xi0) {
    Curve c;
    c.label = "hyperbolic.Lambda";
    c.ctx = ctx;
    const Grassmann E1 = Grassmann::generator(ctx, "E1");
    auto P2 = [C1, C2](double xi) {
        return 1 + C1 * C1 + 2 * C1 * C2 * xi + xi * xi + C2 * C2 * xi * xi;
    };
    auto g = [C1, C2](double xi) {
        return 3 * C1 * C1 * C2 * C2 - C2 * C2 - C1 * C1 - 1 + 6 * C1 * C2 * xi +
               6 * C2 * C2 * C2 * C1 * xi + 6 * C2 * C2 * xi * xi +
               3 * std::pow(C2, 4) * xi * xi + 3 * xi * xi;
    };
    const double A = 1.5 * std::pow(1 + C2 * C2, 1.5);
    auto Iq = [P2, g, A, xi0](double xi) {
        return detail::adaptive_gk(
                   [&](double t) {
                       const double u = xi0 + t * (xi - xi0);
                       return cplx((xi - xi0) * A * std::sqrt(P2(u)) / g(u), 0.0);
                   },
                   0.0, 1.0, 1e-13, 30)
            .real();
    };
    c.domain_ok = [g](double xi) { return g(xi) > 1e-2; };
    auto parts = [P2, g, A, Iq, C1, C2, C3, C4](double xi) {
        const double gv = g(xi);
        const double gp = 6 * C1 * C2 + 6 * C2 * C2 * C2 * C1 +
                          (12 * C2 * C2 + 6 * std::pow(C2, 4) + 6) * xi;
        const double gpp = 12 * C2 * C2 + 6 * std::pow(C2, 4) + 6;
        const double P2v = P2(xi);
        const double P2p = 2 * C1 * C2 + 2 * (1 + C2 * C2) * xi;
        const double Ipr = A * std::sqrt(P2v) / gv;
        const double Isec = Ipr * (P2p / (2 * P2v) - gp / gv);
        const double Iv = Iq(xi);
        const double sh = std::sinh(Iv), ch = std::cosh(Iv);
        const double sq = std::sqrt(gv);
        const double even = C3 * sh + C4 * ch, odd = C3 * ch + C4 * sh;
        const double val = sq * even;
        const double d1 = gp / (2 * sq) * even + sq * Ipr * odd;
        const double d2 = (gpp / (2 * sq) - gp * gp / (4 * gv * sq) + sq * Ipr * Ipr) * even +
                          (gp / sq * Ipr + sq * Isec) * odd;
        return std::array<double, 3>{val, d1, d2};
    };
    c.eval = [E1, parts](double xi) { return parts(xi)[0] * E1; };
    c.d1 = [E1, parts](double xi) { return parts(xi)[1] * E1; };
    c.d2 = [E1, parts](double xi) { return parts(xi)[2] * E1; };
    return c;
}

// the profile whose derivative is sg (i/2) sqrt(W(-4 C1^2/xi)/xi); only the
// derivatives enter the rotation-reduced equation
inline Curve lambert_profile(const Context& ctx, double C1, double sg = 1.0) {
    Curve c;
    c.label = "lambert.F";
    c.ctx = ctx;
    c.domain_ok = [](double xi) { return xi > 1e-6; };
    auto w = [C1](double xi) { return lambert_w(cplx(-4 * C1 * C1 / xi, 0.0)); };
    c.eval = [ctx](double) { return Grassmann(ctx); };  // profile defined up to a quadrature
    c.d1 = [ctx, w, sg](double xi) {
        const cplx I{0.0, 1.0};
        return Grassmann::scalar(ctx, sg * 0.5 * I * std::sqrt(w(xi) / xi));
    };
    c.d2 = [ctx, w, sg](double xi) {
        const cplx I{0.0, 1.0};
        const cplx W = w(xi);
        return Grassmann::scalar(
            ctx, -sg * 0.25 * I * std::sqrt(W / xi) * (2.0 + W) / (xi * (1.0 + W)));
    };
    return c;
}

// odd profile eta * f(s) for the arbitrary-fermionic families
inline Curve odd_profile(const Context& ctx, const std::string& gen, const std::string& shape) {
    Curve c;
    c.label = "psi." + shape;
    c.ctx = ctx;
    const Grassmann g = Grassmann::generator(ctx, gen);
    std::function<std::array<double, 3>(double)> f;
    if (shape == "sech")
        f = [](double s) {
            const double c0 = 1.0 / std::cosh(s), t = std::tanh(s);
            return std::array<double, 3>{c0, -c0 * t, c0 * (t * t - c0 * c0)};
        };
    else if (shape == "sin")
        f = [](double s) {
            return std::array<double, 3>{std::sin(s), std::cos(s), -std::sin(s)};
        };
    else if (shape == "tanh")
        f = [](double s) {
            const double t = std::tanh(s), c0 = 1 - t * t;
            return std::array<double, 3>{t, c0, -2 * t * c0};
        };
    else
        throw unknown_entry_error("unknown shape " + shape);
    c.eval = [g, f](double s) { return f(s)[0] * g; };
    c.d1 = [g, f](double s) { return f(s)[1] * g; };
    c.d2 = [g, f](double s) { return f(s)[2] * g; };
    return c;
}

}  // namespace curves

// full-plane condensation-wave potential with closed-form derivatives
inline Field kink_field(const Context& ctx, double C1) {
    auto T = [C1](double x, double y) { return std::atan(x / y) + C1; };
    Field f("kink", ctx, [ctx, T](double x, double y) {
        if (y == 0.0) throw std::domain_error("y = 0");
        return Grassmann::scalar(ctx, std::sqrt(x * x + y * y) * T(x, y));
    });
    f.register_derivative({1, 0}, [ctx, T](double x, double y) {
        const double r = std::sqrt(x * x + y * y);
        return Grassmann::scalar(ctx, x / r * T(x, y) + y / r);
    });
    f.register_derivative({0, 1}, [ctx, T](double x, double y) {
        const double r = std::sqrt(x * x + y * y);
        return Grassmann::scalar(ctx, y / r * T(x, y) - x / r);
    });
    f.register_derivative({2, 0}, [ctx, T](double x, double y) {
        const double r3 = std::pow(x * x + y * y, 1.5);
        return Grassmann::scalar(ctx, y * y * T(x, y) / r3);
    });
    f.register_derivative({1, 1}, [ctx, T](double x, double y) {
        const double r3 = std::pow(x * x + y * y, 1.5);
        return Grassmann::scalar(ctx, -x * y * T(x, y) / r3);
    });
    f.register_derivative({0, 2}, [ctx, T](double x, double y) {
        const double r3 = std::pow(x * x + y * y, 1.5);
        return Grassmann::scalar(ctx, x * x * T(x, y) / r3);
    });
    return f;
}

// -----------------------------------------------------------------------------
// Observables
// -----------------------------------------------------------------------------

struct FlowState {
    double rho = 0.0, u = 0.0, v = 0.0;
};

// rho = exp(-u^2 - v^2) with u = phi_x, v = phi_y (real parts)
inline FlowState density_and_velocity(const Field& phi, double x, double y,
                                      const DiffConfig& cfg = {}) {
    const double u = partial(phi, x, y, {1, 0}, cfg).value.body().real();
    const double v = partial(phi, x, y, {0, 1}, cfg).value.body().real();
    return {std::exp(-u * u - v * v), u, v};
}

struct AsymptoticsReport {
    double limit_above = 0.0, limit_below = 0.0;
    double expected_above = 0.0, expected_below = 0.0;
    double angular_spread = 0.0;
    bool pass = false;
};

// checks the two density limits on rays approaching the positive x-axis and
// the invariance of the density along rays from the origin
inline AsymptoticsReport kink_asymptotics_check(double C1, const Context& ctx,
                                                const DiffConfig& cfg = {}) {
    Field phi = kink_field(ctx, C1);
    AsymptoticsReport rep;
    const double pi = std::acos(-1.0);
    rep.expected_above = std::exp(-(1 + std::pow(pi / 2 + C1, 2)));
    rep.expected_below = std::exp(-(1 + std::pow(-pi / 2 + C1, 2)));
    // approach the positive x-axis from above and below
    rep.limit_above = density_and_velocity(phi, 1.0, 1e-7, cfg).rho;
    rep.limit_below = density_and_velocity(phi, 1.0, -1e-7, cfg).rho;
    // density depends only on the polar angle
    double spread = 0.0;
    for (double theta : {0.3, 1.0, 2.2}) {
        const double r1 = 0.5, r2 = 3.0;
        const double d1 =
            density_and_velocity(phi, r1 * std::sin(theta), r1 * std::cos(theta), cfg).rho;
        const double d2 =
            density_and_velocity(phi, r2 * std::sin(theta), r2 * std::cos(theta), cfg).rho;
        spread = std::max(spread, std::abs(d1 - d2));
    }
    rep.angular_spread = spread;
    rep.pass = std::abs(rep.limit_above - rep.expected_above) < 1e-6 &&
               std::abs(rep.limit_below - rep.expected_below) < 1e-6 && spread < 1e-10;
    return rep;
}

// -----------------------------------------------------------------------------
// Catalog
// -----------------------------------------------------------------------------

enum class EntryClass { Exact, VerbatimSuspect, NonReducible };

struct CheckOutcome {
    std::string id;
    std::string anchor;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double tol = 1e-6;
    std::string status;  // pass | fail | xfail-confirmed | reported
    std::string details;

    bool counts_as_pass() const {
        return status == "pass" || status == "xfail-confirmed" || status == "reported";
    }
};

struct CatalogEntry {
    std::string id;
    std::string anchor;       // descriptive label of the construction
    std::string domain;       // where the entry is verified
    EntryClass classification = EntryClass::Exact;
    Params defaults;
    std::function<CheckOutcome(const Context&, const Params&, const DiffConfig&)> verify;
};

namespace detail {

inline CheckOutcome outcome_from_lift(const std::string& id, const std::string& anchor,
                                      const SubalgebraSpec& spec, const ReducedCandidate& rc,
                                      const Grid& grid, const Context& ctx,
                                      const DiffConfig& cfg, double tol) {
    LiftReport rep = lift_verify(spec, rc, grid, ctx, cfg);
    CheckOutcome out;
    out.id = id;
    out.anchor = anchor;
    out.max_residual = std::max({rep.max_reduced, rep.max_bosonic, rep.max_fermionic});
    out.mean_residual = rep.mean_residual;
    out.tol = tol;
    out.status = (rep.points_used > 0 && out.max_residual <= tol) ? "pass" : "fail";
    std::ostringstream os;
    os << "points=" << rep.points_used << " excluded=" << rep.points_excluded
       << " reduced=" << rep.max_reduced << " bosonic=" << rep.max_bosonic
       << " fermionic=" << rep.max_fermionic;
    out.details = os.str();
    return out;
}

}  // namespace detail

std::vector<CatalogEntry> catalog();

inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries,
                                      const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw unknown_entry_error("unknown catalog id: " + id);
}

inline CheckOutcome build_and_verify(const std::string& id, const Params& overrides,
                                     const Context& ctx, const DiffConfig& cfg = {}) {
    auto entries = catalog();
    const CatalogEntry& e = find_entry(entries, id);
    Params p = e.defaults;
    for (const auto& [k, v] : overrides) p[k] = v;
    return e.verify(ctx, p, cfg);
}

}  // namespace sgflow

#include "solutions_catalog.hpp"
