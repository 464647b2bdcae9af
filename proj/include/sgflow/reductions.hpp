#pragma once

// The symmetry-reduction catalog: symmetry variables and changes of variable
// for every one-dimensional subalgebra (classical list and the splitting and
// non-splitting superalgebra rows), the reduced ODE residuals, the
// decoupling condition, the first-order omega equations, the combined
// equation of the Z + mP1 + nP2 family, and lift-back verification against
// the full PDEs.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "grassmann.hpp"
#include "pde.hpp"

namespace sgflow {

struct unknown_row_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -----------------------------------------------------------------------------
// Reduced candidates: functions of the symmetry variable
// -----------------------------------------------------------------------------

struct Curve {
    std::string label;
    Context ctx;
    std::function<Grassmann(double)> eval;
    std::function<Grassmann(double)> d1, d2;      // optional closed forms
    std::function<bool(double)> domain_ok;        // optional chart guard

    Grassmann operator()(double t) const {
        if (domain_ok && !domain_ok(t)) throw std::domain_error(label + ": outside chart");
        return eval(t);
    }
    Grassmann deriv(double t, int order, const DiffConfig& cfg = {}) const {
        if (order == 0) return (*this)(t);
        if (order == 1 && d1) return d1(t);
        if (order == 2 && d2) return d2(t);
        return detail::richardson([this](double u) { return (*this)(u); }, t, order, cfg).value;
    }

    static Curve zero(const Context& ctx) {
        Curve c;
        c.label = "zero";
        c.ctx = ctx;
        c.eval = [ctx](double) { return Grassmann(ctx); };
        c.d1 = c.eval;
        c.d2 = c.eval;
        return c;
    }
};

struct ReducedCandidate {
    Curve F;       // even invariant profile
    Curve Lambda;  // odd invariant profile
};

struct SubalgebraSpec {
    std::string id;
    double m = 1.0, n = 1.0, k = 1.0;
    double a = 1.0;   // dilation/rotation mixing of the classical spiral row
    double mu = 1.0;  // rotation/phi-shift mixing, printed for mu = +-1
    int eps = 1;
    Grassmann eta1, eta2;  // fermionic constants of the non-splitting rows
};

// internal family tags
enum class Family {
    // susy splitting
    L1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12,
    // susy non-splitting
    SL2, SL3, SL4, SL5, SL6, SL7, SL8,
    // classical eps = +1 rows and the eps = -1 dilation/translation families
    CL1, CL2, CL3, CL4, CL5, CL6, CL7, CMDilation, CMTranslation,
};

inline Family parse_family(const std::string& id) {
    auto base = id.substr(0, id.find(','));
    if (base == "L1") return Family::L1;
    if (base == "L2") return Family::L2;
    if (base == "L3") return Family::L3;
    if (base == "L4") return Family::L4;
    if (base == "L5") return Family::L5;
    if (base == "L6") return Family::L6;
    if (base == "L7") return Family::L7;
    if (base == "L8") return Family::L8;
    if (base == "L9") return Family::L9;
    if (base == "L10") return Family::L10;
    if (base == "L11") return Family::L11;
    if (base == "L12") return Family::L12;
    if (base == "script-L2") return Family::SL2;
    if (base == "script-L3") return Family::SL3;
    if (base == "script-L4") return Family::SL4;
    if (base == "script-L5") return Family::SL5;
    if (base == "script-L6") return Family::SL6;
    if (base == "script-L7") return Family::SL7;
    if (base == "script-L8") return Family::SL8;
    if (base == "classical-L1") return Family::CL1;
    if (base == "classical-L2") return Family::CL2;
    if (base == "classical-L3") return Family::CL3;
    if (base == "classical-L4") return Family::CL4;
    if (base == "classical-L5") return Family::CL5;
    if (base == "classical-L6") return Family::CL6;
    if (base == "classical-L7") return Family::CL7;
    if (base == "classical-minus-dilation") return Family::CMDilation;
    if (base == "classical-minus-translation") return Family::CMTranslation;
    throw unknown_row_error("unknown subalgebra id: " + id);
}

inline bool is_reducible(Family f) {
    switch (f) {
        case Family::L5:
        case Family::L9:
        case Family::L10:
        case Family::L11:
        case Family::L12:
        case Family::SL5:
        case Family::CL1:
            return false;
        default:
            return true;
    }
}

inline bool is_classical(Family f) {
    switch (f) {
        case Family::CL1:
        case Family::CL2:
        case Family::CL3:
        case Family::CL4:
        case Family::CL5:
        case Family::CL6:
        case Family::CL7:
        case Family::CMDilation:
        case Family::CMTranslation:
            return true;
        default:
            return false;
    }
}

// -----------------------------------------------------------------------------
// Symmetry variable
// -----------------------------------------------------------------------------

inline double symmetry_variable(const SubalgebraSpec& spec, double x, double y) {
    switch (parse_family(spec.id)) {
        case Family::L1:
        case Family::CL4:
        case Family::CMDilation:
            if (y == 0.0) throw std::domain_error("xi = x/y undefined on y = 0");
            return x / y;
        case Family::L2:
        case Family::L6:
        case Family::SL2:
        case Family::SL6:
        case Family::CL2:
            return y;
        case Family::L3:
        case Family::L7:
        case Family::SL3:
        case Family::SL7:
        case Family::CL3:
            return x;
        case Family::L4:
        case Family::SL4:
            return y - spec.m * x;
        case Family::L8:
        case Family::SL8:
            return x - (spec.m / spec.n) * y;
        case Family::CL5:
        case Family::CL7:
            return x * x + y * y;
        case Family::CL6: {
            if (x == 0.0) throw std::domain_error("arctan(y/x) undefined on x = 0");
            return std::atan(y / x) - spec.a * std::log(std::sqrt(x * x + y * y));
        }
        case Family::CMTranslation:
            return spec.k * x + y;
        default:
            throw unknown_row_error("no symmetry variable for " + spec.id);
    }
}

// -----------------------------------------------------------------------------
// Change of variables (lift)
// -----------------------------------------------------------------------------

namespace detail {

// phi = scale * F(alpha x + beta y) + cx x + cy y, derivatives forwarded
inline Field affine_lift(const std::string& label, const Curve& F, double scale, double alpha,
                         double beta, double cx, double cy, const Context& ctx) {
    Field f(label, ctx, [F, scale, alpha, beta, cx, cy, ctx](double x, double y) {
        return scale * F(alpha * x + beta * y) +
               Grassmann::scalar(ctx, cx * x + cy * y);
    });
    if (F.d1) {
        f.register_derivative({1, 0}, [F, scale, alpha, beta, cx, ctx](double x, double y) {
            return (scale * alpha) * F.d1(alpha * x + beta * y) + Grassmann::scalar(ctx, cx);
        });
        f.register_derivative({0, 1}, [F, scale, alpha, beta, cy, ctx](double x, double y) {
            return (scale * beta) * F.d1(alpha * x + beta * y) + Grassmann::scalar(ctx, cy);
        });
    }
    if (F.d2) {
        auto second = [F, scale, alpha, beta](double x, double y, double c) {
            return (scale * c) * F.d2(alpha * x + beta * y);
        };
        f.register_derivative({2, 0}, [=](double x, double y) { return second(x, y, alpha * alpha); });
        f.register_derivative({1, 1}, [=](double x, double y) { return second(x, y, alpha * beta); });
        f.register_derivative({0, 2}, [=](double x, double y) { return second(x, y, beta * beta); });
    }
    return f;
}

// quadratic fermionic tail cxx x^2 + cxy x y + cyy y^2 with Grassmann coefficients
struct Tail {
    Grassmann cxx, cxy, cyy;

    Grassmann value(double x, double y) const { return (x * x) * cxx + (x * y) * cxy + (y * y) * cyy; }
    Grassmann dx(double x, double y) const { return (2.0 * x) * cxx + y * cxy; }
    Grassmann dy(double x, double y) const { return x * cxy + (2.0 * y) * cyy; }
    Grassmann dxx() const { return 2.0 * cxx; }
    Grassmann dxy() const { return cxy; }
    Grassmann dyy() const { return 2.0 * cyy; }
};

inline Field tail_lift(const std::string& label, const Curve& L, double alpha, double beta,
                       const Tail& tail, const Context& ctx) {
    Field f(label, ctx, [L, alpha, beta, tail](double x, double y) {
        return L(alpha * x + beta * y) + tail.value(x, y);
    });
    if (L.d1) {
        f.register_derivative({1, 0}, [L, alpha, beta, tail](double x, double y) {
            return alpha * L.d1(alpha * x + beta * y) + tail.dx(x, y);
        });
        f.register_derivative({0, 1}, [L, alpha, beta, tail](double x, double y) {
            return beta * L.d1(alpha * x + beta * y) + tail.dy(x, y);
        });
    }
    if (L.d2) {
        f.register_derivative({2, 0}, [L, alpha, beta, tail](double x, double y) {
            return (alpha * alpha) * L.d2(alpha * x + beta * y) + tail.dxx();
        });
        f.register_derivative({1, 1}, [L, alpha, beta, tail](double x, double y) {
            return (alpha * beta) * L.d2(alpha * x + beta * y) + tail.dxy();
        });
        f.register_derivative({0, 2}, [L, alpha, beta, tail](double x, double y) {
            return (beta * beta) * L.d2(alpha * x + beta * y) + tail.dyy();
        });
    }
    return f;
}

// phi = y F(x/y) with chart y != 0 (dilation rows)
inline Field dilation_phi(const Curve& F, const Context& ctx) {
    Field f("dilation.phi", ctx, [F](double x, double y) {
        if (y == 0.0) throw std::domain_error("y = 0");
        return y * F(x / y);
    });
    if (F.d1) {
        f.register_derivative({1, 0}, [F](double x, double y) { return F.d1(x / y); });
        f.register_derivative({0, 1}, [F](double x, double y) {
            const double xi = x / y;
            return F(xi) - xi * F.d1(xi);
        });
    }
    if (F.d2) {
        f.register_derivative({2, 0}, [F](double x, double y) { return (1.0 / y) * F.d2(x / y); });
        f.register_derivative({1, 1}, [F](double x, double y) {
            const double xi = x / y;
            return (-xi / y) * F.d2(xi);
        });
        f.register_derivative({0, 2}, [F](double x, double y) {
            const double xi = x / y;
            return (xi * xi / y) * F.d2(xi);
        });
    }
    return f;
}

// psi = y^{3/2} Lambda(x/y) with chart y > 0
inline Field dilation_psi(const Curve& L, const Context& ctx) {
    Field f("dilation.psi", ctx, [L](double x, double y) {
        if (y <= 0.0) throw std::domain_error("y <= 0");
        return std::pow(y, 1.5) * L(x / y);
    });
    if (L.d1) {
        f.register_derivative({1, 0}, [L](double x, double y) {
            return std::sqrt(y) * L.d1(x / y);
        });
        f.register_derivative({0, 1}, [L](double x, double y) {
            const double xi = x / y;
            return std::sqrt(y) * (1.5 * L(xi) - xi * L.d1(xi));
        });
    }
    if (L.d2) {
        f.register_derivative({2, 0}, [L](double x, double y) {
            return (1.0 / std::sqrt(y)) * L.d2(x / y);
        });
        f.register_derivative({1, 1}, [L](double x, double y) {
            const double xi = x / y;
            return (1.0 / std::sqrt(y)) * (0.5 * L.d1(xi) - xi * L.d2(xi));
        });
        f.register_derivative({0, 2}, [L](double x, double y) {
            const double xi = x / y;
            return (1.0 / std::sqrt(y)) * (0.75 * L(xi) - xi * L.d1(xi) + xi * xi * L.d2(xi));
        });
    }
    return f;
}

// phi = F(x^2 + y^2) + mu arcsin(y / r) (rotation rows; mu = 0 gives the pure row)
inline Field rotation_phi(const Curve& F, double mu, const Context& ctx) {
    Field f("rotation.phi", ctx, [F, mu, ctx](double x, double y) {
        const double r2 = x * x + y * y;
        if (r2 == 0.0) throw std::domain_error("origin excluded");
        return F(r2) + Grassmann::scalar(ctx, mu * std::asin(y / std::sqrt(r2)));
    });
    if (F.d1) {
        f.register_derivative({1, 0}, [F, mu, ctx](double x, double y) {
            const double r2 = x * x + y * y;
            return (2.0 * x) * F.d1(r2) + Grassmann::scalar(ctx, -mu * y / r2);
        });
        f.register_derivative({0, 1}, [F, mu, ctx](double x, double y) {
            const double r2 = x * x + y * y;
            return (2.0 * y) * F.d1(r2) + Grassmann::scalar(ctx, mu * x / r2);
        });
    }
    if (F.d1 && F.d2) {
        f.register_derivative({2, 0}, [F, mu, ctx](double x, double y) {
            const double r2 = x * x + y * y;
            return 2.0 * F.d1(r2) + (4.0 * x * x) * F.d2(r2) +
                   Grassmann::scalar(ctx, 2.0 * mu * x * y / (r2 * r2));
        });
        f.register_derivative({1, 1}, [F, mu, ctx](double x, double y) {
            const double r2 = x * x + y * y;
            return (4.0 * x * y) * F.d2(r2) +
                   Grassmann::scalar(ctx, -mu * (x * x - y * y) / (r2 * r2));
        });
        f.register_derivative({0, 2}, [F, mu, ctx](double x, double y) {
            const double r2 = x * x + y * y;
            return 2.0 * F.d1(r2) + (4.0 * y * y) * F.d2(r2) +
                   Grassmann::scalar(ctx, -2.0 * mu * x * y / (r2 * r2));
        });
    }
    return f;
}

// phi = sqrt(x^2+y^2) F(arctan(y/x) - a ln r), numeric derivatives only
inline Field spiral_phi(const Curve& F, double a, const Context& ctx) {
    return Field("spiral.phi", ctx, [F, a](double x, double y) {
        if (x <= 0.0) throw std::domain_error("chart restricted to x > 0");
        const double r = std::sqrt(x * x + y * y);
        return r * F(std::atan(y / x) - a * std::log(r));
    });
}

}  // namespace detail

// Builds the full-plane candidate pair for a reduced candidate, following
// the printed change of variable for the row, fermionic tails included.
inline std::pair<Field, Field> lift(const SubalgebraSpec& spec, const ReducedCandidate& rc,
                                    const Context& ctx) {
    const Family fam = parse_family(spec.id);
    const double m = spec.m, n = spec.n;
    const Grassmann e1 = spec.eta1, e2 = spec.eta2;
    const Grassmann zg(ctx);
    using detail::Tail;

    switch (fam) {
        case Family::L1:
            return {detail::dilation_phi(rc.F, ctx), detail::dilation_psi(rc.Lambda, ctx)};
        case Family::L2:  // phi = phi(y), psi = psi(y)
            return {detail::affine_lift("L2.phi", rc.F, 1, 0, 1, 0, 0, ctx),
                    detail::tail_lift("L2.psi", rc.Lambda, 0, 1, {zg, zg, zg}, ctx)};
        case Family::L3:
            return {detail::affine_lift("L3.phi", rc.F, 1, 1, 0, 0, 0, ctx),
                    detail::tail_lift("L3.psi", rc.Lambda, 1, 0, {zg, zg, zg}, ctx)};
        case Family::L4:
            return {detail::affine_lift("L4.phi", rc.F, 1, -m, 1, 0, 0, ctx),
                    detail::tail_lift("L4.psi", rc.Lambda, -m, 1, {zg, zg, zg}, ctx)};
        case Family::L6:  // phi = (F(y) + x)/m
            return {detail::affine_lift("L6.phi", rc.F, 1.0 / m, 0, 1, 1.0 / m, 0, ctx),
                    detail::tail_lift("L6.psi", rc.Lambda, 0, 1, {zg, zg, zg}, ctx)};
        case Family::L7:  // phi = (F(x) + y)/m
            return {detail::affine_lift("L7.phi", rc.F, 1.0 / m, 1, 0, 0, 1.0 / m, ctx),
                    detail::tail_lift("L7.psi", rc.Lambda, 1, 0, {zg, zg, zg}, ctx)};
        case Family::L8:  // phi = F(x - (m/n) y) + y/n
            return {detail::affine_lift("L8.phi", rc.F, 1, 1, -m / n, 0, 1.0 / n, ctx),
                    detail::tail_lift("L8.psi", rc.Lambda, 1, -m / n, {zg, zg, zg}, ctx)};
        case Family::SL2:  // psi tail (1/2) e1 x^2 + e2 x y
            return {detail::affine_lift("sL2.phi", rc.F, 1, 0, 1, 0, 0, ctx),
                    detail::tail_lift("sL2.psi", rc.Lambda, 0, 1, {0.5 * e1, e2, zg}, ctx)};
        case Family::SL3:  // psi tail e1 x y + (1/2) e2 y^2
            return {detail::affine_lift("sL3.phi", rc.F, 1, 1, 0, 0, 0, ctx),
                    detail::tail_lift("sL3.psi", rc.Lambda, 1, 0, {zg, e1, 0.5 * e2}, ctx)};
        case Family::SL4:  // psi tail (1/2) e1 x^2 - (1/2) m e2 x^2 + e2 x y
            return {detail::affine_lift("sL4.phi", rc.F, 1, -m, 1, 0, 0, ctx),
                    detail::tail_lift("sL4.psi", rc.Lambda, -m, 1,
                                      {0.5 * e1 - (0.5 * m) * e2, e2, zg}, ctx)};
        case Family::SL6:  // phi = F(y) + x/m, psi tail (1/(2m)) e1 x^2 + (1/m) e2 x y
            return {detail::affine_lift("sL6.phi", rc.F, 1, 0, 1, 1.0 / m, 0, ctx),
                    detail::tail_lift("sL6.psi", rc.Lambda, 0, 1,
                                      {(0.5 / m) * e1, (1.0 / m) * e2, zg}, ctx)};
        case Family::SL7:  // phi = F(x) + y/m, psi tail (1/m) e1 x y + (1/(2m)) e2 y^2
            return {detail::affine_lift("sL7.phi", rc.F, 1, 1, 0, 0, 1.0 / m, ctx),
                    detail::tail_lift("sL7.psi", rc.Lambda, 1, 0,
                                      {zg, (1.0 / m) * e1, (0.5 / m) * e2}, ctx)};
        case Family::SL8:  // psi tail (1/n) e1 x y - (m/(2n^2)) e1 y^2 + (1/(2n)) e2 y^2
            return {detail::affine_lift("sL8.phi", rc.F, 1, 1, -m / n, 0, 1.0 / n, ctx),
                    detail::tail_lift("sL8.psi", rc.Lambda, 1, -m / n,
                                      {zg, (1.0 / n) * e1,
                                       (-0.5 * m / (n * n)) * e1 + (0.5 / n) * e2},
                                      ctx)};
        case Family::CL2:
            return {detail::affine_lift("cL2.phi", rc.F, 1, 0, 1, 0, 0, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        case Family::CL3:  // phi = F(y) + x/m
            return {detail::affine_lift("cL3.phi", rc.F, 1, 0, 1, 1.0 / m, 0, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        case Family::CL4:
        case Family::CMDilation:
            return {detail::dilation_phi(rc.F, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        case Family::CL5:
            return {detail::rotation_phi(rc.F, 0.0, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        case Family::CL6:
            return {detail::spiral_phi(rc.F, spec.a, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        case Family::CL7:
            return {detail::rotation_phi(rc.F, spec.mu, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        case Family::CMTranslation:  // linear solutions, F used as phi = F(k x + y)
            return {detail::affine_lift("cmT.phi", rc.F, 1, spec.k, 1, 0, 0, ctx),
                    Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); })};
        default:
            throw unknown_row_error("row " + spec.id + " admits no reduction");
    }
}

// -----------------------------------------------------------------------------
// Reduced residuals (printed left-hand sides)
// -----------------------------------------------------------------------------

// the common quadratic bracket of the Z + mP1 + nP2 rows
inline Grassmann l8_bracket(const Grassmann& Fp, double m, double n, double e,
                            const Context& ctx) {
    const double q = m / n;
    return (-e * std::pow(1 + e * q * q, 2)) * (Fp * Fp) +
           (2 * m / (n * n) + 2 * e * m * m * m / std::pow(n, 4)) * Fp +
           Grassmann::scalar(ctx, 1 + q * q - e * m * m / std::pow(n, 4));
}


inline std::pair<Grassmann, Grassmann> reduced_residual(const SubalgebraSpec& spec,
                                                        const ReducedCandidate& rc, double xi,
                                                        const DiffConfig& cfg = {}) {
    const Family fam = parse_family(spec.id);
    const Context& ctx = rc.F.ctx;
    const double e = double(spec.eps);
    const double m = spec.m, n = spec.n;
    const Grassmann e1 = spec.eta1, e2 = spec.eta2;

    const Grassmann F = rc.F(xi), Fp = rc.F.deriv(xi, 1, cfg), Fpp = rc.F.deriv(xi, 2, cfg);
    const Grassmann L = rc.Lambda(xi), Lp = rc.Lambda.deriv(xi, 1, cfg),
                    Lpp = rc.Lambda.deriv(xi, 2, cfg);
    const Grassmann zero(ctx);
    auto sc = [&](double v) { return Grassmann::scalar(ctx, v); };

    switch (fam) {
        case Family::L1: {
            const Grassmann first =
                (1 + xi * xi) * Fpp - e * std::pow(1 + e * xi * xi, 2) * (Fp * Fp * Fpp) +
                (2 * xi * (1 + e * xi * xi)) * (F * Fp * Fpp) - (e * xi * xi) * (F * F * Fpp) +
                (0.75 * e) * ((F - xi * Fp) * L * Lp) -
                (1.5 * e * xi) * ((F - xi * Fp) * L * Lpp) +
                (1 + e * xi * xi) * ((F - xi * Fp) * Lp * Lpp);
            const Grassmann second =
                (1 + xi * xi) * Lpp - e * std::pow(1 + e * xi * xi, 2) * (Fp * Fp * Lpp) +
                (2 * xi * (1 + e * xi * xi)) * (F * Fp * Lpp) - (e * xi * xi) * (F * F * Lpp) +
                (xi * (1 + e * xi * xi)) * (Fp * Fp * Lp) -
                (e * (2 * xi * xi + e)) * (F * Fp * Lp) + (e * xi) * (F * F * Lp) - xi * Lp -
                (0.75 * e * xi * xi) * (Fp * Fp * L) + (1.5 * e * xi) * (F * Fp * L) -
                (0.75 * e) * (F * F * L) + 0.75 * L;
            return {first, second};
        }
        case Family::L2:
        case Family::L3: {
            const Grassmann bracket = sc(1.0) - e * (Fp * Fp);
            return {bracket * Fpp, bracket * Lpp};
        }
        case Family::L4: {
            const Grassmann bracket = sc(m * m + 1) - (e * std::pow(m * m + e, 2)) * (Fp * Fp);
            return {bracket * Fpp, bracket * Lpp};
        }
        case Family::L6:
        case Family::L7: {
            const Grassmann bracket = sc(m * m) - e * (Fp * Fp);
            return {bracket * Fpp, bracket * Lpp};
        }
        case Family::L8: {
            const Grassmann bracket = l8_bracket(Fp, m, n, e, ctx);
            return {bracket * Fpp, bracket * Lpp};
        }
        case Family::SL2: {
            const Grassmann first =
                (-2 * e) * (Fp * (e2 * Lpp)) - 2.0 * (Fp * (e1 * e2)) + Fpp - e * (Fp * Fp * Fpp);
            const Grassmann second = Lpp - e * (Fp * Fp * Lpp) + e1;
            return {first, second};
        }
        case Family::SL3: {
            const Grassmann first = (sc(1.0) - e * (Fp * Fp)) * Fpp;
            const Grassmann second = Lpp - e * (Fp * Fp * Lpp) + e2;
            return {first, second};
        }
        case Family::SL4: {
            const Grassmann first =
                (1 + m * m) * Fpp - e * std::pow(1 + e * m * m, 2) * (Fp * Fp * Fpp) +
                2.0 * (Fp * (((-e) * e2 + m * e1) * Lpp + e2 * e1));
            const Grassmann second =
                (1 + m * m) * Lpp - e * std::pow(1 + e * m * m, 2) * (Fp * Fp * Lpp) +
                m * ((2.0 * e2 - (e * m) * e1 + (e * m * m) * e2) * (Fp * Fp)) +
                (e1 - m * e2);
            return {first, second};
        }
        case Family::SL6: {
            const Grassmann first = Fpp - e * (Fp * Fp * Fpp) -
                                    (2.0 / (m * m)) * ((e1 * e2) * Fp) -
                                    (e * 2.0 / m) * (e2 * (Fp * Lpp));
            const Grassmann second = Lpp - e * (Fp * Fp * Lpp) - (2.0 / (m * m)) * (e2 * Fp) -
                                     (e / (m * m * m)) * (1 - e * m * m) * e1;
            return {first, second};
        }
        case Family::SL7: {
            const Grassmann first = Fpp - e * (Fp * Fp * Fpp) + (2.0 / (m * m)) * (e1 * Lpp) -
                                    (e * 2.0 / (m * m * m)) * (e1 * e2);
            const Grassmann second = Lpp - e * (Fp * Fp * Lpp) - (2.0 / (m * m)) * (e1 * Fp) -
                                     (e / (m * m * m)) * (1 - e * m * m) * e2;
            return {first, second};
        }
        case Family::SL8: {
            const Grassmann bracket = l8_bracket(Fp, m, n, e, ctx);
            const Grassmann one_mFp = sc(1.0) - m * Fp;
            const Grassmann first =
                bracket * Fpp +
                (2.0 / (n * n)) * ((e1 - (e * m / n) * e2) * (one_mFp * Lpp)) -
                (e * 2.0 / (n * n * n)) * (one_mFp * (e1 * e2));
            const Grassmann coef_e1 =
                (2 * m / (n * n) + e * m * m * m / std::pow(n, 4)) * (Fp * Fp) -
                (2.0 / (n * n) + 2 * e * m * m / std::pow(n, 4)) * Fp +
                sc(-m / (n * n) + e * m / std::pow(n, 4));
            const Grassmann coef_e2 = (-e * m * m / std::pow(n, 3)) * (Fp * Fp) +
                                      (e * 2 * m / std::pow(n, 3)) * Fp +
                                      sc(1.0 / n - e / std::pow(n, 3));
            const Grassmann second = bracket * Lpp + coef_e1 * e1 + coef_e2 * e2;
            return {first, second};
        }
        case Family::CL2:
        case Family::CL3: {
            return {(sc(1.0) - e * (Fp * Fp)) * Fpp, zero};
        }
        case Family::CL4:
        case Family::CMDilation: {
            const Grassmann bracket =
                sc(1 + xi * xi) - e * std::pow(1 + e * xi * xi, 2) * (Fp * Fp) +
                (2 * xi * (1 + e * xi * xi)) * (F * Fp) - (e * xi * xi) * (F * F);
            return {bracket * Fpp, zero};
        }
        case Family::CL5: {
            return {Fp + xi * Fpp - (2 * xi) * (Fp * Fp * Fp) -
                        (4 * xi * xi) * (Fp * Fp * Fpp),
                    zero};
        }
        case Family::CL6: {
            const double A = spec.a;
            return {(-2 * A * (1 + A * A)) * (F * Fp * Fpp) +
                        std::pow(1 + A * A, 2) * (Fp * Fp * Fpp) + (A * A) * (F * F * Fpp) -
                        (1 + A * A) * Fpp - (A * (1 + A * A)) * (Fp * Fp * Fp) +
                        (1 + 2 * A * A) * (F * Fp * Fp) - A * (F * F * Fp) + (2 * A) * Fp - F,
                    zero};
        }
        case Family::CL7: {
            const double mu2 = spec.mu * spec.mu;
            return {mu2 * Fp + (2 * xi) * Fp - (4 * xi * xi) * (Fp * Fp * Fp) +
                        (2 * xi * xi) * Fpp - (8 * xi * xi * xi) * (Fp * Fp * Fpp),
                    zero};
        }
        case Family::CMTranslation: {
            return {(sc(1 + spec.k * spec.k) -
                     e * std::pow(spec.k * spec.k + e, 2) * (Fp * Fp)) *
                        Fpp,
                    zero};
        }
        default:
            throw unknown_row_error("row " + spec.id + " has no reduced equation");
    }
}

// -----------------------------------------------------------------------------
// Decoupling condition, omega equations, combined equation
// -----------------------------------------------------------------------------

// (3/4 e L L' - 3/2 e xi L L'' + (1 + e xi^2) L' L'') (F - xi F')
inline Grassmann decoupling_condition(const ReducedCandidate& rc, double xi, int eps,
                                      const DiffConfig& cfg = {}) {
    const double e = double(eps);
    const Grassmann F = rc.F(xi), Fp = rc.F.deriv(xi, 1, cfg);
    const Grassmann L = rc.Lambda(xi), Lp = rc.Lambda.deriv(xi, 1, cfg),
                    Lpp = rc.Lambda.deriv(xi, 2, cfg);
    const Grassmann factor = (0.75 * e) * (L * Lp) - (1.5 * e * xi) * (L * Lpp) +
                             (1 + e * xi * xi) * (Lp * Lpp);
    return factor * (F - xi * Fp);
}

enum class OmegaFamily { SL2, SL4, SL6, SL7 };

struct OmegaParams {
    double m = 1.0;
    int eps = 1;
    Grassmann eta1, eta2;
};

// printed first-order equations for omega = phi', with the Kronecker delta
// delta_{eps,1}
inline Grassmann omega_residual(OmegaFamily fam, const Curve& omega, double t,
                                const OmegaParams& p, const DiffConfig& cfg = {}) {
    const double e = double(p.eps);
    const double del = (p.eps == 1) ? 1.0 : 0.0;
    const Grassmann w = omega(t), wp = omega.deriv(t, 1, cfg);
    const Grassmann ee = p.eta1 * p.eta2;
    const Context& ctx = w.context();
    const Grassmann one = Grassmann::scalar(ctx, 1.0);
    const Grassmann w2 = w * w, w3 = w2 * w;
    switch (fam) {
        case OmegaFamily::SL2: {
            const Grassmann sq = one - e * w2;
            return sq * sq * wp - 2.0 * (ee * w3) + (4.0 * del) * (w * ee);
        }
        case OmegaFamily::SL4: {
            const double m = p.m;
            const double c1 = std::pow(1 + m * m, 2);
            const double c2 = 2 * (1 + m * m) * std::pow(1 + e * m * m, 2);
            const double c3 = std::pow(1 + e * m * m, 4);
            return (e * c1) * wp - c2 * (w2 * wp) + (e * c3) * (w2 * w2 * wp) +
                   (2 * (1 - m * m)) * (ee * w3) - (4 * del) * (w * ee);
        }
        case OmegaFamily::SL6: {
            const double m = p.m;
            const Grassmann sq = one - e * w2;
            return sq * sq * wp + (e * 2 / (m * m)) * (ee * w3) +
                   (2 / std::pow(m, 4)) * (1 - 2 * m * m * del) * (ee * w);
        }
        case OmegaFamily::SL7: {
            const double m = p.m;
            const Grassmann sq = one - e * w2;
            return sq * sq * wp +
                   (2 / std::pow(m, 5)) * (ee * ((m * m) * w2 + Grassmann::scalar(ctx, e - 2 * m * m * del)));
        }
    }
    throw unknown_row_error("unknown omega family");
}

// the combined equation of the Z + mP1 + nP2 family, transcribed term by term
inline Grassmann combined_residual_L8(const Curve& F, double xi, double m, double n, int eps,
                                      const Grassmann& eta1, const Grassmann& eta2,
                                      const DiffConfig& cfg = {}) {
    const double e = double(eps);
    const double del = (eps == 1) ? 1.0 : 0.0;
    const Grassmann Fp = F.deriv(xi, 1, cfg), Fpp = F.deriv(xi, 2, cfg);
    const Context& ctx = Fp.context();
    const Grassmann Fp2 = Fp * Fp, Fp3 = Fp2 * Fp, Fp4 = Fp2 * Fp2;

    const double A4 = std::pow(m * m + e * n * n, 4);
    const double A3 = -4 * e * m * std::pow(n * n + e * m * m, 3);
    const double A2 = 6 * m * m * std::pow(m * m + e * n * n, 2) -
                      2 * e * n * n * (std::pow(n, 4) + e * std::pow(m, 4)) * (n * n + e * m * m) -
                      4 * m * m * std::pow(n, 4) * (n * n + m * m) * del;
    const double A1 = 4 * m *
                      (n * n * (std::pow(n, 4) + e * std::pow(m, 4)) -
                       e * m * m * (n * n + e * m * m) + 2 * m * m * std::pow(n, 4) * del);
    const double A0 = std::pow(m * m * (1 - e * n * n) - e * std::pow(n, 4), 2);

    const Grassmann first = (A4 * Fp4 + A3 * Fp3 + A2 * Fp2 + A1 * Fp +
                             Grassmann::scalar(ctx, A0)) *
                            Fpp;

    const double B3 = -2 * e * m * std::pow(n, 3) * (m * m + e * n * n);
    const double B2 = 2 * std::pow(n, 3) * (n * n + 3 * e * m * m);
    const double B1 = 4 * m * std::pow(n, 5) * del - 6 * e * m * std::pow(n, 3);
    const double B0 = 2 * e * std::pow(n, 3) - 4 * std::pow(n, 5) * del;

    const Grassmann second =
        (B3 * Fp3 + B2 * Fp2 + B1 * Fp + Grassmann::scalar(ctx, B0)) * (eta1 * eta2);
    return first + second;
}

// -----------------------------------------------------------------------------
// Lift verification
// -----------------------------------------------------------------------------

struct Grid {
    double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
    int nx = 20, ny = 20;
    double margin = 0.05;  // exclusion margin around chart singularities

    std::vector<std::pair<double, double>> points() const {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(std::size_t(nx) * std::size_t(ny));
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                pts.push_back({x0 + (x1 - x0) * (nx == 1 ? 0.5 : double(i) / (nx - 1)),
                               y0 + (y1 - y0) * (ny == 1 ? 0.5 : double(j) / (ny - 1))});
        return pts;
    }
};

// chart exclusion for a row at a given point
inline bool chart_excluded(const SubalgebraSpec& spec, double x, double y, double margin) {
    switch (parse_family(spec.id)) {
        case Family::L1:
            return y < margin;  // y^{3/2} in the psi lift needs y > 0
        case Family::CL4:
        case Family::CMDilation:
            return std::abs(y) < margin;
        case Family::CL5:
        case Family::CL7:
            return x * x + y * y < margin * margin;
        case Family::CL6:
            return x < margin;
        default:
            return false;
    }
}

struct LiftReport {
    double max_reduced = 0.0;
    double max_bosonic = 0.0;
    double max_fermionic = 0.0;
    double mean_residual = 0.0;
    int points_used = 0;
    int points_excluded = 0;
    bool pass = false;
};

// Round trip: verify the reduced residual on the projected xi values, then
// the full residuals of the lifted pair over the chart-restricted grid.
inline LiftReport lift_verify(const SubalgebraSpec& spec, const ReducedCandidate& rc,
                              const Grid& grid, const Context& ctx, const DiffConfig& cfg = {}) {
    LiftReport rep;
    const Family fam = parse_family(spec.id);
    auto [phi, psi] = lift(spec, rc, ctx);
    double sum = 0.0;
    for (auto [x, y] : grid.points()) {
        if (chart_excluded(spec, x, y, grid.margin) ||
            (rc.F.domain_ok && !rc.F.domain_ok(symmetry_variable(spec, x, y)))) {
            ++rep.points_excluded;
            continue;
        }
        const double xi = symmetry_variable(spec, x, y);
        auto [r1, r2] = reduced_residual(spec, rc, xi, cfg);
        rep.max_reduced = std::max({rep.max_reduced, r1.norm_inf(), r2.norm_inf()});
        double local = 0.0;
        if (is_classical(fam)) {
            const double r = std::abs(classical_residual(phi, spec.eps, x, y, cfg));
            rep.max_bosonic = std::max(rep.max_bosonic, r);
            local = r;
        } else {
            SusyParams p;
            p.eps = spec.eps;
            const double rb = susy_residual_bosonic(phi, psi, p, x, y, cfg).value.norm_inf();
            const double rf = susy_residual_fermionic(phi, psi, p, x, y, cfg).value.norm_inf();
            rep.max_bosonic = std::max(rep.max_bosonic, rb);
            rep.max_fermionic = std::max(rep.max_fermionic, rf);
            local = std::max(rb, rf);
        }
        sum += local;
        ++rep.points_used;
    }
    rep.mean_residual = rep.points_used ? sum / rep.points_used : 0.0;
    rep.pass = rep.points_used > 0 &&
               std::max({rep.max_reduced, rep.max_bosonic, rep.max_fermionic}) <= cfg.tol;
    return rep;
}

}  // namespace sgflow
