#pragma once

// Catalog entries.  Each verify() runs the entry's own residual gate on its
// declared domain and returns one outcome row.

#include <algorithm>

#include "solutions.hpp"

namespace sgflow {

namespace detail {

// Residual of a first-order logarithmic-derivative candidate h for the
// fermionic profile equation with a given even profile F:
// P2 (h' + h^2) + P1 h + P0, evaluated with a finite-difference h'.
inline cplx lambda_h_residual(const Curve& F, const std::function<cplx(double)>& h, double xi,
                              int eps) {
    const double e = double(eps);
    const cplx Fv = F(xi).body(), Fp = F.deriv(xi, 1).body();
    const cplx P2 = (1 + xi * xi) - e * std::pow(1 + e * xi * xi, 2) * Fp * Fp +
                    2 * xi * (1 + e * xi * xi) * Fv * Fp - e * xi * xi * Fv * Fv;
    const cplx P1 = xi * (1 + e * xi * xi) * Fp * Fp - e * (2 * xi * xi + e) * Fv * Fp +
                    e * xi * Fv * Fv - xi;
    const cplx P0 = -0.75 * e * xi * xi * Fp * Fp + 1.5 * e * xi * Fv * Fp -
                    0.75 * e * Fv * Fv + 0.75;
    const double dh = 1e-6;
    const cplx hv = h(xi);
    const cplx hp = (h(xi + dh) - h(xi - dh)) / (2.0 * dh);
    return P2 * (hp + hv * hv) + P1 * hv + P0;
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> entries;

    // ---------------- classical solutions ----------------

    entries.push_back(CatalogEntry{
        "classical-linear",
        "linear velocity potential",
        "full plane",
        EntryClass::Exact,
        {{"C1", 1.0}, {"C2", 0.0}, {"eps", 1.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "classical-minus-translation";
            spec.eps = int(param_or(p, "eps", 1.0));
            spec.k = 0.6;
            ReducedCandidate rc{curves::linear_F(ctx, param_or(p, "C1", 1.0),
                                                 param_or(p, "C2", 0.0)),
                                Curve::zero(ctx)};
            Grid g{-2, 2, -2, 2, 20, 20, 0.0};
            return detail::outcome_from_lift("classical-linear", "linear velocity potential",
                                             spec, rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "classical-kink",
        "condensation-wave potential from the dilation reduction",
        "y > margin",
        EntryClass::Exact,
        {{"C1", 0.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "classical-L4";
            spec.eps = 1;
            ReducedCandidate rc{curves::kink_F(ctx, param_or(p, "C1", 0.0),
                                               param_or(p, "sign", 1.0)),
                                Curve::zero(ctx)};
            Grid g{-2, 2, 0.3, 2.5, 20, 20, 0.05};
            return detail::outcome_from_lift("classical-kink",
                                             "condensation-wave potential", spec, rc, g, ctx,
                                             cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "classical-elliptic",
        "complex-valued potential from incomplete elliptic integrals",
        "|x/y| < 0.95, y away from 0",
        EntryClass::Exact,
        {{"C1", 0.7}, {"sign", 1.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "classical-minus-dilation";
            spec.eps = -1;
            ReducedCandidate rc{curves::elliptic_F(ctx, param_or(p, "C1", 0.7),
                                                   param_or(p, "sign", 1.0)),
                                Curve::zero(ctx)};
            Grid g{-0.9, 0.9, 1.0, 2.0, 20, 20, 0.05};
            auto out = detail::outcome_from_lift("classical-elliptic",
                                                 "elliptic-integral potential", spec, rc, g,
                                                 ctx, cfg, 1e-6);
            return out;
        }});

    entries.push_back(CatalogEntry{
        "classical-lambert",
        "rotation-reduced profile with derivative given by the Lambert function",
        "xi in [0.1, 5]",
        EntryClass::Exact,
        {{"C1", 0.3}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "classical-L5";
            spec.eps = 1;
            ReducedCandidate rc{curves::lambert_profile(ctx, param_or(p, "C1", 0.3),
                                                        param_or(p, "sign", 1.0)),
                                Curve::zero(ctx)};
            CheckOutcome out;
            out.id = "classical-lambert";
            out.anchor = "Lambert-function profile, first-order verification";
            out.tol = 1e-8;
            double sum = 0;
            int cnt = 0;
            for (double xi = 0.1; xi <= 5.0 + 1e-12; xi += 0.1) {
                auto [r, _unused] = reduced_residual(spec, rc, xi, cfg);
                out.max_residual = std::max(out.max_residual, r.norm_inf());
                sum += r.norm_inf();
                ++cnt;
            }
            out.mean_residual = sum / cnt;
            out.status = out.max_residual <= out.tol ? "pass" : "fail";
            out.details = "reduced-equation residual on xi grid, closed-form derivatives";
            return out;
        }});

    entries.push_back(CatalogEntry{
        "classical-density-kink",
        "Gaussian density and velocity components of the condensation wave",
        "rays off the x-axis",
        EntryClass::Exact,
        {{"C1", 0.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            const double C1 = param_or(p, "C1", 0.0);
            Field phi = kink_field(ctx, C1);
            CheckOutcome out;
            out.id = "classical-density-kink";
            out.anchor = "density e^{-u^2-v^2} and velocity components";
            out.tol = 1e-6;
            double worst = 0.0;
            for (auto [x, y] : std::vector<std::pair<double, double>>{
                     {1.0, 2.0}, {0.5, 0.7}, {-1.2, 1.4}, {2.0, 0.4}}) {
                auto st = density_and_velocity(phi, x, y, cfg);
                const double r = std::sqrt(x * x + y * y);
                const double T = std::atan(x / y) + C1;
                const double u_ref = x / r * T + y / r;
                const double v_ref = y / r * T - x / r;
                const double rho_ref = std::exp(-(1 + T * T));
                worst = std::max({worst, std::abs(st.u - u_ref), std::abs(st.v - v_ref),
                                  std::abs(st.rho - rho_ref)});
            }
            auto rep = kink_asymptotics_check(C1, ctx, cfg);
            worst = std::max({worst, std::abs(rep.limit_above - rep.expected_above),
                              std::abs(rep.limit_below - rep.expected_below),
                              rep.angular_spread});
            out.max_residual = worst;
            out.mean_residual = worst;
            out.status = (worst <= out.tol && rep.pass) ? "pass" : "fail";
            out.details = "printed velocity components, density limits, angular invariance";
            return out;
        }});

    // ---------------- susy catalog ----------------

    entries.push_back(CatalogEntry{
        "susy-L1-kink",
        "dilation-invariant pair: condensation wave with fermionic profile",
        "y > margin",
        EntryClass::Exact,
        {{"C1", 2.0}, {"sign", 1.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L1";
            spec.eps = 1;
            const double C1 = param_or(p, "C1", 2.0), sg = param_or(p, "sign", 1.0);
            ReducedCandidate rc{curves::kink_F(ctx, C1, sg), curves::kink_Lambda(ctx, C1, sg)};
            Grid g{-1.5, 1.5, 0.5, 2.0, 20, 20, 0.05};
            return detail::outcome_from_lift("susy-L1-kink", "kink with fermionic profile",
                                             spec, rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L1-linear-ratio",
        "linear profile paired with the |W|^{3/2}/|V|^{3/2} fermionic profile",
        "W > 0, V > 0",
        EntryClass::Exact,
        {{"C1", 2.0}, {"C2", 0.5}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L1";
            spec.eps = 1;
            const double C1 = param_or(p, "C1", 2.0), C2 = param_or(p, "C2", 0.5);
            ReducedCandidate rc{curves::linear_F(ctx, C1, C2),
                                curves::linear_ratio_Lambda(ctx, C1, C2)};
            // pick the Lambda guard as the shared domain guard
            rc.F.domain_ok = rc.Lambda.domain_ok;
            Grid g{-1.0, 1.0, 1.25, 2.5, 20, 20, 0.05};
            return detail::outcome_from_lift("susy-L1-linear-ratio",
                                             "linear profile with algebraic fermionic part",
                                             spec, rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L1-elliptic",
        "elliptic-integral bosonic profile with vanishing fermionic part",
        "|x/y| < 0.95, y > margin",
        EntryClass::Exact,
        {{"C1", 0.7}, {"sign", 1.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L1";
            spec.eps = -1;
            ReducedCandidate rc{curves::elliptic_F(ctx, param_or(p, "C1", 0.7),
                                                   param_or(p, "sign", 1.0)),
                                Curve::zero(ctx)};
            Grid g{-0.9, 0.9, 1.0, 2.0, 20, 20, 0.05};
            return detail::outcome_from_lift("susy-L1-elliptic",
                                             "elliptic bosonic part, zero fermionic part",
                                             spec, rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L1-elliptic-lambda",
        "printed exponential-integral fermionic profile for the elliptic case",
        "0.1 <= xi <= 0.8",
        EntryClass::VerbatimSuspect,
        {{"C1", 0.7}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            const double C1 = param_or(p, "C1", 0.7);
            const cplx I{0.0, 1.0};
            Curve F = curves::elliptic_F(ctx, C1, 1.0);
            auto J = [I](double xi) {
                return (ellip_F(cplx(xi, 0), I) - ellip_E(cplx(xi, 0), I)).real();
            };
            // printed integrand, radicals on principal branches, with the two
            // sign variants of the radical products
            auto h_printed = [C1, J](double sN) {
                return [C1, J, sN](double xi) -> cplx {
                    const double u = std::sqrt(1 + xi * xi), v = std::sqrt(1 - xi * xi);
                    const double W = J(xi) + C1;
                    return 0.75 * (W * W + sN * u * u) / (v * (u * W - xi * v));
                };
            };
            // first-order coefficient that actually annihilates the equation
            auto h_corrected = [C1, J](double xi) -> cplx {
                const double u = std::sqrt(1 + xi * xi), v = std::sqrt(1 - xi * xi);
                const double W = J(xi) + C1;
                return 0.75 * (W * W - v * v) / (v * (u * W - xi * v));
            };
            double printed_plus = 0, printed_minus = 0, corrected = 0;
            for (double xi = 0.1; xi <= 0.8 + 1e-12; xi += 0.1) {
                printed_plus = std::max(printed_plus,
                                        std::abs(detail::lambda_h_residual(F, h_printed(1.0), xi, -1)));
                printed_minus = std::max(
                    printed_minus, std::abs(detail::lambda_h_residual(F, h_printed(-1.0), xi, -1)));
                corrected = std::max(corrected,
                                     std::abs(detail::lambda_h_residual(F, h_corrected, xi, -1)));
            }
            CheckOutcome out;
            out.id = "susy-L1-elliptic-lambda";
            out.anchor = "exponential-integral fermionic profile, first-order verification";
            out.tol = 1e-6;
            out.max_residual = std::min(printed_plus, printed_minus);
            out.mean_residual = corrected;
            out.status = "reported";
            std::ostringstream os;
            os << "printed integrand residual: +variant " << printed_plus << ", -variant "
               << printed_minus << "; sign-corrected constant term gives " << corrected
               << " (the printed formula misses the equation by a constant shift "
                  "(W^2+u^2 vs W^2-v^2) under every radical branch choice)";
            out.details = os.str();
            return out;
        }});

    entries.push_back(CatalogEntry{
        "susy-L1-hyperbolic",
        "hyperbolic fermionic profile over a linear bosonic part",
        "g(xi) > 0, y > margin",
        EntryClass::Exact,
        {{"C1", 0.5}, {"C2", 0.3}, {"C3", 0.7}, {"C4", 0.2}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L1";
            spec.eps = -1;
            const double C1 = param_or(p, "C1", 0.5), C2 = param_or(p, "C2", 0.3);
            ReducedCandidate rc{
                curves::linear_F(ctx, C1, C2),
                curves::hyperbolic_Lambda(ctx, C1, C2, param_or(p, "C3", 0.7),
                                          param_or(p, "C4", 0.2), 1.4)};
            rc.F.domain_ok = rc.Lambda.domain_ok;
            Grid g{1.6, 3.0, 1.5, 2.0, 20, 20, 0.05};
            return detail::outcome_from_lift("susy-L1-hyperbolic",
                                             "hyperbolic fermionic profile", spec, rc, g, ctx,
                                             cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L2-imaginary-slope",
        "x-translation-invariant pair with unit-slope bosonic part and free fermionic part",
        "full plane",
        EntryClass::Exact,
        {{"eps", -1.0}, {"C2", 0.4}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L2";
            spec.eps = int(param_or(p, "eps", -1.0));
            // slope with eps slope^2 = 1: real for eps=+1, imaginary for eps=-1
            const cplx slope = spec.eps == 1 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
            Curve F;
            F.label = "L2.phi";
            F.ctx = ctx;
            F.eval = [ctx, slope, C2 = param_or(p, "C2", 0.4)](double yv) {
                return Grassmann::scalar(ctx, slope * yv + C2);
            };
            F.d1 = [ctx, slope](double) { return Grassmann::scalar(ctx, slope); };
            F.d2 = [ctx](double) { return Grassmann(ctx); };
            ReducedCandidate rc{F, curves::odd_profile(ctx, "eta1", "sech")};
            Grid g{-1.5, 1.5, -1.5, 1.5, 20, 20, 0.0};
            return detail::outcome_from_lift(
                "susy-L2-imaginary-slope", "unit-slope pair with arbitrary fermionic profile",
                spec, rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L4-travelling",
        "linear travelling wave of the P1 + mP2 reduction",
        "full plane",
        EntryClass::Exact,
        {{"m", 2.0}, {"eps", 1.0}, {"C1", 1.5}, {"C2", 0.3}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L4,m";
            spec.m = param_or(p, "m", 2.0);
            spec.eps = int(param_or(p, "eps", 1.0));
            Curve L;
            L.label = "L4.psi";
            L.ctx = ctx;
            const Grassmann K1 = Grassmann::generator(ctx, "K1");
            const Grassmann K2 = Grassmann::generator(ctx, "K2");
            L.eval = [K1, K2](double s) { return s * K1 + K2; };
            L.d1 = [K1](double) { return K1; };
            L.d2 = [ctx](double) { return Grassmann(ctx); };
            ReducedCandidate rc{curves::linear_F(ctx, param_or(p, "C1", 1.5),
                                                 param_or(p, "C2", 0.3)),
                                L};
            Grid g{-2, 2, -2, 2, 20, 20, 0.0};
            return detail::outcome_from_lift("susy-L4-travelling", "linear travelling wave",
                                             spec, rc, g, ctx, cfg, 1e-6);
        }});

    auto fixed_slope_entry = [](const std::string& id, const std::string& shape) {
        return CatalogEntry{
            id,
            "fixed-slope travelling wave with arbitrary fermionic " + shape + " profile",
            "full plane",
            EntryClass::Exact,
            {{"m", 2.0}, {"eps", 1.0}, {"C2", 0.4}, {"sign", 1.0}},
            [id, shape](const Context& ctx, const Params& p, const DiffConfig& cfg) {
                SubalgebraSpec spec;
                spec.id = "L4,m";
                spec.m = param_or(p, "m", 2.0);
                spec.eps = int(param_or(p, "eps", 1.0));
                const double m = spec.m, e = spec.eps;
                const double k2 = e * (m * m + 1) / std::pow(m * m + e, 2);
                if (k2 <= 0.0)
                    throw parameter_error("fixed slope is imaginary for these parameters");
                const double k = param_or(p, "sign", 1.0) * std::sqrt(k2);
                ReducedCandidate rc{curves::linear_F(ctx, k, param_or(p, "C2", 0.4)),
                                    curves::odd_profile(ctx, "eta1", shape)};
                Grid g{-2, 2, -2, 2, 20, 20, 0.0};
                return detail::outcome_from_lift(
                    id, "fixed-slope wave, fermionic " + shape, spec, rc, g, ctx, cfg, 1e-6);
            }};
    };
    entries.push_back(fixed_slope_entry("susy-L4-fixed-slope-sech", "sech"));
    entries.push_back(fixed_slope_entry("susy-L4-fixed-slope-sin", "sin"));
    entries.push_back(fixed_slope_entry("susy-L4-fixed-slope-tanh", "tanh"));

    entries.push_back(CatalogEntry{
        "susy-L8-fixed-slope",
        "propagation wave of the Z + mP1 + nP2 reduction with arbitrary fermionic profile",
        "full plane",
        EntryClass::Exact,
        {{"m", 1.0}, {"n", 2.0}, {"eps", 1.0}, {"C2", 0.2}, {"sign", 1.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "L8,m,n";
            spec.m = param_or(p, "m", 1.0);
            spec.n = param_or(p, "n", 2.0);
            spec.eps = int(param_or(p, "eps", 1.0));
            const double m = spec.m, n = spec.n, e = spec.eps;
            const double disc = e * (m * m + n * n);
            if (disc <= 0.0) throw parameter_error("slope is complex for these parameters");
            const double k =
                (m + param_or(p, "sign", 1.0) * n * std::sqrt(disc)) / (m * m + e * n * n);
            ReducedCandidate rc{curves::linear_F(ctx, k, param_or(p, "C2", 0.2)),
                                curves::odd_profile(ctx, "eta1", "sech")};
            Grid g{-2, 2, -2, 2, 20, 20, 0.0};
            return detail::outcome_from_lift("susy-L8-fixed-slope", "propagation wave", spec,
                                             rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L3-quadratic",
        "quadratic fermionic solution of the non-splitting P2 reduction",
        "full plane",
        EntryClass::Exact,
        {{"C1", 0.7}, {"C2", 0.2}, {"eps", 1.0}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "script-L3";
            spec.eps = int(param_or(p, "eps", 1.0));
            spec.eta1 = 0.8 * Grassmann::generator(ctx, "eta1");
            spec.eta2 = 1.2 * Grassmann::generator(ctx, "eta2");
            const double C1 = param_or(p, "C1", 0.7);
            const double denom = 1.0 - spec.eps * C1 * C1;
            if (std::abs(denom) < 1e-8)
                throw parameter_error("quadratic coefficient singular at eps C1^2 = 1");
            Curve L;
            L.label = "sL3.Lambda";
            L.ctx = ctx;
            const Grassmann K1 = Grassmann::generator(ctx, "K1");
            const Grassmann K2 = Grassmann::generator(ctx, "K2");
            const Grassmann q = (-0.5 / denom) * spec.eta2;
            L.eval = [q, K1, K2](double xv) { return (xv * xv) * q + xv * K1 + K2; };
            L.d1 = [q, K1](double xv) { return (2.0 * xv) * q + K1; };
            L.d2 = [q](double) { return 2.0 * q; };
            ReducedCandidate rc{curves::linear_F(ctx, C1, param_or(p, "C2", 0.2)), L};
            Grid g{-2, 2, -2, 2, 20, 20, 0.0};
            return detail::outcome_from_lift("susy-L3-quadratic",
                                             "quadratic fermionic profile", spec, rc, g, ctx,
                                             cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-L3-unit-slope",
        "unit-slope bosonic part with free fermionic profile, eta2 = 0",
        "full plane",
        EntryClass::Exact,
        {{"eps", 1.0}, {"C2", 0.1}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            SubalgebraSpec spec;
            spec.id = "script-L3";
            spec.eps = int(param_or(p, "eps", 1.0));
            spec.eta1 = Grassmann::generator(ctx, "eta1");
            spec.eta2 = Grassmann(ctx);  // the family requires eta2 = 0
            const cplx slope = spec.eps == 1 ? cplx(1, 0) : cplx(0, 1);
            Curve F;
            F.label = "sL3.phi";
            F.ctx = ctx;
            F.eval = [ctx, slope, C2 = param_or(p, "C2", 0.1)](double xv) {
                return Grassmann::scalar(ctx, slope * xv + C2);
            };
            F.d1 = [ctx, slope](double) { return Grassmann::scalar(ctx, slope); };
            F.d2 = [ctx](double) { return Grassmann(ctx); };
            ReducedCandidate rc{F, curves::odd_profile(ctx, "K1", "tanh")};
            Grid g{-1.5, 1.5, -1.5, 1.5, 20, 20, 0.0};
            return detail::outcome_from_lift("susy-L3-unit-slope",
                                             "unit-slope pair, free fermionic profile", spec,
                                             rc, g, ctx, cfg, 1e-6);
        }});

    entries.push_back(CatalogEntry{
        "susy-omega-transcendental",
        "first-order profile solving the transcendental relation exactly in the algebra",
        "y in [-1, 1]",
        EntryClass::Exact,
        {{"C1", 0.4}},
        [](const Context& ctx, const Params& p, const DiffConfig& cfg) {
            const double C1 = param_or(p, "C1", 0.4);
            const Grassmann e1 = Grassmann::generator(ctx, "eta1");
            const Grassmann e2 = Grassmann::generator(ctx, "eta2");
            const Grassmann ee = e1 * e2;

            auto relation_at = [ee, C1](double yv) {
                return [ee, C1, yv](const Grassmann& w) {
                    const auto& c = w.context();
                    const Grassmann w2 = w * w;
                    return 4.0 * (w2 * g_log(w)) - (4.0 * yv) * (ee.promoted(c) * w2) +
                           w2 * w2 - Grassmann::scalar(c, 1.0) -
                           (4.0 * C1) * (ee.promoted(c) * w2);
                };
            };

            Curve omega;
            omega.label = "omega";
            omega.ctx = ctx;
            omega.eval = [relation_at, ctx](double yv) {
                return g_solve_implicit(relation_at(yv), 1.0, ctx);
            };
            // exact derivative by implicit differentiation in the algebra
            omega.d1 = [relation_at, ctx, ee, C1](double yv) {
                const Grassmann w = g_solve_implicit(relation_at(yv), 1.0, ctx);
                const Grassmann w2 = w * w;
                const Grassmann Rw = 8.0 * (w * g_log(w)) + 4.0 * w - (8.0 * yv) * (ee * w) +
                                     4.0 * (w2 * w) - (8.0 * C1) * (ee * w);
                const Grassmann Ry = -4.0 * (ee * w2);
                return -Ry * g_inverse(Rw);
            };

            OmegaParams op;
            op.eps = -1;
            op.eta1 = e1;
            op.eta2 = e2;
            CheckOutcome out;
            out.id = "susy-omega-transcendental";
            out.anchor = "transcendental first-order profile";
            out.tol = 1e-12;  // exact in the algebra up to roundoff
            double sum = 0;
            int cnt = 0;
            for (double yv = -1.0; yv <= 1.0 + 1e-12; yv += 0.25) {
                const double r = omega_residual(OmegaFamily::SL2, omega, yv, op, cfg).norm_inf();
                out.max_residual = std::max(out.max_residual, r);
                sum += r;
                ++cnt;
                // the defining relation itself closes exactly
                const double rel = relation_at(yv)(omega(yv)).norm_inf();
                out.max_residual = std::max(out.max_residual, rel);
            }
            out.mean_residual = sum / cnt;
            out.status = out.max_residual <= out.tol ? "pass" : "fail";
            out.details = "omega equation and defining relation, exact algebra arithmetic";
            return out;
        }});

    return entries;
}

}  // namespace sgflow
