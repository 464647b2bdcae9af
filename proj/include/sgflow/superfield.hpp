#pragma once

// Superspace layer: superfields A + theta B, the operators D and H, the
// general superfield equation, and the theta-decomposition consistency
// check.  theta is one more generator of the shared set, reserved under the
// label "theta", so the superfield equation can be evaluated with the plain
// algebra product and split into theta-free and theta-coefficient parts.

#include <string>
#include <utility>

#include "calculus.hpp"
#include "grassmann.hpp"
#include "pde.hpp"

namespace sgflow {

inline const std::string theta_label = "theta";

struct SuperField {
    Field odd_part;   // A, fermionic
    Field even_part;  // B, bosonic

    SuperField(Field a, Field b) : odd_part(std::move(a)), even_part(std::move(b)) {}

    const Context& context() const { return odd_part.context(); }
};

inline int theta_index(const Context& ctx) { return ctx->index(theta_label); }

// value of the superfield at a point, as A + theta B
inline Grassmann superfield_value(const SuperField& f, double x, double y) {
    const Context& ctx = f.context();
    const Grassmann theta = Grassmann::generator(ctx, theta_index(ctx));
    return f.odd_part(x, y) + theta * f.even_part(x, y);
}

// split g = (theta-free part) + theta * (theta coefficient), theta leftmost
inline std::pair<Grassmann, Grassmann> theta_split(const Grassmann& g) {
    const Context& ctx = g.context();
    const int ti = theta_index(ctx);
    const Grassmann::Mask tbit = Grassmann::Mask(1u) << ti;
    Grassmann free_part(ctx), coef(ctx);
    for (const auto& [m, c] : g.terms()) {
        if (m & tbit) {
            // remove theta from the front: theta * rest picks up no sign when
            // theta has the given index and we count the generators below it
            const double sign = Grassmann::reorder_sign(tbit, m & ~tbit);
            coef += Grassmann::monomial(ctx, m & ~tbit, sign * c);
        } else {
            free_part += Grassmann::monomial(ctx, m, c);
        }
    }
    return {free_part, coef};
}

namespace detail {

// derivative forwarding for the component swap performed by D and H
inline Field shifted_x_derivative(const Field& src, const std::string& label, double sign) {
    Field out(label, src.context(), [src, sign](double x, double y) {
        return sign * partial(src, x, y, {1, 0}).value;
    });
    for (int i = 0; i + 1 <= 3; ++i)
        for (int j = 0; i + 1 + j <= 3; ++j)
            if (src.has_derivative({i + 1, j})) {
                FieldFn d = *src.derivative({i + 1, j});
                out.register_derivative({i, j}, [d, sign](double x, double y) {
                    return sign * d(x, y);
                });
            }
    return out;
}

}  // namespace detail

// D = d_theta + theta d_x:  D(A + theta B) = B + theta A_x
inline SuperField apply_D(const SuperField& f, const DiffConfig& = {}) {
    return SuperField(f.even_part, detail::shifted_x_derivative(f.odd_part, "D.B", 1.0));
}

// H = d_theta - theta d_x:  H(A + theta B) = B - theta A_x
inline SuperField apply_H(const SuperField& f, const DiffConfig& = {}) {
    return SuperField(f.even_part, detail::shifted_x_derivative(f.odd_part, "H.B", -1.0));
}

// -----------------------------------------------------------------------------
// The general superfield equation
// -----------------------------------------------------------------------------

// D^4 Phi - eps a (D^2 Phi)(D^3 Phi)(D^5 Phi) - eps (1-a)(D^3 Phi)^2 (D^4 Phi)
// - 2b (D^2 Phi)(D Phi)_y (D^3 Phi)_y - 2c (D^3 Phi) Phi_y (D^3 Phi)_y
// - 2(1-b-c)(D^3 Phi)(D Phi)_y (D^2 Phi)_y + Phi_yy
// - eps d Phi_y (D Phi)_y (D Phi)_yy - eps (1-d) ((D Phi)_y)^2 Phi_yy = 0
//
// Evaluated entirely inside the algebra with theta as a generator; component
// derivatives are taken once per point from the two component fields.
inline Grassmann superfield_residual(const SuperField& f, const SusyParams& p, double x, double y,
                                     const DiffConfig& cfg = {}) {
    const Context& ctx = f.context();
    const Grassmann theta = Grassmann::generator(ctx, theta_index(ctx));
    auto dA = [&](int i, int j) { return partial(f.odd_part, x, y, {i, j}, cfg).value; };
    auto dB = [&](int i, int j) { return partial(f.even_part, x, y, {i, j}, cfg).value; };

    // D^k Phi alternates between (A-type) + theta (B-type) layers
    const Grassmann D1 = dB(0, 0) + theta * dA(1, 0);
    const Grassmann D2 = dA(1, 0) + theta * dB(1, 0);
    const Grassmann D3 = dB(1, 0) + theta * dA(2, 0);
    const Grassmann D4 = dA(2, 0) + theta * dB(2, 0);
    const Grassmann D5 = dB(2, 0) + theta * dA(3, 0);

    const Grassmann Phi_y = dA(0, 1) + theta * dB(0, 1);
    const Grassmann Phi_yy = dA(0, 2) + theta * dB(0, 2);
    const Grassmann D1_y = dB(0, 1) + theta * dA(1, 1);
    const Grassmann D1_yy = dB(0, 2) + theta * dA(1, 2);
    const Grassmann D2_y = dA(1, 1) + theta * dB(1, 1);
    const Grassmann D3_y = dB(1, 1) + theta * dA(2, 1);

    const double e = double(p.eps);
    Grassmann r = D4;
    r -= (e * p.a) * (D2 * D3 * D5);
    r -= (e * (1.0 - p.a)) * (D3 * D3 * D4);
    r -= (2.0 * p.b) * (D2 * D1_y * D3_y);
    r -= (2.0 * p.c) * (D3 * Phi_y * D3_y);
    r -= (2.0 * (1.0 - p.b - p.c)) * (D3 * D1_y * D2_y);
    r += Phi_yy;
    r -= (e * p.d) * (Phi_y * D1_y * D1_yy);
    r -= (e * (1.0 - p.d)) * (D1_y * D1_y * Phi_yy);
    return r;
}

struct DecomposeReport {
    double max_bosonic_discrepancy = 0.0;
    double max_fermionic_discrepancy = 0.0;
    bool pass = false;
};

// The theta coefficient of the superfield residual must equal the bosonic
// component equation, and the theta-free part the fermionic one.
inline DecomposeReport decompose_check(const SuperField& f, const SusyParams& p,
                                       const std::vector<std::pair<double, double>>& points,
                                       const DiffConfig& cfg = {}) {
    DecomposeReport rep;
    for (auto [x, y] : points) {
        const Grassmann full = superfield_residual(f, p, x, y, cfg);
        auto [theta_free, theta_coef] = theta_split(full);
        const Grassmann bos = susy_residual_bosonic(f.even_part, f.odd_part, p, x, y, cfg).value;
        const Grassmann ferm = susy_residual_fermionic(f.even_part, f.odd_part, p, x, y, cfg).value;
        rep.max_bosonic_discrepancy =
            std::max(rep.max_bosonic_discrepancy, (theta_coef - bos).norm_inf());
        rep.max_fermionic_discrepancy =
            std::max(rep.max_fermionic_discrepancy, (theta_free - ferm).norm_inf());
    }
    rep.pass = rep.max_bosonic_discrepancy <= cfg.tol && rep.max_fermionic_discrepancy <= cfg.tol;
    return rep;
}

// Finite supersymmetry shift with odd parameter eta:
// components (A, B) -> (A + eta B, B - eta A_x).
inline std::pair<Field, Field> susy_shift(const Field& a, const Field& b, const Grassmann& eta) {
    if (!eta.pure_odd()) throw parity_error("supersymmetry shift parameter must be odd");
    Field a2("susy(" + a.label() + ")", a.context(), [a, b, eta](double x, double y) {
        return a(x, y) + eta * b(x, y);
    });
    Field b2("susy(" + b.label() + ")", b.context(), [a, b, eta](double x, double y) {
        return b(x, y) - eta * partial(a, x, y, {1, 0}).value;
    });
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            MultiIndex mi{i, j};
            if (i + j == 0) continue;
            if (a.has_derivative(mi) && b.has_derivative(mi)) {
                FieldFn da = *a.derivative(mi), db = *b.derivative(mi);
                a2.register_derivative(mi, [da, db, eta](double x, double y) {
                    return da(x, y) + eta * db(x, y);
                });
            }
            if (b.has_derivative(mi) && a.has_derivative({i + 1, j}) && i + 1 + j <= 3) {
                FieldFn db = *b.derivative(mi), dax = *a.derivative({i + 1, j});
                b2.register_derivative(mi, [db, dax, eta](double x, double y) {
                    return db(x, y) - eta * dax(x, y);
                });
            }
        }
    return {a2, b2};
}

}  // namespace sgflow
