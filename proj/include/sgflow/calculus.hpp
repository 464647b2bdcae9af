#pragma once

// Evaluatable fields on the (x, y) plane with values in the Grassmann
// algebra, and their numerical differentiation: central differences with
// Richardson extrapolation, applied coefficient-wise.  Closed-form partials
// can be registered per multi-index and are validated against the stencils
// at registration time.

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "grassmann.hpp"

namespace sgflow {

struct stencil_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct registration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiffConfig {
    double h = 1e-3;       // base step
    int levels = 2;        // Richardson refinement steps
    double tol = 1e-6;     // comparison tolerance for consistency checks
};

struct MultiIndex {
    int i = 0;  // order in x
    int j = 0;  // order in y
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

using FieldFn = std::function<Grassmann(double, double)>;

class Field {
  public:
    Field() = default;
    Field(std::string label, Context ctx, FieldFn eval)
        : label_(std::move(label)), ctx_(std::move(ctx)), eval_(std::move(eval)) {}

    static Field scalar(std::string label, Context ctx, std::function<cplx(double, double)> f) {
        auto c = ctx;
        return Field(std::move(label), c, [c, f = std::move(f)](double x, double y) {
            return Grassmann::scalar(c, f(x, y));
        });
    }

    const std::string& label() const { return label_; }
    const Context& context() const { return ctx_; }
    bool valid() const { return static_cast<bool>(eval_); }

    Grassmann operator()(double x, double y) const {
        Grassmann v;
        try {
            v = eval_(x, y);
        } catch (const std::domain_error& e) {
            throw stencil_error("evaluation of " + label_ + " failed on the stencil: " + e.what());
        }
        for (const auto& [m, c] : v.terms())
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw stencil_error("field evaluation produced a non-finite value at (" +
                                    std::to_string(x) + ", " + std::to_string(y) + ")");
        return v;
    }

    void register_derivative(MultiIndex mi, FieldFn f) {
        if (mi.i + mi.j > 3) throw registration_error("derivatives registered up to order 3 only");
        analytic_[mi] = std::move(f);
    }
    bool has_derivative(MultiIndex mi) const { return analytic_.count(mi) > 0; }
    const FieldFn* derivative(MultiIndex mi) const {
        auto it = analytic_.find(mi);
        return it == analytic_.end() ? nullptr : &it->second;
    }

  private:
    std::string label_;
    Context ctx_;
    FieldFn eval_;
    std::map<MultiIndex, FieldFn> analytic_;
};

struct PartialResult {
    Grassmann value;
    double error_estimate = 0.0;
};

namespace detail {

// central stencils of order 1..3 with even-order error expansions
template <typename F>
Grassmann central_stencil(const F& f, double t, double h, int order) {
    switch (order) {
        case 0:
            return f(t);
        case 1:
            return (f(t + h) - f(t - h)) * (0.5 / h);
        case 2:
            return (f(t + h) - 2.0 * f(t) + f(t - h)) * (1.0 / (h * h));
        case 3:
            return (f(t + 2.0 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2.0 * h)) *
                   (0.5 / (h * h * h));
        default:
            throw stencil_error("stencil order out of range");
    }
}

// Richardson table in h^2; returns extrapolated value plus an error estimate
// from the difference of the two highest-order entries.
template <typename F>
PartialResult richardson(const F& f, double t, int order, const DiffConfig& cfg) {
    const int L = std::max(1, cfg.levels);
    std::vector<Grassmann> row(L + 1);
    for (int k = 0; k <= L; ++k) row[k] = central_stencil(f, t, cfg.h / double(1 << k), order);
    double pow4 = 1.0;
    for (int j = 1; j <= L; ++j) {
        pow4 *= 4.0;
        for (int k = L; k >= j; --k)
            row[k] = (pow4 * row[k] - row[k - 1]) * (1.0 / (pow4 - 1.0));
    }
    // row[L-1] holds the previous diagonal entry of the extrapolation table
    const double err = (row[L] - row[L - 1]).norm_inf();
    return {row[L], err};
}

}  // namespace detail

// Numerical or registered partial derivative d^{i+j} f / dx^i dy^j at (x, y).
inline PartialResult partial(const Field& f, double x, double y, MultiIndex mi,
                             const DiffConfig& cfg = {}) {
    if (mi.i + mi.j > 3) throw stencil_error("partial derivatives available up to order 3");
    if (mi.i == 0 && mi.j == 0) return {f(x, y), 0.0};
    if (const FieldFn* a = f.derivative(mi)) return {(*a)(x, y), 0.0};

    if (mi.j == 0)
        return detail::richardson([&](double t) { return f(t, y); }, x, mi.i, cfg);
    if (mi.i == 0)
        return detail::richardson([&](double t) { return f(x, t); }, y, mi.j, cfg);

    // mixed partial: y-stencil of the x-derivative
    double inner_err = 0.0;
    auto inner = [&](double t) {
        PartialResult r = partial(f, x, t, {mi.i, 0}, cfg);
        inner_err = std::max(inner_err, r.error_estimate);
        return r.value;
    };
    PartialResult outer = detail::richardson(inner, y, mi.j, cfg);
    outer.error_estimate += inner_err;
    return outer;
}

// finite-difference path that never consults the registered table
inline PartialResult numeric_partial(const Field& f, double x, double y, MultiIndex mi,
                                     const DiffConfig& cfg = {}) {
    if (mi.i == 0 && mi.j == 0) return {f(x, y), 0.0};
    if (mi.j == 0)
        return detail::richardson([&](double t) { return f(t, y); }, x, mi.i, cfg);
    if (mi.i == 0)
        return detail::richardson([&](double t) { return f(x, t); }, y, mi.j, cfg);
    double inner_err = 0.0;
    auto inner = [&](double t) {
        PartialResult r = numeric_partial(f, x, t, {mi.i, 0}, cfg);
        inner_err = std::max(inner_err, r.error_estimate);
        return r.value;
    };
    PartialResult outer = detail::richardson(inner, y, mi.j, cfg);
    outer.error_estimate += inner_err;
    return outer;
}

// Validates every registered closed-form derivative against the stencils at
// seeded random probe points inside the given box.
inline void validate_registration(const Field& f, double x0, double x1, double y0, double y1,
                                  const DiffConfig& cfg = {}, std::uint64_t seed = 12345,
                                  int probes = 5) {
    std::mt19937_64 rng(seed);
    auto u = [&rng] { return double(rng() >> 11) * 0x1p-53; };
    for (int p = 0; p < probes; ++p) {
        const double x = x0 + (x1 - x0) * u();
        const double y = y0 + (y1 - y0) * u();
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                const MultiIndex mi{i, j};
                if (i + j == 0 || !f.has_derivative(mi)) continue;
                const Grassmann a = (*f.derivative(mi))(x, y);
                const Grassmann num = numeric_partial(f, x, y, mi, cfg).value;
                const double scale = std::max(1.0, num.norm_inf());
                if ((a - num).norm_inf() > cfg.tol * scale)
                    throw registration_error("registered derivative for " + f.label() +
                                             " disagrees with finite differences");
            }
    }
}

}  // namespace sgflow
