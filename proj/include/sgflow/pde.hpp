#pragma once

// Residual evaluators for the classical equation and for the two component
// equations of its supersymmetric extension.  Every equation is transcribed
// term by term into a table (parameter factor, epsilon power, ordered list of
// derivative factors); the tables drive both evaluation and the coefficient
// audits in the tests.  Products are taken left to right in the printed
// order, which is normative because odd factors anticommute.

#include <map>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "grassmann.hpp"

namespace sgflow {

struct parity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SusyParams {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    int eps = 1;  // +1 or -1
};

enum class FieldId { Phi, Psi };

struct TermFactor {
    FieldId field;
    MultiIndex mi;
};

// coefficient = (c0 + ca a + cb b + cc c + cd d) * eps^eps_pow
struct Term {
    double c0 = 0.0, ca = 0.0, cb = 0.0, cc = 0.0, cd = 0.0;
    int eps_pow = 0;
    std::vector<TermFactor> factors;
};

using TermTable = std::vector<Term>;

namespace tables {

// theta-coefficient component of the general superfield equation
inline const TermTable& general_bosonic() {
    static const TermTable t = {
        {1, 0, 0, 0, 0, 0, {{FieldId::Phi, {2, 0}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {1, 0}}, {FieldId::Phi, {2, 0}}}},
        {0, 1, 0, 0, 0, 1, {{FieldId::Phi, {2, 0}}, {FieldId::Psi, {1, 0}}, {FieldId::Psi, {2, 0}}}},
        {0, 1, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Psi, {1, 0}}, {FieldId::Psi, {3, 0}}}},
        {-2, 0, 0, 0, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {0, 1}}, {FieldId::Phi, {1, 1}}}},
        {0, 0, 2, 0, 0, 0, {{FieldId::Phi, {1, 1}}, {FieldId::Psi, {1, 0}}, {FieldId::Psi, {1, 1}}}},
        {0, 0, 2, 0, 0, 0, {{FieldId::Phi, {0, 1}}, {FieldId::Psi, {1, 0}}, {FieldId::Psi, {2, 1}}}},
        {0, 0, 0, 2, 0, 0, {{FieldId::Phi, {1, 1}}, {FieldId::Psi, {0, 1}}, {FieldId::Psi, {2, 0}}}},
        {0, 0, 0, 2, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Psi, {0, 1}}, {FieldId::Psi, {2, 1}}}},
        {-2, 0, 2, 2, 0, 0, {{FieldId::Phi, {0, 1}}, {FieldId::Psi, {2, 0}}, {FieldId::Psi, {1, 1}}}},
        {1, 0, 0, 0, 0, 0, {{FieldId::Phi, {0, 2}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 2}}}},
        {0, 0, 0, 0, 1, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Psi, {0, 1}}, {FieldId::Psi, {1, 2}}}},
        {0, 0, 0, 0, 1, 1, {{FieldId::Phi, {0, 2}}, {FieldId::Psi, {0, 1}}, {FieldId::Psi, {1, 1}}}},
        {-2, 0, 0, 0, 2, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Psi, {1, 1}}, {FieldId::Psi, {0, 2}}}},
    };
    return t;
}

// theta-free component (the fermionic equation)
inline const TermTable& general_fermionic() {
    static const TermTable t = {
        {1, 0, 0, 0, 0, 0, {{FieldId::Psi, {2, 0}}}},
        {0, -1, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {2, 0}}, {FieldId::Psi, {1, 0}}}},
        {-1, 1, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {1, 0}}, {FieldId::Psi, {2, 0}}}},
        {0, 0, -2, 0, 0, 0, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {1, 1}}, {FieldId::Psi, {1, 0}}}},
        {0, 0, 0, -2, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {1, 1}}, {FieldId::Psi, {0, 1}}}},
        {-2, 0, 2, 2, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {0, 1}}, {FieldId::Psi, {1, 1}}}},
        {1, 0, 0, 0, 0, 0, {{FieldId::Psi, {0, 2}}}},
        {0, 0, 0, 0, -1, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 2}}, {FieldId::Psi, {0, 1}}}},
        {-1, 0, 0, 0, 1, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 1}}, {FieldId::Psi, {0, 2}}}},
    };
    return t;
}

// the a = b = c = d = 0 specialisation, kept as an independent code path
inline const TermTable& special_bosonic() {
    static const TermTable t = {
        {1, 0, 0, 0, 0, 0, {{FieldId::Phi, {2, 0}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {1, 0}}, {FieldId::Phi, {2, 0}}}},
        {-2, 0, 0, 0, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {0, 1}}, {FieldId::Phi, {1, 1}}}},
        {-2, 0, 0, 0, 0, 0, {{FieldId::Phi, {0, 1}}, {FieldId::Psi, {2, 0}}, {FieldId::Psi, {1, 1}}}},
        {1, 0, 0, 0, 0, 0, {{FieldId::Phi, {0, 2}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 2}}}},
        {-2, 0, 0, 0, 0, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Psi, {1, 1}}, {FieldId::Psi, {0, 2}}}},
    };
    return t;
}

inline const TermTable& special_fermionic() {
    static const TermTable t = {
        {1, 0, 0, 0, 0, 0, {{FieldId::Psi, {2, 0}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {1, 0}}, {FieldId::Psi, {2, 0}}}},
        {-2, 0, 0, 0, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {0, 1}}, {FieldId::Psi, {1, 1}}}},
        {1, 0, 0, 0, 0, 0, {{FieldId::Psi, {0, 2}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 1}}, {FieldId::Psi, {0, 2}}}},
    };
    return t;
}

// (1 - eps phi_x^2) phi_xx - 2 phi_x phi_y phi_xy + (1 - eps phi_y^2) phi_yy
inline const TermTable& classical() {
    static const TermTable t = {
        {1, 0, 0, 0, 0, 0, {{FieldId::Phi, {2, 0}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {1, 0}}, {FieldId::Phi, {2, 0}}}},
        {-2, 0, 0, 0, 0, 0, {{FieldId::Phi, {1, 0}}, {FieldId::Phi, {0, 1}}, {FieldId::Phi, {1, 1}}}},
        {1, 0, 0, 0, 0, 0, {{FieldId::Phi, {0, 2}}}},
        {-1, 0, 0, 0, 0, 1, {{FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 1}}, {FieldId::Phi, {0, 2}}}},
    };
    return t;
}

}  // namespace tables

// -----------------------------------------------------------------------------
// Evaluation
// -----------------------------------------------------------------------------

// Per-point cache of field partials so each derivative is computed once.
class DerivCache {
  public:
    DerivCache(const Field& phi, const Field& psi, double x, double y, const DiffConfig& cfg)
        : phi_(&phi), psi_(&psi), x_(x), y_(y), cfg_(cfg) {}

    const Grassmann& get(FieldId id, MultiIndex mi) {
        auto key = std::tuple{id, mi.i, mi.j};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const Field& f = (id == FieldId::Phi) ? *phi_ : *psi_;
        PartialResult r = partial(f, x_, y_, mi, cfg_);
        fd_error_ = std::max(fd_error_, r.error_estimate);
        return cache_.emplace(key, std::move(r.value)).first->second;
    }

    double fd_error() const { return fd_error_; }

  private:
    const Field* phi_;
    const Field* psi_;
    double x_, y_;
    DiffConfig cfg_;
    double fd_error_ = 0.0;
    std::map<std::tuple<FieldId, int, int>, Grassmann> cache_;
};

inline Grassmann eval_terms(const TermTable& table, DerivCache& cache, const SusyParams& p,
                            const Context& ctx) {
    Grassmann total(ctx);
    for (const Term& t : table) {
        double coef = t.c0 + t.ca * p.a + t.cb * p.b + t.cc * p.c + t.cd * p.d;
        if (t.eps_pow % 2 != 0) coef *= double(p.eps);
        if (coef == 0.0) continue;
        Grassmann prod = Grassmann::scalar(ctx, coef);
        for (const TermFactor& f : t.factors) prod = prod * cache.get(f.field, f.mi);
        total += prod;
    }
    return total;
}

struct ResidualSample {
    double x = 0.0, y = 0.0;
    Grassmann value;
    double fd_error_estimate = 0.0;
};

inline cplx classical_residual(const Field& phi, int eps, double x, double y,
                               const DiffConfig& cfg = {}) {
    SusyParams p;
    p.eps = eps;
    Field empty_psi("psi0", phi.context(),
                    [ctx = phi.context()](double, double) { return Grassmann(ctx); });
    DerivCache cache(phi, empty_psi, x, y, cfg);
    Grassmann r = eval_terms(tables::classical(), cache, p, phi.context());
    if (!r.soul().is_zero() && r.soul().norm_inf() > 1e-12)
        throw parity_error("classical residual of a field with a nilpotent part");
    return r.body();
}

inline ResidualSample susy_residual_bosonic(const Field& phi, const Field& psi,
                                            const SusyParams& p, double x, double y,
                                            const DiffConfig& cfg = {}) {
    DerivCache cache(phi, psi, x, y, cfg);
    Grassmann r = eval_terms(tables::general_bosonic(), cache, p, phi.context());
    return {x, y, r, cache.fd_error()};
}

inline ResidualSample susy_residual_fermionic(const Field& phi, const Field& psi,
                                              const SusyParams& p, double x, double y,
                                              const DiffConfig& cfg = {}) {
    DerivCache cache(phi, psi, x, y, cfg);
    Grassmann r = eval_terms(tables::general_fermionic(), cache, p, phi.context());
    return {x, y, r, cache.fd_error()};
}

// the printed a = b = c = d = 0 system as a third code path
inline ResidualSample susy_residual_special_bosonic(const Field& phi, const Field& psi, int eps,
                                                    double x, double y,
                                                    const DiffConfig& cfg = {}) {
    SusyParams p;
    p.eps = eps;
    DerivCache cache(phi, psi, x, y, cfg);
    return {x, y, eval_terms(tables::special_bosonic(), cache, p, phi.context()),
            cache.fd_error()};
}

inline ResidualSample susy_residual_special_fermionic(const Field& phi, const Field& psi, int eps,
                                                      double x, double y,
                                                      const DiffConfig& cfg = {}) {
    SusyParams p;
    p.eps = eps;
    DerivCache cache(phi, psi, x, y, cfg);
    return {x, y, eval_terms(tables::special_fermionic(), cache, p, phi.context()),
            cache.fd_error()};
}

// parity preconditions for the susy residuals
inline void check_parities(const Field& phi, const Field& psi, double x, double y) {
    if (!phi(x, y).pure_even()) throw parity_error("phi must be even");
    if (!psi(x, y).pure_odd()) throw parity_error("psi must be odd");
}

}  // namespace sgflow
