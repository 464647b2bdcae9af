#pragma once

// Vector-field generators with polynomial coefficients on (x, y, phi, psi),
// exact Lie brackets, the two printed commutation tables, finite group
// actions on solutions, and invariance sweeps.

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "grassmann.hpp"
#include "pde.hpp"

namespace sgflow {

// -----------------------------------------------------------------------------
// Polynomials in the four coordinates with Grassmann coefficients
// -----------------------------------------------------------------------------

struct Exponent {
    std::array<int, 4> e{0, 0, 0, 0};  // x, y, phi, psi powers
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

class Poly4 {
  public:
    Poly4() = default;
    explicit Poly4(Context ctx) : ctx_(std::move(ctx)) {}

    static Poly4 constant(const Context& ctx, const Grassmann& c) {
        Poly4 p(ctx);
        if (!c.is_zero()) p.terms_[Exponent{}] = c;
        return p;
    }
    static Poly4 constant(const Context& ctx, double c) {
        return constant(ctx, Grassmann::scalar(ctx, c));
    }
    static Poly4 coordinate(const Context& ctx, int axis) {
        Poly4 p(ctx);
        Exponent e;
        e.e[axis] = 1;
        p.terms_[e] = Grassmann::scalar(ctx, 1.0);
        return p;
    }

    const Context& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Grassmann>& terms() const { return terms_; }

    friend Poly4 operator+(const Poly4& a, const Poly4& b) {
        Poly4 r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend Poly4 operator-(const Poly4& a, const Poly4& b) { return a + (-1.0) * b; }
    friend Poly4 operator*(double s, const Poly4& a) {
        Poly4 r = a;
        for (auto& [e, c] : r.terms_) c = s * c;
        r.prune();
        return r;
    }
    friend Poly4 operator*(const Grassmann& s, const Poly4& a) {
        Poly4 r(a.ctx_ ? a.ctx_ : s.context());
        for (const auto& [e, c] : a.terms_) r.add(e, s * c);
        return r;
    }
    friend Poly4 operator*(const Poly4& a, const Poly4& b) {
        Poly4 r(a.ctx_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (int k = 0; k < 4; ++k) e.e[k] = ea.e[k] + eb.e[k];
                r.add(e, ca * cb);
            }
        return r;
    }

    Poly4 derivative(int axis) const {
        Poly4 r(ctx_);
        for (const auto& [e, c] : terms_) {
            if (e.e[axis] == 0) continue;
            Exponent d = e;
            d.e[axis] -= 1;
            r.add(d, double(e.e[axis]) * c);
        }
        return r;
    }

    Grassmann eval(const std::array<Grassmann, 4>& at) const {
        Grassmann acc(ctx_);
        for (const auto& [e, c] : terms_) {
            Grassmann t = c;
            for (int k = 0; k < 4; ++k)
                for (int p = 0; p < e.e[k]; ++p) t = t * at[k];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const Poly4& a, const Poly4& b) { return (a - b).is_zero(); }

  private:
    void add(const Exponent& e, const Grassmann& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    Context ctx_;
    std::map<Exponent, Grassmann> terms_;
};

// -----------------------------------------------------------------------------
// Generators and brackets
// -----------------------------------------------------------------------------

struct SymmetryGenerator {
    std::string label;
    std::array<Poly4, 4> coef;  // coefficients of d_x, d_y, d_phi, d_psi

    SymmetryGenerator() = default;
    SymmetryGenerator(std::string l, const Context& ctx)
        : label(std::move(l)),
          coef{Poly4(ctx), Poly4(ctx), Poly4(ctx), Poly4(ctx)} {}

    friend bool operator==(const SymmetryGenerator& a, const SymmetryGenerator& b) {
        for (int k = 0; k < 4; ++k)
            if (!(a.coef[k] == b.coef[k])) return false;
        return true;
    }
};

// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k, by exact polynomial differentiation
inline SymmetryGenerator bracket(const SymmetryGenerator& X, const SymmetryGenerator& Y) {
    SymmetryGenerator r("[" + X.label + "," + Y.label + "]", X.coef[0].context());
    for (int k = 0; k < 4; ++k) {
        Poly4 acc(X.coef[0].context());
        for (int i = 0; i < 4; ++i)
            acc = acc + X.coef[i] * Y.coef[k].derivative(i) - Y.coef[i] * X.coef[k].derivative(i);
        r.coef[k] = acc;
    }
    return r;
}

// -----------------------------------------------------------------------------
// The two printed algebras
// -----------------------------------------------------------------------------

enum class Axis { X = 0, Y = 1, Phi = 2, Psi = 3 };

namespace detail {

inline SymmetryGenerator gen(const Context& ctx, const std::string& label,
                             std::initializer_list<std::pair<int, Poly4>> entries) {
    SymmetryGenerator g(label, ctx);
    for (const auto& [axis, p] : entries) g.coef[axis] = p;
    return g;
}

}  // namespace detail

// classical eps = +1 algebra: dilation, rotation, three translations
inline std::vector<SymmetryGenerator> classical_generators(const Context& ctx) {
    auto X = Poly4::coordinate(ctx, 0), Y = Poly4::coordinate(ctx, 1),
         Phi = Poly4::coordinate(ctx, 2);
    auto one = Poly4::constant(ctx, 1.0);
    return {
        detail::gen(ctx, "S", {{0, X}, {1, Y}, {2, Phi}}),
        detail::gen(ctx, "M", {{0, (-1.0) * Y}, {1, X}}),
        detail::gen(ctx, "T1", {{0, one}}),
        detail::gen(ctx, "T2", {{1, one}}),
        detail::gen(ctx, "T3", {{2, one}}),
    };
}

// classical eps = -1 algebra: no rotation
inline std::vector<SymmetryGenerator> classical_generators_minus(const Context& ctx) {
    auto X = Poly4::coordinate(ctx, 0), Y = Poly4::coordinate(ctx, 1),
         Phi = Poly4::coordinate(ctx, 2);
    auto one = Poly4::constant(ctx, 1.0);
    return {
        detail::gen(ctx, "S", {{0, X}, {1, Y}, {2, Phi}}),
        detail::gen(ctx, "t1", {{0, one}}),
        detail::gen(ctx, "t2", {{1, one}}),
        detail::gen(ctx, "t3", {{2, one}}),
    };
}

// superalgebra of the a = b = c = d = 0 system
inline std::vector<SymmetryGenerator> susy_generators(const Context& ctx) {
    auto X = Poly4::coordinate(ctx, 0), Y = Poly4::coordinate(ctx, 1),
         Phi = Poly4::coordinate(ctx, 2), Psi = Poly4::coordinate(ctx, 3);
    auto one = Poly4::constant(ctx, 1.0);
    return {
        detail::gen(ctx, "S", {{0, X}, {1, Y}, {2, Phi}, {3, 1.5 * Psi}}),
        detail::gen(ctx, "P1", {{0, one}}),
        detail::gen(ctx, "P2", {{1, one}}),
        detail::gen(ctx, "Z", {{2, one}}),
        detail::gen(ctx, "Y", {{3, one}}),
        detail::gen(ctx, "Q1", {{3, X}}),
        detail::gen(ctx, "Q2", {{3, Y}}),
    };
}

// expected table cells as coefficient rows over the generator list
struct TableSpec {
    std::vector<SymmetryGenerator> gens;
    // expected[i][j] maps generator index -> coefficient of that generator
    std::vector<std::vector<std::map<int, double>>> expected;
};

inline TableSpec classical_table_eps1(const Context& ctx) {
    TableSpec t;
    t.gens = classical_generators(ctx);
    // order: S, M, T1, T2, T3
    auto cell = [](std::initializer_list<std::pair<const int, double>> il) {
        return std::map<int, double>(il);
    };
    t.expected = {
        {cell({}), cell({}), cell({{2, -1}}), cell({{3, -1}}), cell({{4, -1}})},
        {cell({}), cell({}), cell({{3, -1}}), cell({{2, 1}}), cell({})},
        {cell({{2, 1}}), cell({{3, 1}}), cell({}), cell({}), cell({})},
        {cell({{3, 1}}), cell({{2, -1}}), cell({}), cell({}), cell({})},
        {cell({{4, 1}}), cell({}), cell({}), cell({}), cell({})},
    };
    return t;
}

inline TableSpec susy_table(const Context& ctx) {
    TableSpec t;
    t.gens = susy_generators(ctx);
    // order: S, P1, P2, Z, Y, Q1, Q2
    auto cell = [](std::initializer_list<std::pair<const int, double>> il) {
        return std::map<int, double>(il);
    };
    const auto z = cell({});
    t.expected = {
        {z, cell({{1, -1}}), cell({{2, -1}}), cell({{3, -1}}), cell({{4, -1.5}}),
         cell({{5, -0.5}}), cell({{6, -0.5}})},
        {cell({{1, 1}}), z, z, z, z, cell({{4, 1}}), z},
        {cell({{2, 1}}), z, z, z, z, z, cell({{4, 1}})},
        {cell({{3, 1}}), z, z, z, z, z, z},
        {cell({{4, 1.5}}), z, z, z, z, z, z},
        {cell({{5, 0.5}}), cell({{4, -1}}), z, z, z, z, z},
        {cell({{6, 0.5}}), z, cell({{4, -1}}), z, z, z, z},
    };
    return t;
}

struct TableReport {
    int cells = 0;
    int matched = 0;
    std::vector<std::string> mismatches;
    bool pass() const { return matched == cells; }
};

inline TableReport verify_table(const TableSpec& spec) {
    TableReport rep;
    const Context& ctx = spec.gens.front().coef[0].context();
    const int n = int(spec.gens.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SymmetryGenerator want("expected", ctx);
            for (const auto& [k, c] : spec.expected[i][j])
                for (int ax = 0; ax < 4; ++ax)
                    want.coef[ax] = want.coef[ax] + c * spec.gens[k].coef[ax];
            const SymmetryGenerator got = bracket(spec.gens[i], spec.gens[j]);
            ++rep.cells;
            if (got == want)
                ++rep.matched;
            else
                rep.mismatches.push_back(spec.gens[i].label + " x " + spec.gens[j].label);
        }
    return rep;
}

// Jacobi identity [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0, exactly
inline bool jacobi_holds(const std::vector<SymmetryGenerator>& gens) {
    const int n = int(gens.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto s = bracket(bracket(gens[i], gens[j]), gens[k]);
                auto t = bracket(bracket(gens[j], gens[k]), gens[i]);
                auto u = bracket(bracket(gens[k], gens[i]), gens[j]);
                for (int ax = 0; ax < 4; ++ax)
                    if (!(s.coef[ax] + t.coef[ax] + u.coef[ax]).is_zero()) return false;
            }
    return true;
}

// membership of a generator in the span of a list, for constant-coefficient
// combinations; returns false when no exact combination exists
inline bool in_span(const SymmetryGenerator& g, const std::vector<SymmetryGenerator>& basis) {
    // the generators in play have polynomial entries with distinct monomial
    // supports, so solve the small linear system monomial by monomial
    std::map<std::pair<int, Exponent>, std::map<int, double>> rows;  // (axis, exp) -> basis coefs
    std::map<std::pair<int, Exponent>, double> rhs;
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int ax = 0; ax < 4; ++ax)
            for (const auto& [e, c] : basis[b].coef[ax].terms())
                rows[{ax, e}][int(b)] = c.body().real();
    for (int ax = 0; ax < 4; ++ax)
        for (const auto& [e, c] : g.coef[ax].terms()) rhs[{ax, e}] = c.body().real();

    // least-squares-free exact elimination over the few unknowns
    const int n = int(basis.size());
    std::vector<std::vector<double>> A;
    std::vector<double> y;
    std::vector<std::pair<int, Exponent>> keys;
    for (const auto& [key, row] : rows) keys.push_back(key);
    for (const auto& [key, val] : rhs)
        if (!rows.count(key)) return false;  // rhs monomial outside the span support
    for (const auto& key : keys) {
        std::vector<double> row(n, 0.0);
        for (const auto& [b, c] : rows[key]) row[b] = c;
        A.push_back(row);
        y.push_back(rhs.count(key) ? rhs[key] : 0.0);
    }
    // Gaussian elimination; solvability of the overdetermined system is the test
    int r = 0;
    for (int c = 0; c < n && r < int(A.size()); ++c) {
        int p = -1;
        for (int i = r; i < int(A.size()); ++i)
            if (std::abs(A[i][c]) > 1e-12) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        std::swap(y[p], y[r]);
        for (int i = 0; i < int(A.size()); ++i) {
            if (i == r || std::abs(A[i][c]) < 1e-15) continue;
            double f = A[i][c] / A[r][c];
            for (int k2 = 0; k2 < n; ++k2) A[i][k2] -= f * A[r][k2];
            y[i] -= f * y[r];
        }
        ++r;
    }
    for (int i = r; i < int(A.size()); ++i)
        if (std::abs(y[i]) > 1e-10) return false;
    return true;
}

// -----------------------------------------------------------------------------
// Finite actions on solutions
// -----------------------------------------------------------------------------

// A finite action transforms a solution pair (phi, psi); the parameter is a
// real number for even generators, an odd Grassmann constant for the psi
// shifts.  Each action also carries its coordinate map for validation
// against the generator coefficients.
struct ActionParam {
    double t = 0.0;
    Grassmann eta;  // used when odd == true
    bool odd = false;

    static ActionParam real(double v) { return {v, Grassmann(), false}; }
    static ActionParam fermionic(const Grassmann& e) { return {0.0, e, true}; }
};

struct FiniteAction {
    std::string label;
    std::string generator_label;
    bool odd_parameter = false;
    // transforms the solution pair
    std::function<std::pair<Field, Field>(const Field&, const Field&, const ActionParam&)> apply;
    // coordinate map (x, y, phi, psi) -> image, for generator validation
    std::function<std::array<Grassmann, 4>(const std::array<Grassmann, 4>&, const ActionParam&)>
        coordinate_map;
};

namespace detail {

inline Field remap_plane(const Field& f, const std::string& label,
                         std::function<std::pair<double, double>(double, double)> inverse_pt,
                         std::function<Grassmann(const Grassmann&, double, double)> post) {
    return Field(label, f.context(), [f, inverse_pt, post](double x, double y) {
        auto [u, v] = inverse_pt(x, y);
        return post(f(u, v), x, y);
    });
}

// forwards registered derivatives through a plane translation
inline void forward_translate(const Field& src, Field& out, double dx, double dy) {
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            if (i + j == 0 || !src.has_derivative({i, j})) continue;
            FieldFn d = *src.derivative({i, j});
            out.register_derivative({i, j}, [d, dx, dy](double x, double y) {
                return d(x - dx, y - dy);
            });
        }
}

// forwards registered derivatives through (x, y) -> (ax, ay) with value scale s:
// out = s f(x/a, y/a) so d^{i+j} out = s a^{-(i+j)} (d^{i+j} f)(x/a, y/a)
inline void forward_dilate(const Field& src, Field& out, double a, double s) {
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            if (i + j == 0 || !src.has_derivative({i, j})) continue;
            FieldFn d = *src.derivative({i, j});
            const double f = s * std::pow(a, -double(i + j));
            out.register_derivative({i, j}, [d, a, f](double x, double y) {
                return f * d(x / a, y / a);
            });
        }
}

// forwards derivatives unchanged (for value shifts by constants)
inline void forward_identity(const Field& src, Field& out) {
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            if (i + j == 0 || !src.has_derivative({i, j})) continue;
            out.register_derivative({i, j}, *src.derivative({i, j}));
        }
}

}  // namespace detail

// catalog of closed-form actions for the susy algebra (a = b = c = d = 0)
inline std::vector<FiniteAction> susy_actions(const Context&) {
    std::vector<FiniteAction> acts;

    // dilation: phi -> e^t phi(e^-t x, e^-t y), psi -> e^{3t/2} psi(e^-t x, e^-t y)
    acts.push_back(FiniteAction{
        "dilation", "S", false,
        [](const Field& phi, const Field& psi, const ActionParam& p) {
            const double et = std::exp(p.t);
            auto inv = [et](double x, double y) { return std::make_pair(x / et, y / et); };
            Field phi2 = detail::remap_plane(phi, "S." + phi.label(), inv,
                                             [et](const Grassmann& g, double, double) {
                                                 return et * g;
                                             });
            detail::forward_dilate(phi, phi2, et, et);
            const double e32 = std::pow(et, 1.5);
            Field psi2 = detail::remap_plane(psi, "S." + psi.label(), inv,
                                             [e32](const Grassmann& g, double, double) {
                                                 return e32 * g;
                                             });
            detail::forward_dilate(psi, psi2, et, e32);
            return std::make_pair(phi2, psi2);
        },
        [](const std::array<Grassmann, 4>& z, const ActionParam& p) {
            const double et = std::exp(p.t);
            return std::array<Grassmann, 4>{et * z[0], et * z[1], et * z[2],
                                            std::pow(et, 1.5) * z[3]};
        }});

    auto translation = [&](const std::string& label, const std::string& gen, int axis) {
        acts.push_back(FiniteAction{
            label, gen, false,
            [axis](const Field& phi, const Field& psi, const ActionParam& p) {
                const double dx = axis == 0 ? p.t : 0.0, dy = axis == 1 ? p.t : 0.0;
                auto inv = [dx, dy](double x, double y) {
                    return std::make_pair(x - dx, y - dy);
                };
                auto keep = [](const Grassmann& g, double, double) { return g; };
                Field phi2 = detail::remap_plane(phi, "T." + phi.label(), inv, keep);
                detail::forward_translate(phi, phi2, dx, dy);
                Field psi2 = detail::remap_plane(psi, "T." + psi.label(), inv, keep);
                detail::forward_translate(psi, psi2, dx, dy);
                return std::make_pair(phi2, psi2);
            },
            [axis](const std::array<Grassmann, 4>& z, const ActionParam& p) {
                auto out = z;
                out[axis] += Grassmann::scalar(z[axis].context(), p.t);
                return out;
            }});
    };
    translation("x-translation", "P1", 0);
    translation("y-translation", "P2", 1);

    // phi shift by a constant
    acts.push_back(FiniteAction{
        "phi-shift", "Z", false,
        [](const Field& phi, const Field& psi, const ActionParam& p) {
            Field phi2("Z." + phi.label(), phi.context(),
                       [phi, t = p.t](double x, double y) {
                           return phi(x, y) + Grassmann::scalar(phi.context(), t);
                       });
            detail::forward_identity(phi, phi2);
            return std::make_pair(phi2, psi);
        },
        [](const std::array<Grassmann, 4>& z, const ActionParam& p) {
            auto out = z;
            out[2] += Grassmann::scalar(z[2].context(), p.t);
            return out;
        }});

    // psi shifts with odd parameter: Y, Q1 = x d_psi, Q2 = y d_psi
    auto psi_shift = [&](const std::string& label, const std::string& gen, int power_axis) {
        acts.push_back(FiniteAction{
            label, gen, true,
            [power_axis, gen](const Field& phi, const Field& psi, const ActionParam& p) {
                Field psi2(gen + "." + psi.label(), psi.context(),
                           [psi, eta = p.eta, power_axis](double x, double y) {
                               double w = power_axis == 0 ? x : (power_axis == 1 ? y : 1.0);
                               return psi(x, y) + w * eta;
                           });
                detail::forward_identity(psi, psi2);
                // the shift is linear, so only first derivatives change
                if (power_axis == 0 && psi.has_derivative({1, 0})) {
                    FieldFn d = *psi.derivative({1, 0});
                    psi2.register_derivative({1, 0}, [d, eta = p.eta](double x, double y) {
                        return d(x, y) + eta;
                    });
                }
                if (power_axis == 1 && psi.has_derivative({0, 1})) {
                    FieldFn d = *psi.derivative({0, 1});
                    psi2.register_derivative({0, 1}, [d, eta = p.eta](double x, double y) {
                        return d(x, y) + eta;
                    });
                }
                return std::make_pair(phi, psi2);
            },
            [power_axis](const std::array<Grassmann, 4>& z, const ActionParam& p) {
                auto out = z;
                Grassmann w = power_axis == 0
                                  ? z[0]
                                  : (power_axis == 1 ? z[1]
                                                     : Grassmann::scalar(z[0].context(), 1.0));
                out[3] += w * p.eta;
                return out;
            }});
    };
    psi_shift("psi-shift", "Y", -1);
    psi_shift("psi-x-shift", "Q1", 0);
    psi_shift("psi-y-shift", "Q2", 1);
    return acts;
}

// classical actions; generator labels follow the classical naming and the
// rotation is the extra entry for eps = +1
inline std::vector<FiniteAction> classical_actions(const Context& ctx, bool with_rotation) {
    std::vector<FiniteAction> acts;
    for (auto& a : susy_actions(ctx)) {
        if (a.generator_label == "S") {
            // classical dilation scales phi only and leaves psi untouched
            acts.push_back(FiniteAction{
                "dilation", "S", false,
                [](const Field& phi, const Field& psi, const ActionParam& p) {
                    const double et = std::exp(p.t);
                    auto inv = [et](double x, double y) {
                        return std::make_pair(x / et, y / et);
                    };
                    Field phi2 = detail::remap_plane(
                        phi, "S." + phi.label(), inv,
                        [et](const Grassmann& g, double, double) { return et * g; });
                    detail::forward_dilate(phi, phi2, et, et);
                    return std::make_pair(phi2, psi);
                },
                [](const std::array<Grassmann, 4>& z, const ActionParam& p) {
                    const double et = std::exp(p.t);
                    return std::array<Grassmann, 4>{et * z[0], et * z[1], et * z[2], z[3]};
                }});
        } else if (a.generator_label == "P1") {
            a.generator_label = "T1";
            acts.push_back(a);
        } else if (a.generator_label == "P2") {
            a.generator_label = "T2";
            acts.push_back(a);
        } else if (a.generator_label == "Z") {
            a.generator_label = "T3";
            acts.push_back(a);
        }
    }
    if (with_rotation) {
        acts.push_back(FiniteAction{
            "rotation", "M", false,
            [](const Field& phi, const Field& psi, const ActionParam& p) {
                const double c = std::cos(p.t), s = std::sin(p.t);
                auto inv = [c, s](double x, double y) {
                    return std::make_pair(c * x + s * y, -s * x + c * y);
                };
                auto keep = [](const Grassmann& g, double, double) { return g; };
                return std::make_pair(detail::remap_plane(phi, "M." + phi.label(), inv, keep),
                                      psi);
            },
            [](const std::array<Grassmann, 4>& z, const ActionParam& p) {
                const double c = std::cos(p.t), s = std::sin(p.t);
                return std::array<Grassmann, 4>{c * z[0] - s * z[1], s * z[0] + c * z[1], z[2],
                                                z[3]};
            }});
    }
    return acts;
}

// -----------------------------------------------------------------------------
// Invariance sweep
// -----------------------------------------------------------------------------

struct InvarianceRow {
    std::string action;
    std::string param;
    double max_residual = 0.0;
    bool pass = false;
};

struct InvarianceReport {
    std::vector<InvarianceRow> rows;
    bool pass = true;
};

// Transforms a verified solution by each action over several parameter
// values and records the maximum residual of the transformed pair, computed
// by the supplied functor.  `expect_failure` inverts the pass criterion for
// confirmed non-symmetries.
inline InvarianceReport invariance_sweep(
    const Field& phi, const Field& psi, const std::vector<FiniteAction>& actions,
    const std::vector<double>& real_params, const std::vector<Grassmann>& odd_params,
    const std::function<double(const Field&, const Field&)>& max_residual, double tol,
    bool expect_failure = false) {
    InvarianceReport rep;
    for (const auto& act : actions) {
        if (act.odd_parameter) {
            for (std::size_t i = 0; i < odd_params.size(); ++i) {
                auto [phi2, psi2] = act.apply(phi, psi, ActionParam::fermionic(odd_params[i]));
                InvarianceRow row{act.label, "eta#" + std::to_string(i),
                                  max_residual(phi2, psi2), false};
                row.pass = expect_failure ? row.max_residual > tol : row.max_residual <= tol;
                rep.pass = rep.pass && row.pass;
                rep.rows.push_back(std::move(row));
            }
        } else {
            for (double t : real_params) {
                auto [phi2, psi2] = act.apply(phi, psi, ActionParam::real(t));
                InvarianceRow row{act.label, "t=" + std::to_string(t),
                                  max_residual(phi2, psi2), false};
                row.pass = expect_failure ? row.max_residual > tol : row.max_residual <= tol;
                rep.pass = rep.pass && row.pass;
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

// numerical t-derivative of the coordinate map at t = 0 against the
// generator coefficients
inline bool validate_action(const FiniteAction& act, const SymmetryGenerator& gen,
                            const Context& ctx, double tol = 1e-8) {
    std::array<std::array<Grassmann, 4>, 3> samples;
    std::array<std::array<double, 4>, 3> pts = {
        {{0.3, -0.7, 1.1, 0.0}, {1.0, 2.0, -0.5, 0.0}, {-1.2, 0.4, 0.25, 0.0}}};
    for (int s = 0; s < 3; ++s) {
        std::array<Grassmann, 4> z;
        for (int k = 0; k < 3; ++k) z[k] = Grassmann::scalar(ctx, pts[s][k]);
        z[3] = pts[s][0] * Grassmann::generator(ctx, "E1");  // odd sample for psi
        samples[s] = z;
    }
    for (const auto& z : samples) {
        std::array<Grassmann, 4> deriv;
        if (act.odd_parameter) {
            // image is affine in the odd parameter: extract the eta coefficient
            const Grassmann eta = Grassmann::generator(ctx, "K2");
            auto im = act.coordinate_map(z, ActionParam::fermionic(eta));
            auto im0 = act.coordinate_map(z, ActionParam::fermionic(Grassmann(ctx)));
            for (int k = 0; k < 4; ++k) {
                // strip eta from the left of the difference
                Grassmann diff = im[k] - im0[k];
                Grassmann coef(ctx);
                const auto ki = ctx->index("K2");
                for (const auto& [m, c] : diff.terms()) {
                    if (!(m & (Grassmann::Mask(1u) << ki))) return false;
                    const auto rest = m & ~(Grassmann::Mask(1u) << ki);
                    const double sign = Grassmann::reorder_sign(Grassmann::Mask(1u) << ki, rest);
                    coef += Grassmann::monomial(ctx, rest, sign * c);
                }
                deriv[k] = coef;
            }
            // compare against generator coefficients evaluated at z
            for (int k = 0; k < 4; ++k)
                if ((deriv[k] - gen.coef[k].eval(z)).norm_inf() > tol) return false;
        } else {
            const double h = 1e-5;
            auto p1 = act.coordinate_map(z, ActionParam::real(h));
            auto m1 = act.coordinate_map(z, ActionParam::real(-h));
            for (int k = 0; k < 4; ++k) {
                deriv[k] = (p1[k] - m1[k]) * (0.5 / h);
                if ((deriv[k] - gen.coef[k].eval(z)).norm_inf() > tol) return false;
            }
        }
    }
    return true;
}

}  // namespace sgflow
