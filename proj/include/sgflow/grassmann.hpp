#pragma once

// Finite exterior algebra over a fixed ordered list of anticommuting
// generators with complex coefficients.  Values are immutable once built;
// every operation returns a fresh value, so sharing across threads is safe.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgflow {

using cplx = std::complex<double>;

struct context_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_root_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_linearization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -----------------------------------------------------------------------------
// Generator set (the computation context)
// -----------------------------------------------------------------------------

class GeneratorSet;
using Context = std::shared_ptr<const GeneratorSet>;

class GeneratorSet {
  public:
    static constexpr int capacity = 16;

    static Context make(std::vector<std::string> names) {
        if (static_cast<int>(names.size()) > capacity)
            throw context_error("generator set exceeds capacity 16");
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw context_error("duplicate generator label: " + names[i]);
        return std::shared_ptr<const GeneratorSet>(new GeneratorSet(std::move(names)));
    }

    // New context with extra generators appended.  The original labels keep
    // their indices, so values promote between the two contexts bit-for-bit.
    Context extended(const std::vector<std::string>& extra) const {
        std::vector<std::string> all = names_;
        all.insert(all.end(), extra.begin(), extra.end());
        return make(std::move(all));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (names_[i] == label) return i;
        throw context_error("unknown generator label: " + label);
    }

    // a can be promoted into b when a's labels are a prefix of b's
    static bool prefix_of(const GeneratorSet& a, const GeneratorSet& b) {
        if (a.size() > b.size()) return false;
        for (int i = 0; i < a.size(); ++i)
            if (a.names_[i] != b.names_[i]) return false;
        return true;
    }

  private:
    explicit GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

enum class Parity { Even, Odd, Mixed };

inline Parity parity_product(Parity a, Parity b) {
    if (a == Parity::Mixed || b == Parity::Mixed) return Parity::Mixed;
    return (a == b) ? Parity::Even : Parity::Odd;
}

// -----------------------------------------------------------------------------
// Grassmann number
// -----------------------------------------------------------------------------

class Grassmann {
  public:
    using Mask = std::uint32_t;
    using Term = std::pair<Mask, cplx>;

    Grassmann() = default;
    explicit Grassmann(Context ctx) : ctx_(std::move(ctx)) {}

    static Grassmann scalar(const Context& ctx, cplx v) {
        Grassmann g(ctx);
        if (v != cplx(0.0, 0.0)) g.terms_.push_back({0u, v});
        return g;
    }
    static Grassmann generator(const Context& ctx, int i) {
        if (i < 0 || i >= ctx->size()) throw context_error("generator index out of range");
        Grassmann g(ctx);
        g.terms_.push_back({Mask(1u) << i, cplx(1.0, 0.0)});
        return g;
    }
    static Grassmann generator(const Context& ctx, const std::string& label) {
        return generator(ctx, ctx->index(label));
    }
    static Grassmann monomial(const Context& ctx, Mask m, cplx v) {
        Grassmann g(ctx);
        if (v != cplx(0.0, 0.0)) g.terms_.push_back({m, v});
        g.normalize();
        return g;
    }

    const Context& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    cplx coeff(Mask m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Mask k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return {0.0, 0.0};
    }

    cplx body() const { return coeff(0u); }

    Grassmann soul() const {
        Grassmann g(ctx_);
        for (const auto& [m, c] : terms_)
            if (m != 0u) g.terms_.push_back({m, c});
        return g;
    }

    double norm_inf() const {
        double n = 0.0;
        for (const auto& [m, c] : terms_) n = std::max(n, std::abs(c));
        return n;
    }

    Parity parity() const {
        bool even = false, odd = false;
        for (const auto& [m, c] : terms_)
            (std::popcount(m) % 2 == 0 ? even : odd) = true;
        if (even && odd) return Parity::Mixed;
        if (odd) return Parity::Odd;
        return Parity::Even;  // zero counts as even
    }
    bool pure_even() const { return parity() != Parity::Mixed && parity() != Parity::Odd; }
    bool pure_odd() const { return is_zero() || parity() == Parity::Odd; }

    // Promote into a larger context whose labels extend this one's.
    Grassmann promoted(const Context& bigger) const {
        if (ctx_ == bigger) return *this;
        if (!ctx_ || !GeneratorSet::prefix_of(*ctx_, *bigger))
            throw context_error("cannot promote between unrelated generator sets");
        Grassmann g = *this;
        g.ctx_ = bigger;
        return g;
    }

    friend Grassmann operator+(const Grassmann& a, const Grassmann& b) {
        auto [x, y] = aligned(a, b);
        Grassmann r(x.ctx_);
        r.terms_ = merge(x.terms_, y.terms_, 1.0);
        return r;
    }
    friend Grassmann operator-(const Grassmann& a, const Grassmann& b) {
        auto [x, y] = aligned(a, b);
        Grassmann r(x.ctx_);
        r.terms_ = merge(x.terms_, y.terms_, -1.0);
        return r;
    }
    Grassmann operator-() const {
        Grassmann r(ctx_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Grassmann operator*(const Grassmann& a, const Grassmann& b) {
        auto [x, y] = aligned(a, b);
        std::map<Mask, cplx> acc;
        for (const auto& [ma, ca] : x.terms_)
            for (const auto& [mb, cb] : y.terms_) {
                if (ma & mb) continue;  // repeated generator annihilates
                const double s = reorder_sign(ma, mb);
                acc[ma | mb] += s * (ca * cb);
            }
        Grassmann r(x.ctx_);
        for (const auto& [m, c] : acc)
            if (c != cplx(0.0, 0.0)) r.terms_.push_back({m, c});
        return r;
    }

    friend Grassmann operator*(cplx s, const Grassmann& a) {
        Grassmann r(a.ctx_);
        if (s == cplx(0.0, 0.0)) return r;
        r.terms_ = a.terms_;
        for (auto& t : r.terms_) t.second *= s;
        return r;
    }
    friend Grassmann operator*(const Grassmann& a, cplx s) { return s * a; }
    friend Grassmann operator*(double s, const Grassmann& a) { return cplx(s, 0.0) * a; }
    friend Grassmann operator*(const Grassmann& a, double s) { return cplx(s, 0.0) * a; }

    Grassmann& operator+=(const Grassmann& b) { return *this = *this + b; }
    Grassmann& operator-=(const Grassmann& b) { return *this = *this - b; }
    Grassmann& operator*=(const Grassmann& b) { return *this = *this * b; }

    friend bool operator==(const Grassmann& a, const Grassmann& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }

    // Sign picked up when the canonical monomial `a` is multiplied on the
    // right by canonical `b`: parity of the number of generator pairs
    // (i in a, j in b) with i > j.
    static double reorder_sign(Mask a, Mask b) {
        int swaps = 0;
        while (a) {
            const int i = std::countr_zero(a);
            swaps += std::popcount(b & ((Mask(1u) << i) - 1u));
            a &= a - 1u;
        }
        return (swaps % 2 == 0) ? 1.0 : -1.0;
    }

  private:
    static std::pair<Grassmann, Grassmann> aligned(const Grassmann& a, const Grassmann& b) {
        if (a.ctx_ == b.ctx_) return {a, b};
        if (!a.ctx_ || !b.ctx_) throw context_error("operation on value without context");
        if (GeneratorSet::prefix_of(*a.ctx_, *b.ctx_)) return {a.promoted(b.ctx_), b};
        if (GeneratorSet::prefix_of(*b.ctx_, *a.ctx_)) return {a, b.promoted(a.ctx_)};
        throw context_error("mismatched generator sets");
    }

    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                   double sb) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.push_back({b[j].first, sb * b[j].second});
                ++j;
            } else {
                cplx c = a[i].second + sb * b[j].second;
                if (c != cplx(0.0, 0.0)) out.push_back({a[i].first, c});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(t);
        }
        std::erase_if(out, [](const Term& t) { return t.second == cplx(0.0, 0.0); });
        terms_ = std::move(out);
    }

    Context ctx_;
    std::vector<Term> terms_;  // sorted by mask, no exact-zero coefficients
};

inline Parity g_parity(const Grassmann& a) { return a.parity(); }
inline Grassmann g_add(const Grassmann& a, const Grassmann& b) { return a + b; }
inline Grassmann g_mul(const Grassmann& a, const Grassmann& b) { return a * b; }

// -----------------------------------------------------------------------------
// Analytic functions of even arguments
// -----------------------------------------------------------------------------

// f(body + soul) = sum_k f^(k)(body)/k! soul^k; the soul is nilpotent so the
// series terminates.  `deriv(k)` must return f^(k) at the body.
inline Grassmann analytic_lift(const Grassmann& x, const std::function<cplx(int)>& deriv) {
    if (x.parity() != Parity::Even)
        throw context_error("analytic_lift requires an even argument");
    const Context& ctx = x.context();
    Grassmann s = x.soul();
    Grassmann result = Grassmann::scalar(ctx, deriv(0));
    Grassmann spow = Grassmann::scalar(ctx, 1.0);
    double fact = 1.0;
    for (int k = 1; k <= GeneratorSet::capacity; ++k) {
        spow = spow * s;
        if (spow.is_zero()) break;
        fact *= k;
        result += (deriv(k) / fact) * spow;
    }
    return result;
}

inline void require_even(const Grassmann& x, const char* op) {
    if (x.parity() != Parity::Even)
        throw context_error(std::string(op) + " requires an even argument");
}

inline Grassmann g_inverse(const Grassmann& x) {
    require_even(x, "inverse");
    cplx b = x.body();
    if (std::abs(b) == 0.0)
        throw singular_linearization_error("inverse of element with zero body");
    // f^(k)(b) = (-1)^k k! / b^(k+1)
    return analytic_lift(x, [b](int k) {
        cplx v = (k % 2 == 0 ? 1.0 : -1.0);
        cplx p = b;
        for (int i = 0; i < k; ++i) p *= b;
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return v * f / p;
    });
}

inline Grassmann g_log(const Grassmann& x) {
    require_even(x, "g_log");
    cplx b = x.body();
    if (std::abs(b) == 0.0) throw singular_linearization_error("log of element with zero body");
    return analytic_lift(x, [b](int k) -> cplx {
        if (k == 0) return std::log(b);
        double f = 1.0;
        for (int i = 2; i <= k - 1; ++i) f *= i;
        cplx p = 1.0;
        for (int i = 0; i < k; ++i) p *= b;
        return ((k - 1) % 2 == 0 ? 1.0 : -1.0) * f / p;
    });
}

inline Grassmann g_exp(const Grassmann& x) {
    cplx e = std::exp(x.body());
    return analytic_lift(x, [e](int) { return e; });
}

inline Grassmann g_sqrt(const Grassmann& x) {
    require_even(x, "g_sqrt");
    cplx b = x.body();
    if (std::abs(b) == 0.0) throw singular_linearization_error("sqrt of element with zero body");
    return analytic_lift(x, [b](int k) -> cplx {
        cplx v = std::sqrt(b);
        double a = 0.5;
        for (int i = 0; i < k; ++i) {
            v *= a / b;
            a -= 1.0;
        }
        return v;
    });
}

inline Grassmann g_pow(const Grassmann& x, double p) {
    require_even(x, "g_pow");
    cplx b = x.body();
    if (std::abs(b) == 0.0) throw singular_linearization_error("pow of element with zero body");
    return analytic_lift(x, [b, p](int k) -> cplx {
        cplx v = std::pow(b, p);
        double a = p;
        for (int i = 0; i < k; ++i) {
            v *= a / b;
            a -= 1.0;
        }
        return v;
    });
}

// -----------------------------------------------------------------------------
// Implicit solve: relation(omega) = 0 for an even unknown
// -----------------------------------------------------------------------------

// Solves the body equation by Newton iteration (derivative obtained exactly
// through a nilpotent dual extension of the context), then peels off the
// nilpotent layers by Newton steps in the algebra, which terminate because
// every correction is nilpotent.
inline Grassmann g_solve_implicit(const std::function<Grassmann(const Grassmann&)>& relation,
                                  double seed, const Context& ctx) {
    const Context ext = ctx->extended({"__ad1", "__ad2"});
    const int n = ctx->size();
    const Grassmann::Mask dmask = (Grassmann::Mask(1u) << n) | (Grassmann::Mask(1u) << (n + 1));
    const Grassmann delta =
        Grassmann::generator(ext, n) * Grassmann::generator(ext, n + 1);  // even, delta^2 = 0

    // value and exact derivative of the relation at an algebra point
    auto value_and_deriv = [&](const Grassmann& w) {
        Grassmann r = relation(w.promoted(ext) + delta);
        Grassmann val(ctx), der(ctx);
        for (const auto& [m, c] : r.terms()) {
            if ((m & dmask) == dmask)
                der += Grassmann::monomial(ctx, m & ~dmask, c);
            else if ((m & dmask) == 0u)
                val += Grassmann::monomial(ctx, m, c);
        }
        return std::pair{val, der};
    };

    // body stage
    cplx b = seed;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        auto [val, der] = value_and_deriv(Grassmann::scalar(ctx, b));
        const cplx f = val.body(), fp = der.body();
        if (std::abs(f) <= 1e-14 * std::max(1.0, std::abs(b))) {
            converged = true;
            break;
        }
        if (std::abs(fp) < 1e-300) throw singular_linearization_error("zero body derivative");
        b -= f / fp;
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw no_root_error("body iteration diverged");
    }
    if (!converged) {
        auto [val, der] = value_and_deriv(Grassmann::scalar(ctx, b));
        if (std::abs(val.body()) > 1e-12 * std::max(1.0, std::abs(b)))
            throw no_root_error("body root-finding failed to converge");
    }
    {
        auto [val, der] = value_and_deriv(Grassmann::scalar(ctx, b));
        if (std::abs(der.body()) <= 1e-8 * std::max(1.0, std::abs(b)))
            throw singular_linearization_error("zero derivative of body relation at root");
    }

    // nilpotent stage
    Grassmann w = Grassmann::scalar(ctx, b);
    for (int it = 0; it <= GeneratorSet::capacity + 1; ++it) {
        auto [val, der] = value_and_deriv(w);
        if (val.norm_inf() <= 1e-13 * std::max(1.0, w.norm_inf())) return w;
        if (std::abs(der.body()) < 1e-300)
            throw singular_linearization_error("zero derivative in nilpotent stage");
        w -= g_inverse(der) * val;
    }
    throw no_root_error("nilpotent stage did not terminate");
}

}  // namespace sgflow
