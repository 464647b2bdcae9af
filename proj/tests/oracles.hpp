#pragma once

// Test-side reference implementations, kept independent of the library code
// paths they are used to check.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Exterior-algebra product by explicit permutation parity: represent each
// monomial as an index list, concatenate, bubble-sort counting swaps, and
// annihilate on repeats.
// ---------------------------------------------------------------------------

inline std::vector<int> mask_to_indices(std::uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (m & (1u << i)) v.push_back(i);
    return v;
}

// returns {mask, sign} or sign 0 when the product vanishes
inline std::pair<std::uint32_t, int> monomial_product(std::uint32_t a, std::uint32_t b) {
    std::vector<int> idx = mask_to_indices(a);
    std::vector<int> ib = mask_to_indices(b);
    idx.insert(idx.end(), ib.begin(), ib.end());
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                ++swaps;
            }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return {0u, 0};
    std::uint32_t m = 0;
    for (int i : idx) m |= (1u << i);
    return {m, swaps % 2 == 0 ? 1 : -1};
}

using CoeffMap = std::map<std::uint32_t, cplx>;

inline CoeffMap product(const CoeffMap& a, const CoeffMap& b) {
    CoeffMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto [m, s] = monomial_product(ma, mb);
            if (s == 0) continue;
            out[m] += double(s) * ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == cplx(0.0, 0.0)) ? out.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature for complex line integrals along [0, 1]
// ---------------------------------------------------------------------------

inline cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b, cplx fa,
                             cplx fm, cplx fb, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const cplx flm = f(lm), frm = f(rm);
    const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1);
}

inline cplx integrate01(const std::function<cplx(double)>& f, double tol = 1e-12) {
    return adaptive_simpson(f, 0.0, 1.0, f(0.0), f(0.5), f(1.0), tol, 40);
}

// straight-path incomplete elliptic integrals as defined by the integrands
inline cplx ellip_F(cplx z, cplx k, double tol = 1e-12) {
    return integrate01(
        [&](double t) {
            const cplx a = t * z;
            return z / (std::sqrt(1.0 - a * a) * std::sqrt(1.0 - k * k * a * a));
        },
        tol);
}

inline cplx ellip_E(cplx z, cplx k, double tol = 1e-12) {
    return integrate01(
        [&](double t) {
            const cplx a = t * z;
            return z * std::sqrt(1.0 - k * k * a * a) / std::sqrt(1.0 - a * a);
        },
        tol);
}

}  // namespace oracle
