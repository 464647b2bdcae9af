#include <catch2/catch_amalgamated.hpp>

#include <sgflow/specfun.hpp>

#include <random>

#include "oracles.hpp"

using namespace sgflow;
using Catch::Approx;

TEST_CASE("lambert_w pinned values") {
    CHECK(lambert_w({0.0, 0.0}).real() == 0.0);
    CHECK(lambert_w({std::exp(1.0), 0.0}).real() == Approx(1.0).margin(1e-14));
    // Newton oracle on f(w) = w e^w - 1 from seed 0.5 gives 0.5671432904097838
    CHECK(lambert_w({1.0, 0.0}).real() == Approx(0.5671432904097838).epsilon(1e-13));
    CHECK(lambert_w_real(-0.2, Branch{-1}) == Approx(-2.5426413577735264).epsilon(1e-12));
}

TEST_CASE("lambert_w round trip on both branches") {
    std::mt19937_64 rng(2024);
    auto u = [&rng] { return double(rng() >> 11) * 0x1p-53; };
    for (int i = 0; i < 1000; ++i) {
        const cplx x{u() * 20.0 - 10.0, u() * 20.0 - 10.0};
        const cplx w = lambert_w(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
    }
    const double e = std::exp(1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = -1.0 / e + u() * (1.0 / e - 1e-6);  // in [-1/e, 0)
        const double w = lambert_w_real(x, Branch{-1});
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
        CHECK(w <= -1.0 + 1e-10);
    }
}

TEST_CASE("lambert_w domain errors on real branches") {
    CHECK_THROWS_AS(lambert_w_real(-1.0, Branch{0}), domain_error_sf);
    CHECK_THROWS_AS(lambert_w_real(-1.0, Branch{-1}), domain_error_sf);
    CHECK_THROWS_AS(lambert_w_real(0.5, Branch{-1}), domain_error_sf);
    CHECK_THROWS_AS(lambert_w(cplx(1.0, 0.0), Branch{2}), domain_error_sf);
    // the principal branch continues into the complex plane left of -1/e
    const cplx w = lambert_w(cplx(-3.6, 0.0));
    CHECK(std::abs(w * std::exp(w) - cplx(-3.6, 0.0)) < 1e-12 * 3.6);
    CHECK(w.imag() != 0.0);
}

TEST_CASE("elliptic integrals pinned values") {
    const cplx I{0.0, 1.0};
    CHECK(std::abs(ellip_F({0.0, 0.0}, I)) == 0.0);
    CHECK(std::abs(ellip_E({0.0, 0.0}, I)) == 0.0);
    // k = 0 reduces both integrands to (1 - a^2)^{-1/2} and 1/sqrt(1-a^2)*1
    CHECK(ellip_F({0.5, 0.0}, {0.0, 0.0}).real() == Approx(std::asin(0.5)).epsilon(1e-12));
    CHECK(ellip_E({0.5, 0.0}, {0.0, 0.0}).real() == Approx(std::asin(0.5)).epsilon(1e-12));
    // quadrature oracle references, computed independently beforehand
    CHECK(ellip_F({0.5, 0.0}, I).real() == Approx(0.50320944317733089).epsilon(1e-10));
    CHECK(ellip_E({0.5, 0.0}, I).real() == Approx(0.54545145608344874).epsilon(1e-10));
    const cplx z{0.3, 0.2};
    CHECK(std::abs(ellip_F(z, I) - cplx(0.29940535845144659, 0.20011845074260048)) < 1e-10);
    CHECK(std::abs(ellip_E(z, I) - cplx(0.29637402461861236, 0.21540505629571886)) < 1e-10);
}

TEST_CASE("elliptic integrals match the independent quadrature oracle") {
    std::mt19937_64 rng(31337);
    auto u = [&rng] { return double(rng() >> 11) * 0x1p-53; };
    int checked = 0;
    for (int i = 0; i < 200 && checked < 100; ++i) {
        cplx z{u() * 1.6 - 0.8, u() * 1.6 - 0.8};
        cplx k = (i % 3 == 0) ? cplx(0.0, 1.0) : cplx(u() * 2.0 - 1.0, u() * 2.0 - 1.0);
        try {
            const cplx F = ellip_F(z, k);
            const cplx E = ellip_E(z, k);
            CHECK(std::abs(F - oracle::ellip_F(z, k)) <= 1e-9 * std::max(1.0, std::abs(F)));
            CHECK(std::abs(E - oracle::ellip_E(z, k)) <= 1e-9 * std::max(1.0, std::abs(E)));
            ++checked;
        } catch (const singular_path_error&) {
            // path hit a branch point; skip and draw another sample
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("derivative of ellip_F is the integrand") {
    const cplx I{0.0, 1.0};
    const cplx z{0.4, 0.1};
    const double h = 1e-5;
    const cplx dz = (ellip_F(z + cplx(h, 0.0), I) - ellip_F(z - cplx(h, 0.0), I)) / (2.0 * h);
    const cplx integrand = 1.0 / (std::sqrt(1.0 - z * z) * std::sqrt(1.0 + z * z));
    CHECK(std::abs(dz - integrand) < 1e-6);
}

TEST_CASE("F - E difference computed two ways agrees") {
    const cplx I{0.0, 1.0};
    std::mt19937_64 rng(5);
    auto u = [&rng] { return double(rng() >> 11) * 0x1p-53; };
    for (int i = 0; i < 20; ++i) {
        const cplx z{u() * 1.4 - 0.7, u() * 0.4 - 0.2};
        const cplx d1 = ellip_F(z, I) - ellip_E(z, I);
        // integral of the difference of integrands: (1 - (1 - k^2 a^2)) / (...)
        const cplx d2 = oracle::integrate01(
            [&](double t) {
                const cplx a = t * z;
                const cplx s1 = std::sqrt(1.0 - a * a), s2 = std::sqrt(1.0 + a * a);
                return z * (1.0 / (s1 * s2) - s2 / s1);
            },
            1e-13);
        CHECK(std::abs(d1 - d2) <= 1e-9 * std::max(1.0, std::abs(d1)));
    }
}

TEST_CASE("singular path is reported") {
    CHECK_THROWS_AS(ellip_F({2.0, 0.0}, {0.5, 0.0}), singular_path_error);  // passes through 1
    CHECK_THROWS_AS(ellip_E({2.0, 0.0}, {0.5, 0.0}), singular_path_error);  // and through 1/k = 2
}
