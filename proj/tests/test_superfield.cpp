#include <catch2/catch_amalgamated.hpp>

#include <sgflow/superfield.hpp>

#include <cmath>
#include <random>

#include "fields.hpp"

using namespace sgflow;
using Catch::Approx;
using testfields::susy_ctx;

namespace {

SuperField random_superfield(const Context& ctx, std::mt19937_64& rng) {
    auto a = testfields::random_odd_poly(ctx, rng).field("A");
    auto b = testfields::random_even_poly(ctx, rng).field("B");
    return SuperField(a, b);
}

}  // namespace

TEST_CASE("apply_D on the basic examples") {
    auto ctx = susy_ctx();
    // Phi = theta (A = 0, B = 1): D Phi = 1
    SuperField f1(Field("A", ctx, [ctx](double, double) { return Grassmann(ctx); }),
                  Field("B", ctx, [ctx](double, double) { return Grassmann::scalar(ctx, 1.0); }));
    auto d1 = apply_D(f1);
    CHECK((superfield_value(d1, 0.3, 0.4) - Grassmann::scalar(ctx, 1.0)).norm_inf() == 0.0);

    // Phi = eta1 x: D Phi = theta eta1
    testfields::Poly2 pa(ctx);
    pa.coeff[1][0] = Grassmann::generator(ctx, "eta1");
    SuperField f2(pa.field("A"), Field("B", ctx, [ctx](double, double) { return Grassmann(ctx); }));
    auto d2 = apply_D(f2);
    auto expect = Grassmann::generator(ctx, "theta") * Grassmann::generator(ctx, "eta1");
    CHECK((superfield_value(d2, 0.9, -0.1) - expect).norm_inf() == 0.0);

    // H Phi = -theta eta1 for the same field
    auto h2 = apply_H(f2);
    CHECK((superfield_value(h2, 0.9, -0.1) + expect).norm_inf() == 0.0);
}

TEST_CASE("operator identities D^2 = d_x, H^2 = -d_x, {H,D} = 0 on random superfields") {
    auto ctx = susy_ctx();
    std::mt19937_64 rng(2718);
    for (int rep = 0; rep < 100; ++rep) {
        auto f = random_superfield(ctx, rng);
        const double x = testfields::dyadic(rng), y = testfields::dyadic(rng);

        auto dd = apply_D(apply_D(f));
        auto hh = apply_H(apply_H(f));
        auto hd = apply_H(apply_D(f));
        auto dh = apply_D(apply_H(f));

        const Grassmann theta = Grassmann::generator(ctx, "theta");
        const Grassmann phi_x =
            partial(f.odd_part, x, y, {1, 0}).value + theta * partial(f.even_part, x, y, {1, 0}).value;

        // exact, because the component derivatives are registered analytically
        REQUIRE((superfield_value(dd, x, y) - phi_x).norm_inf() == 0.0);
        REQUIRE((superfield_value(hh, x, y) + phi_x).norm_inf() == 0.0);
        REQUIRE((superfield_value(hd, x, y) + superfield_value(dh, x, y)).norm_inf() == 0.0);
    }
}

TEST_CASE("operator identities via finite differences stay below 1e-8") {
    auto ctx = susy_ctx();
    // component fields without registered derivatives force the stencil path
    auto a = Field("A", ctx, [ctx](double x, double y) {
        return (std::sin(x) * y) * Grassmann::generator(ctx, "eta1");
    });
    auto b = Field::scalar("B", ctx,
                           [](double x, double y) { return cplx(std::cos(x + y), 0.0); });
    SuperField f(a, b);
    auto dd = apply_D(apply_D(f));
    const Grassmann theta = Grassmann::generator(ctx, "theta");
    const double x = 0.3, y = 0.7;
    const Grassmann phi_x =
        partial(f.odd_part, x, y, {1, 0}).value + theta * partial(f.even_part, x, y, {1, 0}).value;
    CHECK((superfield_value(dd, x, y) - phi_x).norm_inf() < 1e-8);
}

TEST_CASE("superfield residual vanishes on trivial and linear superfields") {
    auto ctx = susy_ctx();
    std::mt19937_64 rng(3);
    SuperField zero(Field("A", ctx, [ctx](double, double) { return Grassmann(ctx); }),
                    Field("B", ctx, [ctx](double, double) { return Grassmann(ctx); }));
    SusyParams p{0.4, -0.2, 0.9, 0.1, -1};
    CHECK(superfield_residual(zero, p, 0.1, 0.2).is_zero());

    // A = 0, B = C1 x + C2 y: every term carries a second derivative or a
    // product of fermionic derivatives
    testfields::Poly2 pb(ctx);
    pb.coeff[1][0] = Grassmann::scalar(ctx, 1.25);
    pb.coeff[0][1] = Grassmann::scalar(ctx, -0.75);
    SuperField lin(Field("A", ctx, [ctx](double, double) { return Grassmann(ctx); }),
                   pb.field("B"));
    for (int rep = 0; rep < 5; ++rep) {
        SusyParams q{testfields::dyadic(rng), testfields::dyadic(rng), testfields::dyadic(rng),
                     testfields::dyadic(rng), rep % 2 ? 1 : -1};
        CHECK(superfield_residual(lin, q, 0.5, -0.3).is_zero());
    }
}

TEST_CASE("theta decomposition matches the printed component equations") {
    auto ctx = susy_ctx();
    std::mt19937_64 rng(99);
    std::vector<std::pair<double, double>> pts = {{0.25, -0.5}, {1.0, 0.75}};

    SECTION("a = b = c = d = 0") {
        for (int rep = 0; rep < 10; ++rep) {
            auto f = random_superfield(ctx, rng);
            SusyParams p{0, 0, 0, 0, rep % 2 ? 1 : -1};
            auto rep_ = decompose_check(f, p, pts);
            CHECK(rep_.max_bosonic_discrepancy < 1e-6);
            CHECK(rep_.max_fermionic_discrepancy < 1e-6);
        }
    }
    SECTION("generic parameters exercise every a, b, c, d term") {
        for (int rep = 0; rep < 10; ++rep) {
            auto f = random_superfield(ctx, rng);
            SusyParams p{0.3, -0.7, 1.1, 0.5, rep % 2 ? 1 : -1};
            auto rep_ = decompose_check(f, p, pts);
            CHECK(rep_.max_bosonic_discrepancy < 1e-6);
            CHECK(rep_.max_fermionic_discrepancy < 1e-6);
        }
    }
    SECTION("random parameter tuples") {
        for (int rep = 0; rep < 5; ++rep) {
            auto f = random_superfield(ctx, rng);
            SusyParams p{testfields::dyadic(rng), testfields::dyadic(rng),
                         testfields::dyadic(rng), testfields::dyadic(rng), rep % 2 ? 1 : -1};
            auto rep_ = decompose_check(f, p, pts);
            CHECK(rep_.max_bosonic_discrepancy < 1e-6);
            CHECK(rep_.max_fermionic_discrepancy < 1e-6);
        }
    }
}

TEST_CASE("supersymmetry shift maps solutions to solutions") {
    auto ctx = susy_ctx();
    const double m = 2.0;
    const double k = std::sqrt(5.0) / 5.0;  // eps = 1 fixed slope for m = 2

    auto phi = Field("slope", ctx, [ctx, k, m](double x, double y) {
        return Grassmann::scalar(ctx, cplx(k * (y - m * x) + 0.4, 0));
    });
    phi.register_derivative({1, 0}, [ctx, k, m](double, double) {
        return Grassmann::scalar(ctx, -k * m);
    });
    phi.register_derivative({0, 1}, [ctx, k](double, double) {
        return Grassmann::scalar(ctx, k);
    });
    for (auto mi : {MultiIndex{2, 0}, MultiIndex{1, 1}, MultiIndex{0, 2}, MultiIndex{3, 0},
                    MultiIndex{2, 1}, MultiIndex{1, 2}, MultiIndex{0, 3}})
        phi.register_derivative(mi, [ctx](double, double) { return Grassmann(ctx); });

    auto e1 = Grassmann::generator(ctx, "eta1");
    auto psi = Field("sin", ctx, [e1, m](double x, double y) {
        return std::sin(y - m * x) * e1;
    });
    auto reg = [&](MultiIndex mi, double coef, bool cosine) {
        psi.register_derivative(mi, [e1, m, coef, cosine](double x, double y) {
            return coef * (cosine ? std::cos(y - m * x) : std::sin(y - m * x)) * e1;
        });
    };
    reg({1, 0}, -m, true);
    reg({0, 1}, 1.0, true);
    reg({2, 0}, -m * m, false);
    reg({1, 1}, m, false);
    reg({0, 2}, -1.0, false);
    reg({3, 0}, m * m * m, true);
    reg({2, 1}, -m * m, true);
    reg({1, 2}, m, true);
    reg({0, 3}, -1.0, true);

    SusyParams p{0, 0, 0, 0, 1};
    SuperField f(psi, phi);
    CHECK(superfield_residual(f, p, 0.4, 1.1).norm_inf() < 1e-12);

    // transform with a fresh odd constant and re-test at matched points
    auto eta = Grassmann::generator(ctx, "K1");
    auto [psi2, phi2] = susy_shift(psi, phi, eta);
    SuperField g(psi2, phi2);
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0.4, 1.1}, {-0.3, 0.8}})
        CHECK(superfield_residual(g, p, x, y).norm_inf() < 1e-10);
}

TEST_CASE("theta split reassembles the value") {
    auto ctx = susy_ctx();
    std::mt19937_64 rng(5);
    const Grassmann theta = Grassmann::generator(ctx, "theta");
    for (int rep = 0; rep < 20; ++rep) {
        // random value over the full context, theta included
        Grassmann g(ctx);
        for (int t = 0; t < 6; ++t) {
            auto m = std::uint32_t(rng()) & ((1u << ctx->size()) - 1u);
            g += Grassmann::monomial(ctx, m, cplx(testfields::dyadic(rng), 0));
        }
        auto [free_part, coef] = theta_split(g);
        REQUIRE((free_part + theta * coef - g).is_zero());
    }
}
