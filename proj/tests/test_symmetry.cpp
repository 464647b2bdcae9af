#include <catch2/catch_amalgamated.hpp>

#include <sgflow/symmetry.hpp>

#include <cmath>

#include "fields.hpp"

using namespace sgflow;
using Catch::Approx;
using testfields::susy_ctx;

TEST_CASE("classical commutation table: 25 of 25 cells") {
    auto ctx = susy_ctx();
    auto spec = classical_table_eps1(ctx);
    auto rep = verify_table(spec);
    CHECK(rep.cells == 25);
    CHECK(rep.matched == 25);
    CHECK(rep.mismatches.empty());

    // spotlight the rotation row
    auto& g = spec.gens;
    auto mt1 = bracket(g[1], g[2]);  // [M, T1]
    SymmetryGenerator want("-T2", ctx);
    for (int ax = 0; ax < 4; ++ax) want.coef[ax] = (-1.0) * g[3].coef[ax];
    CHECK(mt1 == want);
    auto mt2 = bracket(g[1], g[3]);  // [M, T2] = T1
    CHECK(mt2 == g[2]);
}

TEST_CASE("superalgebra commutation table: 49 of 49 cells") {
    auto ctx = susy_ctx();
    auto spec = susy_table(ctx);
    auto rep = verify_table(spec);
    CHECK(rep.cells == 49);
    CHECK(rep.matched == 49);

    auto& g = spec.gens;
    // [S, Y] = -(3/2) Y
    auto sy = bracket(g[0], g[4]);
    SymmetryGenerator want("-1.5Y", ctx);
    for (int ax = 0; ax < 4; ++ax) want.coef[ax] = (-1.5) * g[4].coef[ax];
    CHECK(sy == want);
    // [P1, Q1] = Y and [P1, P2] = 0
    CHECK(bracket(g[1], g[5]) == g[4]);
    CHECK(bracket(g[1], g[2]) == SymmetryGenerator("0", ctx));
    // [S, P1] = -P1
    SymmetryGenerator mp1("-P1", ctx);
    for (int ax = 0; ax < 4; ++ax) mp1.coef[ax] = (-1.0) * g[1].coef[ax];
    CHECK(bracket(g[0], g[1]) == mp1);
}

TEST_CASE("bracket antisymmetry across both tables") {
    auto ctx = susy_ctx();
    for (auto gens : {classical_generators(ctx), susy_generators(ctx)}) {
        for (const auto& a : gens)
            for (const auto& b : gens) {
                auto ab = bracket(a, b);
                auto ba = bracket(b, a);
                for (int ax = 0; ax < 4; ++ax) CHECK((ab.coef[ax] + ba.coef[ax]).is_zero());
            }
    }
}

TEST_CASE("Jacobi identity holds exactly for all triples") {
    auto ctx = susy_ctx();
    CHECK(jacobi_holds(classical_generators(ctx)));
    CHECK(jacobi_holds(susy_generators(ctx)));
}

TEST_CASE("semidirect structure of the classical algebra") {
    auto ctx = susy_ctx();
    auto g = classical_generators(ctx);  // S, M, T1, T2, T3
    std::vector<SymmetryGenerator> ts = {g[2], g[3], g[4]};
    for (const auto& a : ts)
        for (const auto& b : ts) {
            auto br = bracket(a, b);
            for (int ax = 0; ax < 4; ++ax) CHECK(br.coef[ax].is_zero());
        }
    for (const auto& a : {g[0], g[1]})
        for (const auto& b : ts) CHECK(in_span(bracket(a, b), ts));
    // and the rotation is not in the span of the translations
    CHECK_FALSE(in_span(g[1], ts));
}

TEST_CASE("eps = -1 algebra is solvable") {
    auto ctx = susy_ctx();
    auto g = classical_generators_minus(ctx);  // S, t1, t2, t3
    std::vector<SymmetryGenerator> ts = {g[1], g[2], g[3]};
    // first derived algebra lies in span{t1, t2, t3}
    for (const auto& a : g)
        for (const auto& b : g) CHECK(in_span(bracket(a, b), ts));
    // second derived algebra vanishes
    for (const auto& a : ts)
        for (const auto& b : ts) {
            auto br = bracket(a, b);
            for (int ax = 0; ax < 4; ++ax) CHECK(br.coef[ax].is_zero());
        }
}

TEST_CASE("finite actions are consistent with their generators") {
    auto ctx = susy_ctx();
    auto gens = susy_generators(ctx);
    auto acts = susy_actions(ctx);
    REQUIRE(acts.size() == 7);
    for (const auto& act : acts) {
        const SymmetryGenerator* g = nullptr;
        for (const auto& cand : gens)
            if (cand.label == act.generator_label) g = &cand;
        REQUIRE(g != nullptr);
        CHECK(validate_action(act, *g, ctx));
    }
    auto cgens = classical_generators(ctx);
    for (const auto& act : classical_actions(ctx, true)) {
        const SymmetryGenerator* g = nullptr;
        for (const auto& cand : cgens)
            if (cand.label == act.generator_label) g = &cand;
        REQUIRE(g != nullptr);
        CHECK(validate_action(act, *g, ctx));
    }
}

namespace {

double classical_max_residual(const Field& phi, int eps) {
    double worst = 0.0;
    for (double x : {-0.8, -0.2, 0.5, 1.0})
        for (double y : {1.0, 1.4, 1.9})
            worst = std::max(worst, std::abs(classical_residual(phi, eps, x, y)));
    return worst;
}

double susy_max_residual(const Field& phi, const Field& psi, int eps) {
    SusyParams p{0, 0, 0, 0, eps};
    double worst = 0.0;
    for (double x : {-0.5, 0.3, 1.1})
        for (double y : {0.9, 1.6}) {
            worst = std::max(worst, susy_residual_bosonic(phi, psi, p, x, y).value.norm_inf());
            worst = std::max(worst, susy_residual_fermionic(phi, psi, p, x, y).value.norm_inf());
        }
    return worst;
}

}  // namespace

TEST_CASE("phi shift leaves the classical residual unchanged pointwise") {
    auto ctx = susy_ctx();
    auto phi = Field::scalar("f", ctx,
                             [](double x, double y) { return cplx(std::sin(x) * y * y, 0.0); });
    phi.register_derivative({1, 0}, [ctx](double x, double y) {
        return Grassmann::scalar(ctx, std::cos(x) * y * y);
    });
    phi.register_derivative({0, 1}, [ctx](double x, double y) {
        return Grassmann::scalar(ctx, 2.0 * std::sin(x) * y);
    });
    phi.register_derivative({2, 0}, [ctx](double x, double y) {
        return Grassmann::scalar(ctx, -std::sin(x) * y * y);
    });
    phi.register_derivative({1, 1}, [ctx](double x, double y) {
        return Grassmann::scalar(ctx, 2.0 * std::cos(x) * y);
    });
    phi.register_derivative({0, 2}, [ctx](double x, double y) {
        return Grassmann::scalar(ctx, 2.0 * std::sin(x));
    });
    auto psi = Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); });
    auto acts = classical_actions(ctx, true);
    const FiniteAction* zshift = nullptr;
    for (const auto& a : acts)
        if (a.generator_label == "T3") zshift = &a;
    REQUIRE(zshift != nullptr);
    auto [phi2, psi2] = zshift->apply(phi, psi, ActionParam::real(2.5));
    for (double x : {0.2, 0.9})
        for (double y : {1.0, 1.5})
            CHECK(std::abs(classical_residual(phi, 1, x, y) - classical_residual(phi2, 1, x, y)) <
                  1e-12);
}

TEST_CASE("rotation keeps the kink a solution of the eps = 1 equation") {
    auto ctx = susy_ctx();
    auto phi = Field::scalar("kink", ctx, [](double x, double y) {
        if (y == 0.0) throw std::domain_error("chart");
        return cplx(std::sqrt(x * x + y * y) * (std::atan(x / y) + 0.5), 0);
    });
    auto psi = Field("psi0", ctx, [ctx](double, double) { return Grassmann(ctx); });
    CHECK(classical_max_residual(phi, 1) < 1e-6);
    auto acts = classical_actions(ctx, true);
    const FiniteAction* rot = nullptr;
    for (const auto& a : acts)
        if (a.generator_label == "M") rot = &a;
    REQUIRE(rot != nullptr);
    for (double t : {-0.2, 0.1, 0.25}) {
        auto [phi2, psi2] = rot->apply(phi, psi, ActionParam::real(t));
        CHECK(classical_max_residual(phi2, 1) < 1e-6);
    }
}

TEST_CASE("Q1 shift preserves solutions of the a=b=c=d=0 system") {
    auto ctx = susy_ctx();
    const double m = 2.0, k = std::sqrt(5.0) / 5.0;
    auto phi = Field::scalar("slope", ctx,
                             [=](double x, double y) { return cplx(k * (y - m * x), 0); });
    auto psi = Field("bump", ctx, [ctx, m](double x, double y) {
        const double s = y - m * x;
        return (1.0 / std::cosh(s)) * Grassmann::generator(ctx, "eta1");
    });
    REQUIRE(susy_max_residual(phi, psi, 1) < 1e-6);
    auto acts = susy_actions(ctx);
    const FiniteAction* q1 = nullptr;
    for (const auto& a : acts)
        if (a.generator_label == "Q1") q1 = &a;
    REQUIRE(q1 != nullptr);
    auto eta = Grassmann::generator(ctx, "K1");
    auto [phi2, psi2] = q1->apply(phi, psi, ActionParam::fermionic(eta));
    CHECK(susy_max_residual(phi2, psi2, 1) < 1e-6);
}

TEST_CASE("invariance sweep: linear susy solution under all seven generators") {
    auto ctx = susy_ctx();
    auto phi = Field::scalar("lin", ctx,
                             [](double x, double y) { return cplx(0.5 * x + 1.25 * y, 0); });
    auto psi = Field("linpsi", ctx, [ctx](double x, double y) {
        return (y - 2.0 * x) * Grassmann::generator(ctx, "K1") +
               Grassmann::generator(ctx, "K2");
    });
    auto residual = [&](const Field& f, const Field& g) { return susy_max_residual(f, g, 1); };
    auto rep = invariance_sweep(phi, psi, susy_actions(ctx), {-0.4, -0.1, 0.1, 0.3, 0.6},
                                {Grassmann::generator(ctx, "E1"),
                                 0.5 * Grassmann::generator(ctx, "eta2")},
                                residual, 1e-6);
    CHECK(rep.pass);
    // four even actions at five values, three odd shifts at two values
    CHECK(rep.rows.size() == 4 * 5 + 3 * 2);
}
