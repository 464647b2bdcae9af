#include <catch2/catch_amalgamated.hpp>

#include <sgflow/grassmann.hpp>

#include <bit>
#include <random>

#include "oracles.hpp"

using namespace sgflow;
using Catch::Approx;

namespace {

Context ctx6() { return GeneratorSet::make({"eta1", "eta2", "eta3", "eta4", "eta5", "eta6"}); }

oracle::CoeffMap to_map(const Grassmann& g) {
    oracle::CoeffMap m;
    for (const auto& [mask, c] : g.terms()) m[mask] = c;
    return m;
}

Grassmann from_map(const Context& ctx, const oracle::CoeffMap& m) {
    Grassmann g(ctx);
    for (const auto& [mask, c] : m) g += Grassmann::monomial(ctx, mask, c);
    return g;
}

// deterministic random elements; dyadic coefficients keep products and sums
// exact in double precision, so structural identities can be checked exactly
Grassmann random_element(const Context& ctx, std::mt19937_64& rng, int max_terms = 6) {
    auto u = [&rng] { return double(int(rng() % 17) - 8) / 4.0; };
    Grassmann g(ctx);
    const int nterms = 1 + int(rng() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        std::uint32_t m = std::uint32_t(rng()) & ((1u << ctx->size()) - 1u);
        g += Grassmann::monomial(ctx, m, cplx(u(), u()));
    }
    return g;
}

Grassmann random_pure(const Context& ctx, std::mt19937_64& rng, int wanted_parity) {
    Grassmann g(ctx);
    auto u = [&rng] { return double(int(rng() % 17) - 8) / 4.0; };
    for (int t = 0; t < 4; ++t) {
        std::uint32_t m = std::uint32_t(rng()) & ((1u << ctx->size()) - 1u);
        if (std::popcount(m) % 2 != wanted_parity) continue;
        g += Grassmann::monomial(ctx, m, cplx(u(), u()));
    }
    return g;
}

}  // namespace

TEST_CASE("addition is coefficient-wise") {
    auto ctx = ctx6();
    auto e1 = Grassmann::generator(ctx, "eta1");
    auto e2 = Grassmann::generator(ctx, "eta2");
    auto one = Grassmann::scalar(ctx, 1.0);

    CHECK(e1 + e1 == 2.0 * e1);
    CHECK((one + e1 * e2) + (-one) == e1 * e2);

    auto s = e1 + e2;
    CHECK(s.terms().size() == 2);
    CHECK(s.coeff(0b01) == cplx(1.0, 0.0));
    CHECK(s.coeff(0b10) == cplx(1.0, 0.0));
}

TEST_CASE("product basics: nilpotency, anticommutativity, canonical order") {
    auto ctx = ctx6();
    auto e1 = Grassmann::generator(ctx, "eta1");
    auto e2 = Grassmann::generator(ctx, "eta2");

    CHECK((e1 * e1).is_zero());
    CHECK(e2 * e1 == -(e1 * e2));

    auto one = Grassmann::scalar(ctx, 1.0);
    auto p = (one + e1) * (one + e2) * (one - e1 * e2);
    CHECK(p == one + e1 + e2);
}

TEST_CASE("g_mul matches permutation-parity oracle on all monomial pairs over 6 generators") {
    auto ctx = ctx6();
    for (std::uint32_t a = 0; a < 64; ++a)
        for (std::uint32_t b = 0; b < 64; ++b) {
            auto ga = Grassmann::monomial(ctx, a, 1.0);
            auto gb = Grassmann::monomial(ctx, b, 1.0);
            auto got = to_map(ga * gb);
            auto want = oracle::product(to_map(ga), to_map(gb));
            REQUIRE(got == want);
        }
}

TEST_CASE("g_mul matches oracle on random multi-term elements") {
    auto ctx = ctx6();
    std::mt19937_64 rng(1234);
    for (int rep = 0; rep < 200; ++rep) {
        auto a = random_element(ctx, rng);
        auto b = random_element(ctx, rng);
        auto got = a * b;
        auto want = from_map(ctx, oracle::product(to_map(a), to_map(b)));
        REQUIRE((got - want).norm_inf() == 0.0);
    }
}

TEST_CASE("associativity holds exactly on randomized triples") {
    auto ctx = ctx6();
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 100; ++rep) {
        auto a = random_element(ctx, rng, 4);
        auto b = random_element(ctx, rng, 4);
        auto c = random_element(ctx, rng, 4);
        REQUIRE((a * b) * c == a * (b * c));
    }
}

TEST_CASE("graded commutativity for pure-parity elements") {
    auto ctx = ctx6();
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        for (int pa : {0, 1})
            for (int pb : {0, 1}) {
                auto a = random_pure(ctx, rng, pa);
                auto b = random_pure(ctx, rng, pb);
                double sign = (pa == 1 && pb == 1) ? -1.0 : 1.0;
                REQUIRE(a * b == sign * (b * a));
            }
    }
}

TEST_CASE("odd elements square to zero") {
    auto ctx = ctx6();
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 100; ++rep) {
        auto q = random_pure(ctx, rng, 1);
        REQUIRE((q * q).is_zero());
    }
}

TEST_CASE("parity classification") {
    auto ctx = ctx6();
    auto e1 = Grassmann::generator(ctx, "eta1");
    auto e2 = Grassmann::generator(ctx, "eta2");
    auto one = Grassmann::scalar(ctx, 1.0);

    CHECK(g_parity(one + e1 * e2) == Parity::Even);
    CHECK(g_parity(e1) == Parity::Odd);
    CHECK(g_parity(one + e1) == Parity::Mixed);
    CHECK(g_parity(Grassmann(ctx)) == Parity::Even);
}

TEST_CASE("mismatched generator sets are a context error") {
    auto a = GeneratorSet::make({"a", "b"});
    auto b = GeneratorSet::make({"x", "y"});
    CHECK_THROWS_AS(Grassmann::generator(a, 0) + Grassmann::generator(b, 0), context_error);
    CHECK_THROWS_AS(Grassmann::generator(a, 0) * Grassmann::generator(b, 1), context_error);
}

TEST_CASE("prefix contexts promote transparently") {
    auto small = GeneratorSet::make({"eta1", "eta2"});
    auto big = small->extended({"eta3"});
    auto x = Grassmann::generator(small, "eta1");
    auto y = Grassmann::generator(big, "eta3");
    auto p = x * y;
    CHECK(p.coeff(0b101) == cplx(1.0, 0.0));
}

TEST_CASE("analytic lifts: exp, log, sqrt, inverse") {
    auto ctx = ctx6();
    auto e1 = Grassmann::generator(ctx, "eta1");
    auto e2 = Grassmann::generator(ctx, "eta2");
    auto nil = e1 * e2;

    auto x = Grassmann::scalar(ctx, 2.0) + 3.0 * nil;

    auto lx = g_log(x);
    CHECK(lx.body().real() == Approx(std::log(2.0)));
    CHECK(lx.coeff(0b11).real() == Approx(1.5));  // d/dx log at 2 = 1/2 times 3

    auto ex = g_exp(g_log(x));
    CHECK((ex - x).norm_inf() < 1e-14);

    auto sq = g_sqrt(x);
    CHECK((sq * sq - x).norm_inf() < 1e-14);

    auto ix = g_inverse(x);
    CHECK((ix * x - Grassmann::scalar(ctx, 1.0)).norm_inf() < 1e-15);

    CHECK_THROWS_AS(g_log(e1), context_error);
    CHECK_THROWS_AS(g_inverse(nil), singular_linearization_error);
}

TEST_CASE("g_solve_implicit: affine relation") {
    auto ctx = ctx6();
    auto nil = Grassmann::generator(ctx, "eta1") * Grassmann::generator(ctx, "eta2");
    auto relation = [&](const Grassmann& w) {
        return w - Grassmann::scalar(w.context(), 2.0) - nil.promoted(w.context());
    };
    auto w = g_solve_implicit(relation, 1.0, ctx);
    CHECK((w - (Grassmann::scalar(ctx, 2.0) + nil)).norm_inf() == 0.0);
}

TEST_CASE("g_solve_implicit: transcendental relation for omega") {
    auto ctx = ctx6();
    auto e1 = Grassmann::generator(ctx, "eta1");
    auto e2 = Grassmann::generator(ctx, "eta2");
    auto ee = e1 * e2;

    auto make_relation = [&](double y, double C1) {
        return [&, y, C1](const Grassmann& w) {
            const auto& c = w.context();
            auto one = Grassmann::scalar(c, 1.0);
            auto w2 = w * w;
            return 4.0 * w2 * g_log(w) - 4.0 * y * (ee.promoted(c) * w2) + w2 * w2 - one -
                   4.0 * C1 * (ee.promoted(c) * w2);
        };
    };

    // body root at omega = 1; at y = 0, C1 = 0 the soul vanishes
    auto w0 = g_solve_implicit(make_relation(0.0, 0.0), 0.9, ctx);
    CHECK((w0 - Grassmann::scalar(ctx, 1.0)).norm_inf() < 1e-14);

    // y = 1: omega = 1 + (1/2) eta1 eta2, and the relation closes exactly
    auto w1 = g_solve_implicit(make_relation(1.0, 0.0), 0.9, ctx);
    CHECK(w1.body().real() == Approx(1.0));
    CHECK((w1 - Grassmann::scalar(ctx, 1.0) - 0.5 * ee).norm_inf() < 1e-13);
    auto rel = make_relation(1.0, 0.0);
    CHECK(rel(w1).norm_inf() < 1e-13);

    // with C1 too
    auto w2 = g_solve_implicit(make_relation(0.7, 0.4), 1.1, ctx);
    auto rel2 = make_relation(0.7, 0.4);
    CHECK(rel2(w2).norm_inf() < 1e-13);
}

TEST_CASE("g_solve_implicit error paths") {
    auto ctx = ctx6();
    // relation with no root: constant 1
    auto one_rel = [](const Grassmann& w) {
        return Grassmann::scalar(w.context(), 1.0) + 0.0 * w;
    };
    CHECK_THROWS_AS(g_solve_implicit(one_rel, 1.0, ctx), std::runtime_error);

    // zero body derivative at the root: w^2 = 0 at w = 0
    auto degenerate = [](const Grassmann& w) { return w * w; };
    CHECK_THROWS_AS(g_solve_implicit(degenerate, 0.0, ctx), std::runtime_error);
}
