#include <doctest.h>

#include "blowup/identity_suite.hpp"
#include "test_util.hpp"

using namespace blowup;
using testutil::formal;
using testutil::formal_point;
using testutil::preset;

namespace {

Scenario corrupted_line_scenario() {
    Scenario s;
    s.m_preset = "cp:3";
    s.n_preset = "cp-linear:1";
    return s;
}

} // namespace

TEST_CASE("context construction and validation") {
    CHECK(preset("cp:2", "point").ctx->rank() == 2);
    CHECK(preset("cp:3", "cp-linear:1").ctx->rank() == 2);

    // wrong normal bundle: c(E) = 1 fails Whitney in degree 2
    {
        Scenario s = corrupted_line_scenario();
        s.e_chern_given = true; // all classes zero
        try {
            (void)build_scenario(s);
            CHECK(false);
        } catch (const WhitneyViolationError& e) {
            CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
        }
    }

    // explicit classes matching (1 + hN)^2 on CP^1 are accepted; hN^2 dies
    // by truncation and the data is the honest normal bundle of a line
    {
        Scenario s = corrupted_line_scenario();
        s.e_chern_given = true;
        s.e_chern = {"2*hN", "hN^2"};
        CHECK(build_scenario(s).ctx->rank() == 2);
    }

    // a genuinely wrong first class fails Whitney
    {
        Scenario s = corrupted_line_scenario();
        s.e_chern_given = true;
        s.e_chern = {"hN", "0"};
        CHECK_THROWS_AS((void)build_scenario(s), WhitneyViolationError);
    }

    // corrupted pushforward table violates the projection formula
    {
        Scenario s = corrupted_line_scenario();
        s.embedding.i_shriek_given = true;
        s.embedding.i_shriek = {{"1", "h^2"}, {"hN", "2*h^3"}};
        CHECK_THROWS_AS((void)build_scenario(s), TableInconsistencyError);
    }

    // missing table entries are rejected
    {
        Scenario s = corrupted_line_scenario();
        s.embedding.i_shriek_given = true;
        s.embedding.i_shriek = {{"1", "h^2"}};
        CHECK_THROWS_AS((void)build_scenario(s), TableInconsistencyError);
    }

    // dimension bookkeeping
    {
        Scenario s;
        s.formal = true;
        s.dim_m = 6;
        s.dim_n = 2;
        s.rank = 3;
        CHECK_THROWS_AS((void)build_scenario(s), ScenarioError);
    }
}

TEST_CASE("f pullback is a ring map") {
    auto built = preset("cp:3", "cp-linear:1");
    const auto& ctx = *built.ctx;
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const MElement a = random_m_element(ctx, rng);
        const MElement b = random_m_element(ctx, rng);
        CHECK(ctx.multiply(ctx.f_pullback(a), ctx.f_pullback(b)) ==
              ctx.f_pullback(ctx.model()->mul(a, b)));
    }
    CHECK(ctx.f_pullback(ctx.model()->one()) == ctx.one());
    CHECK(ctx.f_pullback(ctx.model()->zero()).is_zero());
}

TEST_CASE("shriek canonicalization") {
    // r = 2 with a base large enough to keep beta c1(E) alive:
    // i~^!(p*(beta) xi) = f*i^!(beta) - i~^!(p*(beta c1(E)))
    auto built = formal(8, 4);
    const auto& ctx = *built.ctx;
    const auto n = ctx.model()->n_ring();
    const RingElement beta = n->gen("cN1");
    const BlowupElement got =
        ctx.i_tilde_shriek(ctx.pe()->pullback(beta) * ctx.pe()->xi_element());
    CHECK(got.exc.size() == 1);
    CHECK(got.m_part.v == beta);
    CHECK(got.m_part.u.is_zero());
    CHECK(got.exc[0] == -(beta * n->gen("e1")));

    // gamma = 1 is already canonical for r >= 2
    const BlowupElement one_sh = ctx.i_tilde_shriek(ctx.pe()->ring()->one());
    CHECK(one_sh.m_part.is_zero());
    CHECK(one_sh.exc[0] == n->one());

    // the formule clef as a representation identity, concrete and formal
    for (const auto& b : {preset("cp:3", "cp-linear:1"), formal(8, 4)}) {
        Rng rng(17);
        for (int t = 0; t < 25; ++t) {
            const RingElement y = random_element(b.ctx->model()->n_ring(), rng);
            const BlowupElement lhs = b.ctx->f_pullback(b.ctx->model()->i_shriek(y));
            const BlowupElement rhs = b.ctx->i_tilde_shriek(
                b.ctx->pe()->pullback(y) * b.ctx->pe()->chern_Q_top());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("restriction to the exceptional divisor") {
    auto built = preset("cp:3", "cp-linear:1");
    const auto& ctx = *built.ctx;
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        const MElement a = random_m_element(ctx, rng);
        CHECK(ctx.i_tilde_pullback(ctx.f_pullback(a)) ==
              ctx.pe()->pullback(ctx.model()->i_star(a)));
        const RingElement gamma = random_element(ctx.pe()->ring(), rng);
        CHECK(ctx.i_tilde_pullback(ctx.i_tilde_shriek(gamma)) ==
              -(gamma * ctx.pe()->xi_element()));
    }
    CHECK(ctx.i_tilde_pullback(ctx.exceptional_class()) == -ctx.pe()->xi_element());

    // i~* is a ring homomorphism
    for (int t = 0; t < 25; ++t) {
        const BlowupElement x = random_blowup_element(ctx, rng);
        const BlowupElement y = random_blowup_element(ctx, rng);
        CHECK(ctx.i_tilde_pullback(ctx.multiply(x, y)) ==
              ctx.i_tilde_pullback(x) * ctx.i_tilde_pullback(y));
    }
}

TEST_CASE("powers of the exceptional class on point blow-ups") {
    // eta := -i~^!(1) satisfies eta^{v+1} = -i~^!(xi^v)
    auto built = preset("cp:4", "point");
    const auto& ctx = *built.ctx;
    const BlowupElement eta = ctx.neg(ctx.exceptional_class());
    BlowupElement power = eta;
    for (int v = 1; v <= 3; ++v) {
        power = ctx.multiply(power, eta);
        CHECK(power == ctx.neg(ctx.i_tilde_shriek(ctx.pe()->xi_power(v))));
    }

    // blowing up a point of CP^2: the square of the exceptional curve is -1
    auto cp2 = preset("cp:2", "point");
    const BlowupElement eta2 = cp2.ctx->neg(cp2.ctx->exceptional_class());
    CHECK(cp2.ctx->integrate(cp2.ctx->multiply(eta2, eta2)) == -1);
}

TEST_CASE("integration") {
    auto built = preset("cp:2", "point");
    const auto& ctx = *built.ctx;
    // top classes of M integrate through f*
    const MElement top = ctx.model()->element(
        GradedPoly::from_monomial(
            Monomial::power(*ctx.model()->m_ring()->find_generator("h"), 2), 5,
            Coeff::integers));
    CHECK(ctx.integrate(ctx.f_pullback(top)) == 5);

    // canonicalization preserves integrals of raw pairs
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const MElement m = random_m_element(ctx, rng);
        const RingElement gamma = random_element(ctx.pe()->ring(), rng);
        CHECK(ctx.integrate_pair(m, gamma) ==
              ctx.integrate(ctx.add(ctx.f_pullback(m), ctx.i_tilde_shriek(gamma))));
    }

    // formal contexts have no integral
    auto f = formal(6, 2);
    CHECK_THROWS_AS((void)f.ctx->integrate(f.ctx->one()), IntegrationError);
}

TEST_CASE("total class of the blow-up") {
    // codimension 1 degenerates: the defect vanishes identically even with
    // nonzero c_1(E)
    {
        auto built = formal(4, 2, Coeff::integers, {"e1"}, true, 1);
        CHECK(built.ctx->defect_class().is_zero());
        CHECK(built.ctx->chern_blowup() ==
              built.ctx->f_pullback(built.ctx->model()->total_chern()));
        // independent route: -(xi + c1(E)) collapses under xi -> -c1(E)
        const RingElement residue =
            -(built.ctx->pe()->xi_element() +
              built.ctx->pe()->pullback(built.ctx->model()->n_ring()->gen("e1")));
        CHECK(residue.is_zero());
    }

    // point blow-ups match the binomial closed form for every codimension
    for (int r = 2; r <= 6; ++r) {
        auto built = formal_point(r);
        const auto& ctx = *built.ctx;
        const BlowupElement defect = ctx.defect_class();
        const BlowupElement eta = ctx.neg(ctx.exceptional_class());
        BlowupElement expected = ctx.zero();
        BlowupElement eta_pow = ctx.one();
        for (int v = 1; v <= r; ++v) {
            eta_pow = ctx.multiply(eta_pow, eta);
            expected =
                ctx.add(expected, ctx.scaled(eta_pow, binomial(r, v) - binomial(r, v - 1)));
        }
        CHECK(defect == expected);
    }

    // degree-4 class for a codimension-2 center in a 6-manifold
    {
        auto built = formal(6, 2);
        const auto& ctx = *built.ctx;
        const auto& model = *ctx.model();
        const BlowupElement lhs = ctx.degree_part(ctx.chern_blowup(), 4);
        const MElement c1 = model.degree_part(model.total_chern(), 2);
        const MElement c2 = model.degree_part(model.total_chern(), 4);
        const BlowupElement rhs = ctx.sub(
            ctx.f_pullback(model.add(c2, model.i_shriek(model.n_ring()->one()))),
            ctx.multiply(ctx.f_pullback(c1), ctx.exceptional_class()));
        CHECK(lhs == rhs);
    }

    // nothing survives above the dimension of the blow-up
    for (const auto& b : {preset("cp:3", "cp-linear:1"), formal_point(4)}) {
        const BlowupElement total = b.ctx->total_class();
        CHECK(total.m_part.u.value().max_degree() <= b.ctx->dimension());
        const int unit = degree_unit(b.ctx->mode());
        for (std::size_t j = 0; j < total.exc.size(); ++j)
            CHECK(total.exc[j].value().max_degree() +
                      (static_cast<int>(j) + 1) * unit <=
                  b.ctx->dimension());
    }

    // mode guards
    CHECK_THROWS_AS((void)formal_point(2, Coeff::mod2).ctx->chern_blowup(),
                    ModeMismatchError);
    CHECK_THROWS_AS((void)formal_point(2).ctx->sw_blowup(), ModeMismatchError);
}

TEST_CASE("Stiefel-Whitney mode") {
    // codimension 1 real blow-up changes nothing
    {
        auto built = formal(3, 2, Coeff::mod2, {"v1"}, true, 1);
        CHECK(built.ctx->defect_class().is_zero());
    }

    // real point blow-ups: mod-2 binomial defect (oracle computes parities
    // from exact integer binomials)
    for (int r = 2; r <= 4; ++r) {
        auto built = formal_point(r, Coeff::mod2);
        const auto& ctx = *built.ctx;
        const BlowupElement defect = ctx.sub(ctx.sw_blowup(),
                                             ctx.f_pullback(ctx.model()->total_chern()));
        const BlowupElement eta = ctx.neg(ctx.exceptional_class());
        BlowupElement expected = ctx.zero();
        BlowupElement eta_pow = ctx.one();
        for (int v = 1; v <= r; ++v) {
            eta_pow = ctx.multiply(eta_pow, eta);
            if ((binomial(r, v) - binomial(r, v - 1)) % 2 != 0)
                expected = ctx.add(expected, eta_pow);
        }
        CHECK(defect == expected);
    }

    // w_1(E) enters the degree-1 class: over a 1-dimensional base with
    // nonzero w_1(E) and r = 2 the defect starts with i~^!(1)
    {
        auto built = formal(3, 1, Coeff::mod2, {"v1", "v2"}, true);
        const auto& ctx = *built.ctx;
        const BlowupElement w1 = ctx.degree_part(ctx.sw_blowup(), 1);
        const MElement m1 = ctx.model()->degree_part(ctx.model()->total_chern(), 1);
        const BlowupElement expected =
            ctx.add(ctx.f_pullback(m1), ctx.exceptional_class());
        CHECK(w1 == expected);
    }

    // real projective space at a point, as a concrete mod2 scenario
    {
        auto built = preset("rp:3", "point");
        const auto& ctx = *built.ctx;
        CHECK(ctx.mode() == Coeff::mod2);
        // r = 3: all binomial parities vanish, w(M~) = f*w(M)
        CHECK(ctx.defect_class().is_zero());
        CHECK(run_euler(built) == (3 + 1 + (3 - 1)) % 2);
    }
}

TEST_CASE("exceptional class") {
    auto built = preset("cp:3", "cp-linear:1");
    const BlowupElement exc = built.ctx->exceptional_class();
    CHECK(exc.m_part.is_zero());
    CHECK(exc.exc[0] == built.ctx->model()->n_ring()->one());

    // r = 1: the rewrite fires immediately and lands in the manifold part
    auto r1 = preset("cp:2", "cp-linear:1");
    const BlowupElement exc1 = r1.ctx->exceptional_class();
    CHECK(exc1.exc.empty());
    CHECK(exc1.m_part == r1.ctx->model()->i_shriek(r1.ctx->model()->n_ring()->one()));

    // first-class identity c_1(M~) = f*c_1(M) - (r-1) i~^!(1) on concrete data
    for (const auto& b : {preset("cp:2", "point"), preset("cp:3", "cp-linear:1")}) {
        const auto& ctx = *b.ctx;
        const BlowupElement c1 = ctx.degree_part(ctx.chern_blowup(), 2);
        const MElement c1m = ctx.model()->degree_part(ctx.model()->total_chern(), 2);
        const BlowupElement expected = ctx.add(
            ctx.f_pullback(c1m),
            ctx.scaled(ctx.exceptional_class(), Int(-(ctx.rank() - 1))));
        CHECK(c1 == expected);
    }
}
