#include <doctest.h>

#include <random>

#include "blowup/proj_bundle.hpp"

using namespace blowup;

namespace {

RingPresentation::Ptr point_base(Coeff mode = Coeff::integers) {
    std::map<Monomial, Int> integrals;
    integrals.emplace(Monomial::unit(), 1);
    return RingPresentation::create("point", mode, {}, {}, 0, integrals);
}

RingPresentation::Ptr cp1_base() {
    Generator h{"hN", 2, "N"};
    std::map<Monomial, Int> integrals;
    integrals.emplace(Monomial::power(h, 1), 1);
    return RingPresentation::create("cp:1", Coeff::integers, {h},
                                    {RewriteRule{h, 2, GradedPoly::zero(Coeff::integers)}},
                                    2, integrals);
}

/// Generic base of dimension `dim` with formal classes e1..er for E.
RingPresentation::Ptr formal_base(int dim, int r) {
    std::vector<Generator> gens;
    for (int i = 1; i <= r; ++i) gens.push_back(Generator{"e" + std::to_string(i), 2 * i, "N"});
    return RingPresentation::create("N-formal", Coeff::integers, gens, {}, dim, {});
}

ProjBundle::Ptr trivial_over_point(int r, Coeff mode = Coeff::integers) {
    auto base = point_base(mode);
    std::vector<RingElement> e(r, base->zero());
    return ProjBundle::create(base, e);
}

} // namespace

TEST_CASE("construction and the fundamental relation") {
    // P(trivial rank 2 over a point) = CP^1
    auto cp1 = trivial_over_point(2);
    CHECK(cp1->ring()->dimension() == 2);
    CHECK(cp1->xi_power(2).is_zero());

    // N = CP^1, c(E) = 1 + 2 hN: xi^2 reduces to -2 hN xi
    auto base = cp1_base();
    auto pe = ProjBundle::create(
        base, {base->gen("hN").scaled(2), base->zero()});
    CHECK(pe->xi_power(2) == -(pe->pullback(base->gen("hN")).scaled(2) * pe->xi_element()));

    // rank 1 collapses onto the base: xi = -c1(E)
    auto line = ProjBundle::create(base, {base->gen("hN").scaled(3)});
    CHECK(line->xi_element() == -line->pullback(base->gen("hN")).scaled(3));

    // the relation itself normalizes to zero in every bundle ring
    for (int r = 1; r <= 4; ++r) {
        auto fb = formal_base(2 * r, r);
        std::vector<RingElement> e;
        for (int i = 1; i <= r; ++i) e.push_back(fb->gen("e" + std::to_string(i)));
        auto bundle = ProjBundle::create(fb, e);
        RingElement relation = bundle->xi_power(r);
        for (int i = 1; i <= r; ++i)
            relation = relation + bundle->pullback(e[i - 1]) * bundle->xi_power(r - i);
        CHECK(relation.is_zero());
    }

    // degree-mismatched classes are rejected
    CHECK_THROWS_AS((void)ProjBundle::create(base, {base->one()}), DegreeError);
}

TEST_CASE("xi expansion") {
    auto fb = formal_base(8, 2);
    auto pe = ProjBundle::create(fb, {fb->gen("e1"), fb->gen("e2")});

    const RingElement beta = fb->gen("e1");
    const auto coeffs = pe->expand_in_xi(pe->pullback(beta));
    CHECK(coeffs[0] == beta);
    CHECK(coeffs[1].is_zero());

    const auto sq = pe->expand_in_xi(pe->xi_power(2));
    CHECK(sq[0] == -fb->gen("e2"));
    CHECK(sq[1] == -fb->gen("e1"));

    // c_{r-1}(Q) expands to [c_{r-1}(E), ..., c_1(E), 1]
    for (int r = 2; r <= 4; ++r) {
        auto base = formal_base(2 * r, r);
        std::vector<RingElement> e;
        for (int i = 1; i <= r; ++i) e.push_back(base->gen("e" + std::to_string(i)));
        auto bundle = ProjBundle::create(base, e);
        const auto q = bundle->expand_in_xi(bundle->chern_Q_top());
        for (int j = 0; j < r - 1; ++j) CHECK(q[j] == e[r - 2 - j]);
        CHECK(q[r - 1] == base->one());
    }

    // round trip through from_xi_coeffs on random elements
    std::mt19937_64 rng(11);
    const auto basis = pe->ring()->basis(pe->ring()->dimension());
    for (int t = 0; t < 40; ++t) {
        GradedPoly p(Coeff::integers);
        for (int k = 0; k < 4; ++k)
            p += GradedPoly::from_monomial(basis[rng() % basis.size()],
                                           static_cast<long>(rng() % 19) - 9, Coeff::integers);
        const RingElement gamma = pe->ring()->element(p);
        CHECK(pe->from_xi_coeffs(pe->expand_in_xi(gamma)) == gamma);
    }
}

TEST_CASE("fiber integration") {
    auto fb = formal_base(8, 2);
    auto pe = ProjBundle::create(fb, {fb->gen("e1"), fb->gen("e2")});
    const RingElement beta = fb->gen("e1");
    CHECK(pe->fiber_integrate(pe->pullback(beta) * pe->xi_element()) == beta);
    CHECK(pe->fiber_integrate(pe->pullback(beta)).is_zero());
    CHECK(pe->fiber_integrate(pe->chern_Q_top()) == fb->one());

    // projection formula for p: fiber(p*(b) g) = b fiber(g)
    std::mt19937_64 rng(12);
    const auto nbasis = fb->basis(fb->dimension());
    const auto pbasis = pe->ring()->basis(pe->ring()->dimension());
    for (int t = 0; t < 40; ++t) {
        GradedPoly bp(Coeff::integers), gp(Coeff::integers);
        for (int k = 0; k < 3; ++k) {
            bp += GradedPoly::from_monomial(nbasis[rng() % nbasis.size()],
                                            static_cast<long>(rng() % 19) - 9, Coeff::integers);
            gp += GradedPoly::from_monomial(pbasis[rng() % pbasis.size()],
                                            static_cast<long>(rng() % 19) - 9, Coeff::integers);
        }
        const RingElement b = fb->element(bp);
        const RingElement g = pe->ring()->element(gp);
        CHECK(pe->fiber_integrate(pe->pullback(b) * g) == b * pe->fiber_integrate(g));
    }
}

TEST_CASE("quotient bundle classes") {
    // r = 2: c_1(Q) = xi + c_1(E)
    auto fb = formal_base(8, 2);
    auto pe = ProjBundle::create(fb, {fb->gen("e1"), fb->gen("e2")});
    CHECK(pe->chern_Q_top() == pe->xi_element() + pe->pullback(fb->gen("e1")));

    // r = 1: the empty sum convention gives c_0(Q) = 1
    auto base = cp1_base();
    auto line = ProjBundle::create(base, {base->gen("hN")});
    CHECK(line->chern_Q_top() == line->ring()->one());

    // trivial rank 3 over a point: c_2(Q) = xi^2
    auto cp2 = trivial_over_point(3);
    CHECK(cp2->chern_Q_top() == cp2->xi_power(2));

    // the two routes agree: series inversion vs closed form, and the series
    // carries nothing above degree 2(r-1)
    for (int r = 1; r <= 4; ++r) {
        auto b = formal_base(2 * r, r);
        std::vector<RingElement> e;
        for (int i = 1; i <= r; ++i) e.push_back(b->gen("e" + std::to_string(i)));
        auto bundle = ProjBundle::create(b, e);
        const RingElement q = bundle->chern_Q();
        CHECK(q.degree_part(2 * (r - 1)) == bundle->chern_Q_top());
        for (int d = 2 * r - 1; d <= bundle->ring()->dimension(); ++d)
            CHECK(q.degree_part(d).is_zero());

        // (1 - xi) c(Q) = p*c(E) exactly in the bundle ring
        const RingElement one_minus_xi = bundle->ring()->one() - bundle->xi_element();
        CHECK(one_minus_xi * q == bundle->ring()->element(bundle->total_e_poly()));
    }
}

TEST_CASE("vertical bundle classes") {
    // trivial bundle over a point: c(V) = (1+xi)^r with xi^r = 0, i.e. the
    // classical total class of projective space (binomial oracle)
    for (int r = 1; r <= 5; ++r) {
        auto pe = trivial_over_point(r);
        RingElement expected = pe->ring()->zero();
        for (int v = 0; v < r; ++v)
            expected = expected + pe->xi_power(v).scaled(binomial(r, v));
        CHECK(pe->chern_vertical() == expected);
    }

    // rank 1: V has rank 0, total class 1
    auto base = cp1_base();
    auto line = ProjBundle::create(base, {base->gen("hN")});
    CHECK(line->chern_vertical() == line->ring()->one());

    // independent route: c(V) = c(Q tensor l*) = sum_i c_i(Q) (1+xi)^{r-1-i}
    for (int r = 2; r <= 4; ++r) {
        auto b = formal_base(2 * r, r);
        std::vector<RingElement> e;
        for (int i = 1; i <= r; ++i) e.push_back(b->gen("e" + std::to_string(i)));
        auto bundle = ProjBundle::create(b, e);
        const RingElement q = bundle->chern_Q();
        const RingElement one_plus_xi = bundle->ring()->one() + bundle->xi_element();
        RingElement twist = bundle->ring()->zero();
        for (int i = 0; i <= r - 1; ++i)
            twist = twist + q.degree_part(2 * i) * one_plus_xi.pow(r - 1 - i);
        CHECK(bundle->chern_vertical() == twist);
    }
}

TEST_CASE("total class of the bundle space") {
    // over a point this is projective space again
    for (int r = 2; r <= 5; ++r) {
        auto pe = trivial_over_point(r);
        CHECK(pe->chern_total(pe->base()->one()) == pe->chern_vertical());
    }

    // rank 1: P(E) = N, total class p*c(N)
    auto base = cp1_base();
    auto line = ProjBundle::create(base, {base->gen("hN")});
    const RingElement c_n = base->element(
        (GradedPoly::constant(1, Coeff::integers) +
         GradedPoly::generator(*base->find_generator("hN"), Coeff::integers))
            .pow(2));
    CHECK(line->chern_total(c_n) == line->pullback(c_n));

    // CP^1 bundle over CP^1 (E = O(2) + O): chi(P(E)) = 4
    auto pe = ProjBundle::create(base, {base->gen("hN").scaled(2), base->zero()});
    const RingElement total = pe->chern_total(c_n);
    const RingElement top = total.degree_part(pe->ring()->dimension());
    CHECK(pe->base()->integrate(pe->fiber_integrate(top)) == 4);
    CHECK(pe->ring()->integrate(top) == 4);
}

TEST_CASE("mod2 bundles use degree-1 xi") {
    auto pe = trivial_over_point(3, Coeff::mod2);
    CHECK(pe->xi().degree == 1);
    CHECK(pe->ring()->dimension() == 2);
    // w(V) = (1+xi)^3 = 1 + xi + xi^2 once xi^3 = 0 and coefficients drop mod 2
    const RingElement expected =
        pe->ring()->one() + pe->xi_element() + pe->xi_power(2);
    CHECK(pe->chern_vertical() == expected);
}
