#include <doctest.h>

#include <random>

#include "blowup/graded_poly.hpp"

using namespace blowup;

namespace {

const Generator H{"h", 2, "T"};
const Generator XI{"xi", 2, "T"};
const Generator E1{"e1", 2, "T"};
const Generator HN{"hN", 2, "T"};

GradedPoly gp(const Generator& g) { return GradedPoly::generator(g, Coeff::integers); }
GradedPoly c(long v) { return GradedPoly::constant(v, Coeff::integers); }

GradedPoly random_poly(std::mt19937_64& rng, Coeff mode, int max_terms = 6,
                       int max_exp = 4) {
    const std::vector<Generator> gens = {H, XI, E1};
    GradedPoly out(mode);
    const int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (const auto& g : gens)
            if (rng() % 2) m = m.times(Monomial::power(g, 1 + static_cast<int>(rng() % max_exp)));
        const long coeff = static_cast<long>(rng() % 19) - 9;
        out += GradedPoly::from_monomial(m, coeff, mode);
    }
    return out;
}

} // namespace

TEST_CASE("addition") {
    CHECK((gp(H) + (-gp(H))).is_zero());
    const GradedPoly sum = (c(1) + gp(XI)) + gp(XI);
    CHECK(sum == c(1) + gp(XI).scaled(2));

    // characteristic 2: xi + xi = 0
    const GradedPoly xi2 = GradedPoly::generator(XI, Coeff::mod2);
    CHECK((xi2 + xi2).is_zero());

    CHECK_THROWS_AS((void)(gp(XI) + xi2), ModeMismatchError);
}

TEST_CASE("multiplication") {
    const GradedPoly one_plus = c(1) + gp(XI);
    const GradedPoly one_minus = c(1) - gp(XI);
    const GradedPoly prod = one_plus * one_plus * one_minus;
    GradedPoly expected = c(1) + gp(XI);
    expected -= GradedPoly::from_monomial(Monomial::power(XI, 2), 1, Coeff::integers);
    expected -= GradedPoly::from_monomial(Monomial::power(XI, 3), 1, Coeff::integers);
    CHECK(prod == expected);

    // (1+xi)^r (1-xi) has linear coefficient r-1 for every r >= 1
    for (int r = 1; r <= 8; ++r) {
        const GradedPoly p = one_plus.pow(r) * one_minus;
        CHECK(p.coefficient(Monomial::power(XI, 1)) == r - 1);
    }

    std::mt19937_64 rng(3);
    CHECK((random_poly(rng, Coeff::integers) * GradedPoly::zero(Coeff::integers)).is_zero());
}

TEST_CASE("project_degrees") {
    const GradedPoly p =
        c(1) + gp(XI) + GradedPoly::from_monomial(Monomial::power(XI, 2), 1, Coeff::integers);
    CHECK(p.project_degrees(2, 2) == gp(XI));
    CHECK(p.project_degrees(0, GradedPoly::unbounded) == p);

    // (1+h)^4 truncated to a 4-dimensional ambient space; binomial oracle
    const GradedPoly expanded = (c(1) + gp(H)).pow(4);
    const GradedPoly truncated = expanded.project_degrees(0, 4);
    GradedPoly oracle(Coeff::integers);
    for (int k = 0; 2 * k <= 4; ++k)
        oracle += GradedPoly::from_monomial(Monomial::power(H, k), binomial(4, k),
                                            Coeff::integers);
    CHECK(truncated == oracle);

    CHECK_THROWS_AS((void)p.project_degrees(3, 1), DegreeError);
}

TEST_CASE("geometric_inverse") {
    const GradedPoly one_minus_xi = c(1) - gp(XI);
    GradedPoly series(Coeff::integers);
    for (int k = 0; k <= 3; ++k)
        series += GradedPoly::from_monomial(Monomial::power(XI, k), 1, Coeff::integers);
    CHECK(one_minus_xi.geometric_inverse(6) == series);

    CHECK(c(1).geometric_inverse(10) == c(1));

    const GradedPoly u = c(1) + gp(E1);
    GradedPoly expected = c(1) - gp(E1);
    expected += GradedPoly::from_monomial(Monomial::power(E1, 2), 1, Coeff::integers);
    CHECK(u.geometric_inverse(4) == expected);
    CHECK((u * u.geometric_inverse(4)).project_degrees(0, 4) == c(1));

    CHECK_THROWS_AS((void)(c(2) + gp(H)).geometric_inverse(4), Error);
    CHECK_THROWS_AS((void)GradedPoly::zero(Coeff::integers).geometric_inverse(4), Error);

    // -1 constant term is a unit over the integers
    const GradedPoly neg = c(-1) + gp(H);
    CHECK((neg * neg.geometric_inverse(8)).project_degrees(0, 8) == c(1));
}

TEST_CASE("exact_divide") {
    GradedPoly p = GradedPoly::from_monomial(Monomial::power(XI, 2), 1, Coeff::integers);
    p += gp(E1) * gp(XI);
    CHECK(p.exact_divide(XI) == gp(XI) + gp(E1));
    CHECK(GradedPoly::zero(Coeff::integers).exact_divide(XI).is_zero());

    try {
        (void)(c(1) + gp(XI)).exact_divide(XI);
        CHECK(false);
    } catch (const DivisionError& e) {
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
}

TEST_CASE("blow-up bracket is divisible by xi for formal bundles up to rank 6") {
    // sum_i e_i (1+xi)^{r-i} (1-xi) - sum_i e_i vanishes at xi = 0, so the
    // division is exact; the quotient times xi recovers the bracket.
    for (int r = 1; r <= 6; ++r) {
        std::vector<Generator> es;
        for (int i = 1; i <= r; ++i)
            es.push_back(Generator{"e" + std::to_string(i), 2 * i, "N"});
        const GradedPoly one_plus = c(1) + gp(XI);
        const GradedPoly one_minus = c(1) - gp(XI);
        GradedPoly acc(Coeff::integers);
        GradedPoly total = c(1);
        for (int i = 0; i <= r; ++i) {
            const GradedPoly ci =
                i == 0 ? c(1) : GradedPoly::generator(es[i - 1], Coeff::integers);
            acc += ci * one_plus.pow(r - i) * one_minus;
            if (i > 0) total += GradedPoly::generator(es[i - 1], Coeff::integers);
        }
        const GradedPoly bracket = acc - total;
        // oracle for divisibility: substituting xi -> 0 kills the bracket
        CHECK(bracket.map_generators({{XI, GradedPoly::zero(Coeff::integers)}}).is_zero());
        const GradedPoly q = bracket.exact_divide(XI);
        CHECK(q * gp(XI) == bracket);
    }
}

TEST_CASE("map_generators") {
    const GradedPoly h_sq = GradedPoly::from_monomial(Monomial::power(H, 2), 1, Coeff::integers);
    CHECK(h_sq.map_generators({{H, gp(HN)}}) ==
          GradedPoly::from_monomial(Monomial::power(HN, 2), 1, Coeff::integers));

    // Whitney in degree 2: c1(M) -> c1(N) + c1(E)
    const Generator C1M{"c1M", 2, "M"}, C1N{"c1N", 2, "N"};
    const GradedPoly image = GradedPoly::generator(C1N, Coeff::integers) + gp(E1);
    CHECK(GradedPoly::generator(C1M, Coeff::integers).map_generators({{C1M, image}}) == image);

    const GradedPoly p = c(3) + h_sq * gp(XI);
    CHECK(p.map_generators({}) == p);

    CHECK_THROWS_AS((void)h_sq.map_generators({{H, c(1) + gp(H)}}), DegreeError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20240809);
    for (int t = 0; t < 60; ++t) {
        const Coeff mode = t % 3 == 0 ? Coeff::mod2 : Coeff::integers;
        const GradedPoly a = random_poly(rng, mode);
        const GradedPoly b = random_poly(rng, mode);
        const GradedPoly d = random_poly(rng, mode);
        CHECK(a * b == b * a);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK((a + b) - b == a);
        if (mode == Coeff::mod2) CHECK((a + a).is_zero());
    }
}

TEST_CASE("degree homogeneity of products") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const GradedPoly a = random_poly(rng, Coeff::integers);
        const GradedPoly b = random_poly(rng, Coeff::integers);
        int da = 0, db = 0;
        const GradedPoly ha = a.is_homogeneous(&da) ? a : a.degree_part(a.max_degree());
        const GradedPoly hb = b.is_homogeneous(&db) ? b : b.degree_part(b.max_degree());
        ha.is_homogeneous(&da);
        hb.is_homogeneous(&db);
        const GradedPoly prod = ha * hb;
        int dp = 0;
        CHECK(prod.is_homogeneous(&dp));
        if (!prod.is_zero()) CHECK(dp == da + db);
    }
}

TEST_CASE("inverse and division round-trips on random data") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        GradedPoly u = random_poly(rng, Coeff::integers).project_degrees(
            0, GradedPoly::unbounded);
        u -= u.degree_part(0);
        u += c(1); // force a unit constant term
        const int hi = 8;
        CHECK((u * u.geometric_inverse(hi)).project_degrees(0, hi) == c(1));

        const GradedPoly q = random_poly(rng, Coeff::integers);
        const GradedPoly p = q * gp(XI);
        CHECK(p.exact_divide(XI) == q);
    }
}
