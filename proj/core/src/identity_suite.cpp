#include "blowup/identity_suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace blowup {

Int Rng::coefficient(Coeff mode) {
    if (mode == Coeff::mod2) return 1;
    const int magnitude = 1 + pick(9);
    return below(2) == 0 ? Int(magnitude) : Int(-magnitude);
}

RingElement random_element(const RingPresentation::Ptr& ring, Rng& rng, int max_terms) {
    const std::vector<Monomial> basis = ring->basis(ring->dimension());
    GradedPoly acc(ring->mode());
    const int terms = 1 + rng.pick(max_terms);
    for (int t = 0; t < terms; ++t) {
        const Monomial& m = basis[rng.pick(static_cast<int>(basis.size()))];
        acc += GradedPoly::from_monomial(m, rng.coefficient(ring->mode()), ring->mode());
    }
    return ring->element(acc);
}

RingElement random_homogeneous_of(const RingPresentation::Ptr& ring, Rng& rng, int degree,
                                  int max_terms) {
    std::vector<Monomial> layer;
    for (const auto& m : ring->basis(ring->dimension()))
        if (m.degree() == degree) layer.push_back(m);
    if (layer.empty()) return ring->zero();
    GradedPoly acc(ring->mode());
    const int terms = 1 + rng.pick(max_terms);
    for (int t = 0; t < terms; ++t) {
        const Monomial& m = layer[rng.pick(static_cast<int>(layer.size()))];
        acc += GradedPoly::from_monomial(m, rng.coefficient(ring->mode()), ring->mode());
    }
    return ring->element(acc);
}

RingElement random_homogeneous(const RingPresentation::Ptr& ring, Rng& rng, int max_terms) {
    std::vector<int> degrees;
    for (const auto& m : ring->basis(ring->dimension())) degrees.push_back(m.degree());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    const int d = degrees[rng.pick(static_cast<int>(degrees.size()))];
    return random_homogeneous_of(ring, rng, d, max_terms);
}

MElement random_m_element(const BlowupContext& ctx, Rng& rng) {
    const auto& model = *ctx.model();
    const int unit = degree_unit(ctx.mode());
    const int d = unit * rng.pick(model.m_ring()->dimension() / unit + 1);
    RingElement u = random_homogeneous_of(model.m_ring(), rng, d);
    RingElement v = model.is_formal()
                        ? random_homogeneous_of(model.n_ring(), rng, d - model.shriek_shift())
                        : model.n_ring()->zero();
    return model.make(std::move(u), std::move(v));
}

BlowupElement random_blowup_element(const BlowupContext& ctx, Rng& rng) {
    const auto& model = *ctx.model();
    const int unit = degree_unit(ctx.mode());
    const int d = unit * rng.pick(model.m_ring()->dimension() / unit + 1);
    BlowupElement x = ctx.zero();
    RingElement u = random_homogeneous_of(model.m_ring(), rng, d);
    RingElement v = model.is_formal()
                        ? random_homogeneous_of(model.n_ring(), rng, d - model.shriek_shift())
                        : model.n_ring()->zero();
    x.m_part = model.make(std::move(u), std::move(v));
    for (std::size_t j = 0; j < x.exc.size(); ++j)
        x.exc[j] = random_homogeneous_of(ctx.pe()->base(), rng,
                                         d - (static_cast<int>(j) + 1) * unit, 3);
    return x;
}

MElement random_i_star_kernel(const BlowupContext& ctx, Rng& rng) {
    const auto& model = *ctx.model();
    const int unit = degree_unit(ctx.mode());
    const int dim_n = model.n_ring()->dimension();
    const int dim_m = model.m_ring()->dimension();
    std::vector<int> degrees;
    for (int d = dim_n + unit; d <= dim_m; d += unit) degrees.push_back(d);
    if (degrees.empty()) return model.zero();
    const int d = degrees[rng.pick(static_cast<int>(degrees.size()))];
    return model.make(random_homogeneous_of(model.m_ring(), rng, d, 3),
                      model.n_ring()->zero());
}

namespace {

CheckReport run_trials(std::string name, int trials, std::uint64_t seed,
                       const std::function<bool(Rng&, std::string&)>& trial) {
    CheckReport rep;
    rep.name = std::move(name);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::string why;
        if (!trial(rng, why)) {
            rep.pass = false;
            rep.trials = t + 1;
            std::ostringstream os;
            os << "trial " << t << ": " << why;
            rep.counterexample = os.str();
            return rep;
        }
    }
    rep.trials = trials;
    return rep;
}

std::string sides(const BlowupContext& ctx, const BlowupElement& lhs,
                  const BlowupElement& rhs) {
    return "lhs = " + ctx.str(lhs) + "  rhs = " + ctx.str(rhs);
}

} // namespace

CheckReport check_projection_formula(const BlowupContext& ctx, int trials,
                                     std::uint64_t seed) {
    return run_trials("projection_formula", trials, seed,
                      [&ctx](Rng& rng, std::string& why) {
        const BlowupElement x = random_blowup_element(ctx, rng);
        const RingElement gamma = random_homogeneous(ctx.pe()->ring(), rng);
        const BlowupElement lhs = ctx.multiply(x, ctx.i_tilde_shriek(gamma));
        const BlowupElement rhs = ctx.i_tilde_shriek(ctx.i_tilde_pullback(x) * gamma);
        if (lhs == rhs) return true;
        why = "x = " + ctx.str(x) + ", gamma = " + gamma.str() + "; " +
              sides(ctx, lhs, rhs);
        return false;
    });
}

CheckReport check_self_intersection(const BlowupContext& ctx, int trials,
                                    std::uint64_t seed) {
    const auto& model = *ctx.model();
    // The y = 1 instances first: i*i^!(1) = c_r(E) and i~*(i~^!(1)) = -xi.
    {
        const RingElement lhs = model.i_star(model.i_shriek(model.n_ring()->one()));
        if (!(lhs == ctx.model()->top_e())) {
            CheckReport rep{"self_intersection", false, 0,
                            "i*i^!(1) = " + lhs.str() + " != c_r(E) = " +
                                ctx.model()->top_e().str()};
            return rep;
        }
        const RingElement blhs = ctx.i_tilde_pullback(ctx.exceptional_class());
        const RingElement brhs = -ctx.pe()->xi_element();
        if (!(blhs == brhs)) {
            CheckReport rep{"self_intersection", false, 0,
                            "i~*i~^!(1) = " + blhs.str() + " != -xi"};
            return rep;
        }
    }
    return run_trials("self_intersection", trials, seed,
                      [&ctx, &model](Rng& rng, std::string& why) {
        const RingElement y = random_homogeneous(model.n_ring(), rng);
        const RingElement lhs = model.i_star(model.i_shriek(y));
        const RingElement rhs = y * ctx.model()->top_e();
        if (!(lhs == rhs)) {
            why = "y = " + y.str() + "; i*i^!(y) = " + lhs.str() +
                  ", y c_r(E) = " + rhs.str();
            return false;
        }
        const RingElement gamma = random_homogeneous(ctx.pe()->ring(), rng);
        const RingElement blhs = ctx.i_tilde_pullback(ctx.i_tilde_shriek(gamma));
        const RingElement brhs = -(gamma * ctx.pe()->xi_element());
        if (!(blhs == brhs)) {
            why = "gamma = " + gamma.str() + "; i~*i~^!(gamma) = " + blhs.str() +
                  ", -gamma xi = " + brhs.str();
            return false;
        }
        return true;
    });
}

CheckReport check_formule_clef(const BlowupContext& ctx, int trials, std::uint64_t seed) {
    const auto& model = *ctx.model();
    const RingElement q_top = ctx.pe()->chern_Q_top();
    auto instance = [&](const RingElement& y, std::string& why) {
        const BlowupElement lhs = ctx.f_pullback(model.i_shriek(y));
        const BlowupElement rhs = ctx.i_tilde_shriek(ctx.pe()->pullback(y) * q_top);
        if (lhs == rhs) return true;
        why = "y = " + y.str() + "; " + sides(ctx, lhs, rhs);
        return false;
    };
    {
        std::string why;
        if (!instance(model.n_ring()->one(), why))
            return CheckReport{"formule_clef", false, 0, why};
    }
    return run_trials("formule_clef", trials, seed,
                      [&](Rng& rng, std::string& why) {
        return instance(random_homogeneous(model.n_ring(), rng), why);
    });
}

CheckReport check_lemma_y_xi(const BlowupContext& ctx, int trials, std::uint64_t seed) {
    return run_trials("lemma_y_xi", trials, seed,
                      [&ctx](Rng& rng, std::string& why) {
        const RingElement ybar = random_homogeneous(ctx.pe()->ring(), rng);
        const MElement a = random_i_star_kernel(ctx, rng);
        const BlowupElement ytilde =
            ctx.add(ctx.i_tilde_shriek(ybar), ctx.f_pullback(a));
        // Hypothesis of the lemma: i~*(y~) = -ybar xi.
        const RingElement restricted = ctx.i_tilde_pullback(ytilde);
        const RingElement expected = -(ybar * ctx.pe()->xi_element());
        if (!(restricted == expected)) {
            why = "construction broken: i~*(y~) = " + restricted.str() +
                  " != -ybar xi = " + expected.str();
            return false;
        }
        // Decompose and test that the residual restricts to zero.
        const BlowupElement lambda = ctx.sub(ytilde, ctx.i_tilde_shriek(ybar));
        const RingElement res = ctx.i_tilde_pullback(lambda);
        if (!res.is_zero()) {
            why = "residual restricts to " + res.str() + " != 0 (ybar = " +
                  ybar.str() + ")";
            return false;
        }
        return true;
    });
}

CheckReport check_ring_axioms(const BlowupContext& ctx, int trials, std::uint64_t seed) {
    return run_trials("ring_axioms", trials, seed,
                      [&ctx](Rng& rng, std::string& why) {
        const BlowupElement x = random_blowup_element(ctx, rng);
        const BlowupElement y = random_blowup_element(ctx, rng);
        const BlowupElement z = random_blowup_element(ctx, rng);
        if (ctx.multiply(x, y) != ctx.multiply(y, x)) {
            why = "commutativity: x = " + ctx.str(x) + ", y = " + ctx.str(y);
            return false;
        }
        const BlowupElement assoc_l = ctx.multiply(ctx.multiply(x, y), z);
        const BlowupElement assoc_r = ctx.multiply(x, ctx.multiply(y, z));
        if (assoc_l != assoc_r) {
            why = "associativity: " + sides(ctx, assoc_l, assoc_r);
            return false;
        }
        const BlowupElement dist_l = ctx.multiply(x, ctx.add(y, z));
        const BlowupElement dist_r = ctx.add(ctx.multiply(x, y), ctx.multiply(x, z));
        if (dist_l != dist_r) {
            why = "distributivity: " + sides(ctx, dist_l, dist_r);
            return false;
        }
        if (ctx.multiply(x, ctx.one()) != x) {
            why = "unit law: x = " + ctx.str(x);
            return false;
        }
        if (!ctx.multiply(x, ctx.zero()).is_zero()) {
            why = "zero law: x = " + ctx.str(x);
            return false;
        }
        return true;
    });
}

CheckReport check_tangent_restriction(const BlowupContext& ctx) {
    CheckReport rep{"tangent_restriction", true, 1, ""};
    const RingElement lhs = ctx.i_tilde_pullback(ctx.total_class());
    const RingElement c_pe =
        ctx.pe()->chern_total(ctx.pe()->base()->element(ctx.n_total_chern()));
    const RingElement one_minus_xi = ctx.pe()->ring()->one() - ctx.pe()->xi_element();
    const RingElement rhs = c_pe * one_minus_xi;
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.counterexample = "i~*c(M~) = " + lhs.str() + ", c(P(E))(1-xi) = " + rhs.str();
    }
    return rep;
}

CheckReport check_whitney_pullback(const BlowupContext& ctx) {
    CheckReport rep{"whitney_pullback", true, 1, ""};
    const RingElement lhs =
        ctx.i_tilde_pullback(ctx.f_pullback(ctx.model()->total_chern()));
    const RingElement rhs = ctx.pe()->ring()->element(
        ctx.n_total_chern() * ctx.pe()->total_e_poly());
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.counterexample = "i~*f*c(M) = " + lhs.str() + ", p*c(N)p*c(E) = " + rhs.str();
    }
    return rep;
}

CheckReport check_integration_invariance(const BlowupContext& ctx, int trials,
                                         std::uint64_t seed) {
    return run_trials("integration_invariance", trials, seed,
                      [&ctx](Rng& rng, std::string& why) {
        const MElement m = random_m_element(ctx, rng);
        const RingElement gamma = random_homogeneous(ctx.pe()->ring(), rng);
        const Int raw = ctx.integrate_pair(m, gamma);
        const BlowupElement canonical =
            ctx.add(ctx.f_pullback(m), ctx.i_tilde_shriek(gamma));
        const Int cooked = ctx.integrate(canonical);
        if (raw == cooked) return true;
        why = "gamma = " + gamma.str() + ": raw integral " + raw.str() +
              " != canonical integral " + cooked.str();
        return false;
    });
}

CheckReport check_special_cases(const BlowupContext& ctx) {
    CheckReport rep{"special_cases", true, 0, ""};
    const int r = ctx.rank();
    const int unit = degree_unit(ctx.mode());
    const BlowupElement defect = ctx.defect_class();

    // First class of the blow-up: the degree-unit defect is -(r-1) i~^!(1).
    {
        rep.trials += 1;
        const BlowupElement lhs = ctx.degree_part(defect, unit);
        const BlowupElement rhs = ctx.scaled(ctx.exceptional_class(), Int(-(r - 1)));
        if (lhs != rhs) {
            rep.pass = false;
            rep.counterexample = "first class defect: " + sides(ctx, lhs, rhs);
            return rep;
        }
    }

    // Point blow-up: defect = sum_{v=1}^r (C(r,v) - C(r,v-1)) eta^v with
    // eta = -i~^!(1).
    bool trivial_e = true;
    for (int i = 1; i <= r; ++i)
        if (!ctx.pe()->e_class(i).is_zero()) trivial_e = false;
    if (ctx.pe()->base()->dimension() == 0 && trivial_e) {
        rep.trials += 1;
        const BlowupElement eta = ctx.neg(ctx.exceptional_class());
        BlowupElement expected = ctx.zero();
        BlowupElement eta_pow = ctx.one();
        for (int v = 1; v <= r; ++v) {
            eta_pow = ctx.multiply(eta_pow, eta);
            expected = ctx.add(expected,
                               ctx.scaled(eta_pow, binomial(r, v) - binomial(r, v - 1)));
        }
        if (defect != expected) {
            rep.pass = false;
            rep.counterexample = "point blow-up defect: " + sides(ctx, defect, expected);
            return rep;
        }
    }

    // Codimension-2 center in a 6-manifold: the degree-4 class satisfies
    // c_2(M~) = f*(c_2(M) + i^!(1)) - f*c_1(M) . i~^!(1).
    if (ctx.mode() == Coeff::integers && r == 2 &&
        ctx.model()->m_ring()->dimension() == 6 &&
        ctx.model()->n_ring()->dimension() == 2) {
        rep.trials += 1;
        const auto& model = *ctx.model();
        const BlowupElement total = ctx.total_class();
        const BlowupElement lhs = ctx.degree_part(total, 4);
        const MElement c1 = model.degree_part(model.total_chern(), 2);
        const MElement c2 = model.degree_part(model.total_chern(), 4);
        const BlowupElement rhs = ctx.sub(
            ctx.f_pullback(model.add(c2, model.i_shriek(model.n_ring()->one()))),
            ctx.multiply(ctx.f_pullback(c1), ctx.exceptional_class()));
        if (lhs != rhs) {
            rep.pass = false;
            rep.counterexample = "second class formula: " + sides(ctx, lhs, rhs);
            return rep;
        }
    }
    return rep;
}

std::vector<CheckReport> run_all_checks(const BlowupContext& ctx, int trials,
                                        std::uint64_t seed) {
    std::vector<CheckReport> out;
    out.push_back(check_ring_axioms(ctx, trials, seed));
    out.push_back(check_projection_formula(ctx, trials, seed + 1));
    out.push_back(check_self_intersection(ctx, trials, seed + 2));
    out.push_back(check_formule_clef(ctx, trials, seed + 3));
    out.push_back(check_lemma_y_xi(ctx, trials, seed + 4));
    out.push_back(check_tangent_restriction(ctx));
    out.push_back(check_whitney_pullback(ctx));
    if (!ctx.model()->is_formal())
        out.push_back(check_integration_invariance(ctx, trials, seed + 5));
    out.push_back(check_special_cases(ctx));
    return out;
}

} // namespace blowup
