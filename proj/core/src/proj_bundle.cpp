#include "blowup/proj_bundle.hpp"

#include <string>

namespace blowup {

ProjBundle::Ptr ProjBundle::create(RingPresentation::Ptr base,
                                   std::vector<RingElement> e_classes,
                                   std::string xi_name) {
    if (!base) throw Error("proj bundle: null base ring");
    if (e_classes.empty()) throw Error("proj bundle: rank must be at least 1");
    const Coeff mode = base->mode();
    const int unit = degree_unit(mode);
    const int r = static_cast<int>(e_classes.size());

    if (base->find_generator(xi_name))
        throw Error("proj bundle: base ring already owns a generator named " + xi_name);

    for (int i = 1; i <= r; ++i) {
        const RingElement& c = e_classes[i - 1];
        if (c.ring() != base) throw Error("proj bundle: c_" + std::to_string(i) +
                                          "(E) does not live in the base ring");
        int d = 0;
        if (!c.value().is_homogeneous(&d) || (!c.is_zero() && d != i * unit))
            throw DegreeError("proj bundle: c_" + std::to_string(i) +
                              "(E) is not homogeneous of degree " + std::to_string(i * unit));
    }

    auto pe = std::shared_ptr<ProjBundle>(new ProjBundle());
    pe->base_ = base;
    pe->e_classes_ = std::move(e_classes);
    pe->rank_ = r;
    pe->xi_ = Generator{std::move(xi_name), unit, "P(" + base->label() + ")"};

    // Fundamental relation: xi^r -> -(c_1 xi^{r-1} + ... + c_r).
    GradedPoly rhs(mode);
    for (int i = 1; i <= r; ++i)
        rhs += pe->e_classes_[i - 1].value().times_monomial(Monomial::power(pe->xi_, r - i));
    RewriteRule xi_rule{pe->xi_, r, -rhs};

    std::vector<Generator> gens = base->generators();
    gens.push_back(pe->xi_);
    std::vector<RewriteRule> rules;
    for (const auto& [g, rule] : base->rules()) rules.push_back(rule);
    rules.push_back(std::move(xi_rule));

    // Fiber integration: p*(b) xi^{r-1} integrates to the integral of b.
    std::map<Monomial, Int> integrals;
    if (base->has_integrals()) {
        const Monomial top_fiber = Monomial::power(pe->xi_, r - 1);
        for (const auto& [m, v] : base->integrals())
            integrals.emplace(m.times(top_fiber), v);
    }

    // The bundle ring is a free H*(N)-module on 1, xi, ..., xi^{r-1}: base
    // coefficients keep dying above dim N, independently of the larger total
    // dimension. The xi rule only raises base degrees, so the cap is sound.
    std::vector<SubspaceCap> caps = base->caps();
    caps.push_back(SubspaceCap{
        std::set<Generator>(base->generators().begin(), base->generators().end()),
        base->dimension()});

    pe->ring_ = RingPresentation::create("P(" + base->label() + ")", mode, std::move(gens),
                                         std::move(rules),
                                         base->dimension() + (r - 1) * unit,
                                         std::move(integrals), std::move(caps));
    if (!pe->ring_->validation().ok)
        throw ValidationError("proj bundle over " + base->label() + ": " +
                              pe->ring_->validation().summary());

    // Closed form c_{r-1}(Q) = xi^{r-1} + c_1(E) xi^{r-2} + ... + c_{r-1}(E).
    GradedPoly q_top(mode);
    q_top += GradedPoly::from_monomial(Monomial::power(pe->xi_, r - 1), 1, mode);
    for (int i = 1; i <= r - 1; ++i)
        q_top += pe->e_classes_[i - 1].value().times_monomial(Monomial::power(pe->xi_, r - 1 - i));
    pe->q_top_ = std::move(q_top);

    return pe;
}

RingElement ProjBundle::e_class(int i) const {
    if (i == 0) return base_->one();
    if (i < 0 || i > rank_) return base_->zero();
    return e_classes_[i - 1];
}

GradedPoly ProjBundle::total_e_poly() const {
    GradedPoly total = GradedPoly::constant(1, base_->mode());
    for (const auto& c : e_classes_) total += c.value();
    return total;
}

RingElement ProjBundle::pullback(const RingElement& base_elem) const {
    if (base_elem.ring() != base_)
        throw Error("proj bundle pullback: element does not live in the base ring");
    return ring_->element(base_elem.value());
}

RingElement ProjBundle::xi_element() const {
    return ring_->element(GradedPoly::generator(xi_, base_->mode()));
}

RingElement ProjBundle::xi_power(int j) const {
    return ring_->element(GradedPoly::from_monomial(Monomial::power(xi_, j), 1, base_->mode()));
}

std::vector<RingElement> ProjBundle::expand_in_xi(const RingElement& gamma) const {
    if (gamma.ring() != ring_)
        throw Error("expand_in_xi: element does not live in the bundle ring");
    std::vector<GradedPoly> coeffs(rank_, GradedPoly::zero(base_->mode()));
    for (const auto& [m, c] : gamma.value().terms()) {
        const int j = m.exponent(xi_);
        // Normal forms never reach xi^r.
        coeffs.at(j) += GradedPoly::from_monomial(m.without_power(xi_, j), c, base_->mode());
    }
    std::vector<RingElement> out;
    out.reserve(rank_);
    for (auto& p : coeffs) out.push_back(base_->element(p));
    return out;
}

RingElement ProjBundle::from_xi_coeffs(const std::vector<RingElement>& betas) const {
    GradedPoly acc(base_->mode());
    for (std::size_t j = 0; j < betas.size(); ++j) {
        if (betas[j].ring() != base_)
            throw Error("from_xi_coeffs: coefficient does not live in the base ring");
        acc += betas[j].value().times_monomial(Monomial::power(xi_, static_cast<int>(j)));
    }
    return ring_->element(acc);
}

RingElement ProjBundle::fiber_integrate(const RingElement& gamma) const {
    return expand_in_xi(gamma)[rank_ - 1];
}

RingElement ProjBundle::chern_Q() const {
    // p*c(E) = c(Q)(1 - xi), so c(Q) is the series inverse of (1 - xi)
    // against p*c(E), reduced in the bundle ring. Components above degree
    // (r-1)*unit cancel through the fundamental relation.
    const Coeff mode = base_->mode();
    GradedPoly one_minus_xi = GradedPoly::constant(1, mode);
    one_minus_xi -= GradedPoly::generator(xi_, mode);
    GradedPoly inv = one_minus_xi.geometric_inverse(ring_->dimension());
    return ring_->element(total_e_poly() * inv);
}

RingElement ProjBundle::chern_Q_top() const {
    return ring_->element(q_top_);
}

RingElement ProjBundle::chern_vertical() const {
    const Coeff mode = base_->mode();
    GradedPoly one_plus_xi = GradedPoly::constant(1, mode);
    one_plus_xi += GradedPoly::generator(xi_, mode);
    GradedPoly acc(mode);
    for (int i = 0; i <= rank_; ++i)
        acc += e_class(i).value() * one_plus_xi.pow(rank_ - i);
    return ring_->element(acc);
}

RingElement ProjBundle::chern_total(const RingElement& total_chern_base) const {
    return chern_vertical() * pullback(total_chern_base);
}

} // namespace blowup
