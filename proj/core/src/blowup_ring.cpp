#include "blowup/blowup_ring.hpp"

#include <sstream>

namespace blowup {

bool BlowupElement::is_zero() const {
    if (!m_part.is_zero()) return false;
    for (const auto& b : exc)
        if (!b.is_zero()) return false;
    return true;
}

BlowupContext::Ptr BlowupContext::create(ManifoldModel::Ptr model, ProjBundle::Ptr pe,
                                         GradedPoly n_total_chern) {
    if (!model || !pe) throw Error("blow-up context: null component");
    if (model->n_ring() != pe->base())
        throw Error("blow-up context: manifold model and bundle disagree on H*(N)");
    if (model->rank() != pe->rank())
        throw DimensionMismatchError("blow-up context: codimension rank differs between "
                                     "manifold model and normal bundle");
    if (!(model->top_e() == pe->e_class(pe->rank())))
        throw TableInconsistencyError("blow-up context: top normal class differs between "
                                      "manifold model and bundle data");
    if (n_total_chern.constant_term() != 1)
        throw ValidationError("blow-up context: c(N) has constant term != 1");

    auto ctx = std::shared_ptr<BlowupContext>(new BlowupContext());
    ctx->model_ = std::move(model);
    ctx->pe_ = std::move(pe);
    ctx->n_total_chern_ = std::move(n_total_chern);

    // Whitney consistency: i*c(M) = c(N)c(E), degree by degree.
    const RingElement lhs = ctx->model_->i_star(ctx->model_->total_chern());
    const RingElement rhs =
        ctx->pe_->base()->element(ctx->n_total_chern_ * ctx->pe_->total_e_poly());
    if (!(lhs == rhs)) {
        const GradedPoly diff = lhs.value() - rhs.value();
        std::ostringstream os;
        os << "Whitney consistency fails: i*c(M) != c(N)c(E) first at degree "
           << diff.min_degree() << " (i*c(M) = " << lhs.str() << ", c(N)c(E) = "
           << rhs.str() << ")";
        throw WhitneyViolationError(os.str());
    }
    return ctx;
}

BlowupElement BlowupContext::zero() const {
    BlowupElement x{model_->zero(), {}};
    x.exc.assign(static_cast<std::size_t>(rank() > 0 ? rank() - 1 : 0),
                 pe_->base()->zero());
    return x;
}

BlowupElement BlowupContext::one() const {
    BlowupElement x = zero();
    x.m_part = model_->one();
    return x;
}

BlowupElement BlowupContext::f_pullback(const MElement& a) const {
    BlowupElement x = zero();
    x.m_part = a;
    return x;
}

BlowupElement BlowupContext::f_pullback_poly(const GradedPoly& a) const {
    return f_pullback(model_->element(a));
}

BlowupElement BlowupContext::i_tilde_shriek(const RingElement& gamma) const {
    if (gamma.ring() != pe_->ring())
        throw Error("i~^!: argument does not live in H*(P(E))");
    const int r = rank();
    std::vector<RingElement> betas = pe_->expand_in_xi(gamma);
    BlowupElement out = zero();
    const RingElement top = betas[r - 1];
    if (!top.is_zero()) {
        // Formule clef: i~^!(p*(y) c_{r-1}(Q)) = f* i^!(y). Subtracting the
        // monic c_{r-1}(Q) multiple leaves xi-degree <= r-2.
        out.m_part = model_->i_shriek(top);
        const RingElement reduced = gamma - pe_->pullback(top) * pe_->chern_Q_top();
        betas = pe_->expand_in_xi(reduced);
    }
    for (int j = 0; j < r - 1; ++j) out.exc[j] = betas[j];
    return out;
}

RingElement BlowupContext::gamma_of(const BlowupElement& x) const {
    std::vector<RingElement> betas = x.exc;
    betas.resize(static_cast<std::size_t>(rank()), pe_->base()->zero());
    return pe_->from_xi_coeffs(betas);
}

RingElement BlowupContext::i_tilde_pullback(const BlowupElement& x) const {
    // i~* f* = p* i*, and i~* i~^!(g) = -g xi (the normal bundle of the
    // exceptional divisor has top class -xi).
    const RingElement from_m = pe_->pullback(model_->i_star(x.m_part));
    const RingElement from_exc = pe_->xi_element() * gamma_of(x);
    return from_m - from_exc;
}

BlowupElement BlowupContext::add(const BlowupElement& a, const BlowupElement& b) const {
    BlowupElement out = a;
    out.m_part = model_->add(a.m_part, b.m_part);
    for (std::size_t j = 0; j < out.exc.size(); ++j) out.exc[j] = a.exc[j] + b.exc[j];
    return out;
}

BlowupElement BlowupContext::sub(const BlowupElement& a, const BlowupElement& b) const {
    return add(a, neg(b));
}

BlowupElement BlowupContext::neg(const BlowupElement& a) const {
    BlowupElement out = a;
    out.m_part = model_->neg(a.m_part);
    for (auto& b : out.exc) b = -b;
    return out;
}

BlowupElement BlowupContext::scaled(const BlowupElement& a, const Int& k) const {
    BlowupElement out = a;
    out.m_part = model_->scaled(a.m_part, k);
    for (auto& b : out.exc) b = b.scaled(k);
    return out;
}

BlowupElement BlowupContext::multiply(const BlowupElement& a, const BlowupElement& b) const {
    // (f*(x) + i~^!(g))(f*(y) + i~^!(h))
    //   = f*(xy) + i~^!( p*i*(x) h + p*i*(y) g - xi g h )
    // by the projection formula and self-intersection; the shriek then
    // re-canonicalizes.
    const RingElement ga = gamma_of(a);
    const RingElement gb = gamma_of(b);
    const RingElement ia = pe_->pullback(model_->i_star(a.m_part));
    const RingElement ib = pe_->pullback(model_->i_star(b.m_part));
    const RingElement gamma = ia * gb + ib * ga - pe_->xi_element() * ga * gb;
    BlowupElement out = i_tilde_shriek(gamma);
    out.m_part = model_->add(out.m_part, model_->mul(a.m_part, b.m_part));
    return out;
}

BlowupElement BlowupContext::degree_part(const BlowupElement& a, int d) const {
    const int unit = degree_unit(mode());
    BlowupElement out = a;
    out.m_part = model_->degree_part(a.m_part, d);
    for (std::size_t j = 0; j < out.exc.size(); ++j)
        out.exc[j] = a.exc[j].degree_part(d - (static_cast<int>(j) + 1) * unit);
    return out;
}

Int BlowupContext::integrate(const BlowupElement& x) const {
    return integrate_pair(x.m_part, gamma_of(x));
}

Int BlowupContext::integrate_pair(const MElement& m, const RingElement& gamma) const {
    // integral over M~ of f*(m) + i~^!(gamma) = integral_M m + integral_N
    // (fiber pushforward of gamma); for canonical elements the second
    // summand vanishes.
    Int total = model_->integrate(m);
    const RingElement fiber = pe_->fiber_integrate(gamma);
    if (!fiber.is_zero()) total += pe_->base()->integrate(fiber);
    if (mode() == Coeff::mod2) {
        total %= 2;
        if (total < 0) total += 2;
    }
    return total;
}

GradedPoly BlowupContext::reduce_base_coeffs(const GradedPoly& p) const {
    const Generator& xi = pe_->xi();
    std::map<int, GradedPoly> buckets;
    for (const auto& [m, c] : p.terms()) {
        const int j = m.exponent(xi);
        auto [it, fresh] = buckets.try_emplace(j, GradedPoly::zero(mode()));
        it->second += GradedPoly::from_monomial(m.without_power(xi, j), c, mode());
    }
    GradedPoly out(mode());
    for (const auto& [j, coeff] : buckets)
        out += pe_->base()->reduce(coeff).times_monomial(Monomial::power(xi, j));
    return out;
}

GradedPoly BlowupContext::free_bracket() const {
    const int r = rank();
    const Generator& xi = pe_->xi();
    GradedPoly one = GradedPoly::constant(1, mode());
    GradedPoly xi_poly = GradedPoly::generator(xi, mode());
    const GradedPoly one_plus = one + xi_poly;
    const GradedPoly one_minus = one - xi_poly;
    GradedPoly acc(mode());
    for (int i = 0; i <= r; ++i) {
        const GradedPoly ci = i == 0 ? one : pe_->e_class(i).value();
        acc += ci * one_plus.pow(r - i) * one_minus;
    }
    acc -= pe_->total_e_poly();
    return reduce_base_coeffs(acc);
}

BlowupElement BlowupContext::defect_class() const {
    const Generator& xi = pe_->xi();
    const GradedPoly bracket = free_bracket();
    // The xi-free part of the bracket cancels identically (set xi = 0), so
    // the division is exact in the free ring.
    GradedPoly divided = bracket.exact_divide(xi);
    divided = reduce_base_coeffs(n_total_chern_ * divided);
    const RingElement gamma = pe_->ring()->element(divided);
    return i_tilde_shriek(-gamma);
}

BlowupElement BlowupContext::total_class() const {
    return add(f_pullback(model_->total_chern()), defect_class());
}

BlowupElement BlowupContext::chern_blowup() const {
    if (mode() != Coeff::integers)
        throw ModeMismatchError("chern_blowup requires an integer-mode context; "
                                "use sw_blowup for mod2");
    return total_class();
}

BlowupElement BlowupContext::sw_blowup() const {
    if (mode() != Coeff::mod2)
        throw ModeMismatchError("sw_blowup requires a mod2-mode context; "
                                "use chern_blowup over the integers");
    return total_class();
}

BlowupElement BlowupContext::exceptional_class() const {
    return i_tilde_shriek(pe_->ring()->one());
}

std::string BlowupContext::str(const BlowupElement& x) const {
    std::ostringstream os;
    bool wrote = false;
    if (!x.m_part.u.is_zero()) {
        os << "f*(" << x.m_part.u.str() << ")";
        wrote = true;
    }
    if (!x.m_part.v.is_zero()) {
        if (wrote) os << " + ";
        os << "f*i!(" << x.m_part.v.str() << ")";
        wrote = true;
    }
    for (std::size_t j = 0; j < x.exc.size(); ++j) {
        if (x.exc[j].is_zero()) continue;
        if (wrote) os << " + ";
        os << "i~!(p*(" << x.exc[j].str() << ")";
        if (j == 1) os << "*xi";
        if (j > 1) os << "*xi^" << j;
        os << ")";
        wrote = true;
    }
    if (!wrote) os << "0";
    return os.str();
}

} // namespace blowup
