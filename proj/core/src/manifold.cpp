#include "blowup/manifold.hpp"

#include <sstream>

namespace blowup {

bool operator==(const MElement& a, const MElement& b) {
    return a.u == b.u && a.v == b.v;
}

ManifoldModel::Ptr ManifoldModel::presented(RingPresentation::Ptr m_ring,
                                            RingPresentation::Ptr n_ring,
                                            GradedPoly total_chern,
                                            std::map<Generator, GradedPoly> i_star,
                                            std::map<Monomial, GradedPoly> i_shriek,
                                            int rank,
                                            RingElement top_e) {
    auto m = std::shared_ptr<ManifoldModel>(new ManifoldModel());
    m->formal_ = false;
    m->m_ring_ = std::move(m_ring);
    m->n_ring_ = std::move(n_ring);
    m->total_chern_ = std::move(total_chern);
    m->i_star_ = std::move(i_star);
    m->i_shriek_ = std::move(i_shriek);
    m->rank_ = rank;
    m->shift_ = rank * degree_unit(m->m_ring_->mode());
    m->top_e_ = std::move(top_e);
    m->validate_common();
    m->validate_tables();
    return m;
}

ManifoldModel::Ptr ManifoldModel::formal(RingPresentation::Ptr m_ring,
                                         RingPresentation::Ptr n_ring,
                                         GradedPoly total_chern,
                                         RingElement whitney_rhs,
                                         int rank,
                                         RingElement top_e) {
    auto m = std::shared_ptr<ManifoldModel>(new ManifoldModel());
    m->formal_ = true;
    m->m_ring_ = std::move(m_ring);
    m->n_ring_ = std::move(n_ring);
    m->total_chern_ = std::move(total_chern);
    m->rank_ = rank;
    m->shift_ = rank * degree_unit(m->m_ring_->mode());
    m->top_e_ = std::move(top_e);
    // Restriction of the formal tangent classes, forced by Whitney:
    // i*(c_i(M)) is the degree-matching part of c(N)c(E).
    for (const auto& g : m->m_ring_->generators())
        m->i_star_.emplace(g, whitney_rhs.value().degree_part(g.degree));
    m->validate_common();
    return m;
}

void ManifoldModel::validate_common() const {
    if (m_ring_->mode() != n_ring_->mode())
        throw ModeMismatchError("manifold model: M and N coefficient modes differ");
    if (rank_ < 1) throw DimensionMismatchError("manifold model: codimension rank < 1");
    if (m_ring_->dimension() != n_ring_->dimension() + shift_) {
        std::ostringstream os;
        os << "dimension equation violated: dim M = " << m_ring_->dimension()
           << " but dim N + codim = " << n_ring_->dimension() + shift_;
        throw DimensionMismatchError(os.str());
    }
    if (top_e_.ring() != n_ring_)
        throw TableInconsistencyError("manifold model: top normal class not in H*(N)");

    if (total_chern_.constant_term() != 1)
        throw ValidationError("manifold model: total tangent class has constant term != 1");
    m_ring_->reduce(total_chern_); // foreign-generator and mode check

    for (const auto& g : m_ring_->generators()) {
        auto it = i_star_.find(g);
        if (it == i_star_.end())
            throw TableInconsistencyError("i* table missing generator " + g.name);
        int d = 0;
        if (!it->second.is_homogeneous(&d) || (!it->second.is_zero() && d != g.degree))
            throw TableInconsistencyError("i*(" + g.name + ") is not homogeneous of degree " +
                                          std::to_string(g.degree));
        n_ring_->reduce(it->second);
    }
    // i* must respect the presentation of H*(M): map both sides of every
    // rule and compare normal forms in H*(N).
    for (const auto& [g, rule] : m_ring_->rules()) {
        const GradedPoly lhs = i_star_poly(
            GradedPoly::from_monomial(Monomial::power(g, rule.exponent), 1, mode())).value();
        const GradedPoly rhs = i_star_poly(rule.rhs).value();
        if (!(lhs == rhs))
            throw TableInconsistencyError("i* does not respect the relation " + g.name + "^" +
                                          std::to_string(rule.exponent) + " in H*(M)");
    }
}

void ManifoldModel::validate_tables() const {
    // i^! must cover the monomial basis of H*(N) and raise degree by the
    // codimension shift.
    for (const Monomial& m : n_ring_->basis(n_ring_->dimension())) {
        auto it = i_shriek_.find(m);
        if (it == i_shriek_.end())
            throw TableInconsistencyError("i^! table missing basis monomial " + m.str());
        int d = 0;
        if (!it->second.is_homogeneous(&d) ||
            (!it->second.is_zero() && d != m.degree() + shift_))
            throw TableInconsistencyError("i^!(" + m.str() + ") does not raise degree by " +
                                          std::to_string(shift_));
        m_ring_->reduce(it->second);
    }

    // Projection formula on the tables: i^!(b . i*(a)) = i^!(b) . a for every
    // basis monomial b and generator a, plus the self-intersection formula
    // i*(i^!(b)) = b c_r(E) and integration compatibility.
    for (const Monomial& mono : n_ring_->basis(n_ring_->dimension())) {
        const RingElement beta = n_ring_->element(GradedPoly::from_monomial(mono, 1, mode()));
        const MElement shrieked = i_shriek(beta);
        for (const auto& g : m_ring_->generators()) {
            const MElement a = element(GradedPoly::generator(g, mode()));
            const MElement lhs = i_shriek(beta * i_star(a));
            const MElement rhs = mul(shrieked, a);
            if (!(lhs == rhs))
                throw TableInconsistencyError(
                    "projection formula fails on i^!(" + mono.str() + " * i*(" + g.name +
                    ")): " + lhs.u.str() + " vs " + rhs.u.str());
        }
        const RingElement restricted = i_star(shrieked);
        const RingElement expected = beta * top_e_;
        if (!(restricted == expected))
            throw TableInconsistencyError("self-intersection fails on i^!(" + mono.str() +
                                          "): i*i^! gives " + restricted.str() +
                                          ", expected " + expected.str());
        if (m_ring_->has_integrals() && n_ring_->has_integrals() &&
            mono.degree() == n_ring_->dimension()) {
            if (m_ring_->integrate(shrieked.u) != n_ring_->integrate(beta))
                throw TableInconsistencyError("integration incompatibility at i^!(" +
                                              mono.str() + ")");
        }
    }
}

MElement ManifoldModel::zero() const { return {m_ring_->zero(), n_ring_->zero()}; }

MElement ManifoldModel::one() const { return {m_ring_->one(), n_ring_->zero()}; }

MElement ManifoldModel::element(const GradedPoly& u) const {
    return {m_ring_->element(u), n_ring_->zero()};
}

MElement ManifoldModel::make(RingElement u, RingElement v) const {
    if (u.ring() != m_ring_ || v.ring() != n_ring_)
        throw Error("manifold element components live in the wrong rings");
    if (!formal_ && !v.is_zero())
        throw Error("presented manifold models carry no symbolic shriek part");
    return {std::move(u), std::move(v)};
}

MElement ManifoldModel::add(const MElement& a, const MElement& b) const {
    return {a.u + b.u, a.v + b.v};
}

MElement ManifoldModel::sub(const MElement& a, const MElement& b) const {
    return {a.u - b.u, a.v - b.v};
}

MElement ManifoldModel::neg(const MElement& a) const { return {-a.u, -a.v}; }

MElement ManifoldModel::mul(const MElement& a, const MElement& b) const {
    const RingElement u = a.u * b.u;
    RingElement v = n_ring_->zero();
    if (!a.v.is_zero() || !b.v.is_zero()) {
        v = a.v * i_star_poly(b.u.value()) + b.v * i_star_poly(a.u.value()) +
            a.v * b.v * top_e_;
    }
    return {u, v};
}

MElement ManifoldModel::scaled(const MElement& a, const Int& k) const {
    return {a.u.scaled(k), a.v.scaled(k)};
}

MElement ManifoldModel::degree_part(const MElement& a, int d) const {
    return {a.u.degree_part(d), a.v.degree_part(d - shift_)};
}

RingElement ManifoldModel::i_star_poly(const GradedPoly& u) const {
    return n_ring_->element(u.map_generators(i_star_));
}

RingElement ManifoldModel::i_star(const MElement& a) const {
    RingElement out = i_star_poly(a.u.value());
    if (!a.v.is_zero()) out = out + a.v * top_e_;
    return out;
}

MElement ManifoldModel::i_shriek(const RingElement& beta) const {
    if (beta.ring() != n_ring_)
        throw Error("i^!: argument does not live in H*(N)");
    if (formal_) return {m_ring_->zero(), beta};
    GradedPoly acc(mode());
    for (const auto& [m, c] : beta.value().terms()) {
        auto it = i_shriek_.find(m);
        if (it == i_shriek_.end())
            throw TableInconsistencyError("i^! table missing monomial " + m.str());
        acc += it->second.scaled(c);
    }
    return {m_ring_->element(acc), n_ring_->zero()};
}

MElement ManifoldModel::total_chern() const {
    return {m_ring_->element(total_chern_), n_ring_->zero()};
}

Int ManifoldModel::integrate(const MElement& a) const {
    if (formal_)
        throw IntegrationError("formal manifold models have no integration functional");
    Int total = m_ring_->integrate(a.u);
    if (!a.v.is_zero()) total += n_ring_->integrate(a.v);
    return total;
}

} // namespace blowup
