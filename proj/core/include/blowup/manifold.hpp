#pragma once

#include <map>
#include <memory>
#include <string>

#include "blowup/quotient_ring.hpp"

namespace blowup {

class ManifoldModel;

/// An element of H*(M) in Gysin-pair form u + i^!(v), where u lives in the
/// manifold ring and v in the submanifold ring. Concrete (presented) models
/// evaluate i^! through a table, so their elements always carry v = 0;
/// formal models keep v symbolic. Pairs are canonical: equality is
/// componentwise.
struct MElement {
    RingElement u;
    RingElement v;

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    friend bool operator==(const MElement&, const MElement&);
    friend bool operator!=(const MElement& a, const MElement& b) { return !(a == b); }
};

/// H*(M) together with the embedding data of N in M: the restriction
/// homomorphism i* (generator table), the Gysin pushforward i^! (monomial
/// table, or symbolic in formal mode), the total tangent class of M, and the
/// top class of the normal bundle. The product of Gysin pairs encodes the
/// projection formula and the self-intersection formula:
///
///   (u, v)(u', v') = (u u', v i*(u') + v' i*(u) + v v' c_r(E)).
///
/// Construction validates the tables: i* must respect the presentation of
/// H*(M); i^! must be defined on the whole monomial basis of H*(N), raise
/// degree by the codimension shift, satisfy the projection formula against
/// every generator, restrict by the self-intersection formula, and be
/// compatible with integration when both integrals exist.
class ManifoldModel {
public:
    using Ptr = std::shared_ptr<const ManifoldModel>;

    /// Concrete model: explicit i* and i^! tables.
    static Ptr presented(RingPresentation::Ptr m_ring,
                         RingPresentation::Ptr n_ring,
                         GradedPoly total_chern,
                         std::map<Generator, GradedPoly> i_star,
                         std::map<Monomial, GradedPoly> i_shriek,
                         int rank,
                         RingElement top_e);

    /// Formal model: H*(M) is a free formal ring whose generators are the
    /// components of c(M); i* of each generator is the matching degree part
    /// of `whitney_rhs` = c(N)c(E); i^! stays symbolic in the pair.
    static Ptr formal(RingPresentation::Ptr m_ring,
                      RingPresentation::Ptr n_ring,
                      GradedPoly total_chern,
                      RingElement whitney_rhs,
                      int rank,
                      RingElement top_e);

    bool is_formal() const { return formal_; }
    const RingPresentation::Ptr& m_ring() const { return m_ring_; }
    const RingPresentation::Ptr& n_ring() const { return n_ring_; }
    int rank() const { return rank_; }
    int shriek_shift() const { return shift_; }
    Coeff mode() const { return m_ring_->mode(); }
    const RingElement& top_e() const { return top_e_; }

    MElement zero() const;
    MElement one() const;
    MElement element(const GradedPoly& u) const;
    MElement make(RingElement u, RingElement v) const;

    MElement add(const MElement& a, const MElement& b) const;
    MElement sub(const MElement& a, const MElement& b) const;
    MElement neg(const MElement& a) const;
    MElement mul(const MElement& a, const MElement& b) const;
    MElement scaled(const MElement& a, const Int& k) const;
    MElement degree_part(const MElement& a, int d) const;

    /// i*(u + i^!(v)) = i*(u) + v c_r(E).
    RingElement i_star(const MElement& a) const;
    RingElement i_star_poly(const GradedPoly& u) const;

    /// i^!(beta) as an H*(M) element: table image in presented mode, the
    /// symbolic pair (0, beta) in formal mode.
    MElement i_shriek(const RingElement& beta) const;

    /// Total tangent class c(M) (or w(M)) as a pair.
    MElement total_chern() const;

    /// Fundamental-class evaluation; errors on formal models.
    Int integrate(const MElement& a) const;

private:
    ManifoldModel() = default;
    void validate_common() const;
    void validate_tables() const;

    bool formal_ = false;
    RingPresentation::Ptr m_ring_;
    RingPresentation::Ptr n_ring_;
    GradedPoly total_chern_{Coeff::integers};
    std::map<Generator, GradedPoly> i_star_;
    std::map<Monomial, GradedPoly> i_shriek_;
    int rank_ = 0;
    int shift_ = 0;
    RingElement top_e_;
};

} // namespace blowup
