#pragma once

#include <memory>
#include <vector>

#include "blowup/quotient_ring.hpp"

namespace blowup {

/// H*(P(E)) for a rank-r bundle E over a base N, presented as the base ring
/// extended by the hyperplane class xi modulo the fundamental relation
///
///     xi^r + c_1(E) xi^{r-1} + ... + c_r(E) = 0.
///
/// Every element has a unique expansion sum_j p*(b_j) xi^j with j < r and
/// b_j in H*(N); fiber integration reads off the xi^{r-1} coefficient. The
/// derived classes of the quotient bundle Q = p*E/l and the vertical bundle
/// V = ker Tp are provided, each computable two ways as a built-in
/// cross-check:
///
///   c(Q)      from p*c(E) = c(Q)(1 - xi) by series inversion,
///   c_{r-1}(Q) in closed form xi^{r-1} + c_1(E) xi^{r-2} + ... + c_{r-1}(E),
///   c(V)      = sum_i c_i(E) (1 + xi)^{r-i},
///   c(P(E))   = c(V) p*c(N).
///
/// In mod2 mode xi has degree 1, r is the real rank, and the same formulas
/// compute Stiefel-Whitney classes.
class ProjBundle {
public:
    using Ptr = std::shared_ptr<const ProjBundle>;

    /// e_classes = [c_1(E), ..., c_r(E)] as base ring elements, c_i
    /// homogeneous of degree i*unit (zero allowed). c_0(E) = 1 implicitly.
    static Ptr create(RingPresentation::Ptr base,
                      std::vector<RingElement> e_classes,
                      std::string xi_name = "xi");

    const RingPresentation::Ptr& base() const { return base_; }
    const RingPresentation::Ptr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const Generator& xi() const { return xi_; }

    /// c_i(E) as a base element; i = 0 gives 1, i in [1, r] the stored
    /// classes, i > r zero.
    RingElement e_class(int i) const;
    /// Total class 1 + c_1(E) + ... + c_r(E) as a base-ring polynomial.
    GradedPoly total_e_poly() const;

    RingElement pullback(const RingElement& base_elem) const; // p*
    RingElement xi_element() const;
    RingElement xi_power(int j) const;

    /// Unique coefficients [b_0, ..., b_{r-1}] with gamma = sum p*(b_j) xi^j.
    std::vector<RingElement> expand_in_xi(const RingElement& gamma) const;
    RingElement from_xi_coeffs(const std::vector<RingElement>& betas) const;

    /// Pushforward along p: the xi^{r-1} coefficient of the expansion.
    RingElement fiber_integrate(const RingElement& gamma) const;

    RingElement chern_Q() const;
    RingElement chern_Q_top() const;
    RingElement chern_vertical() const;
    RingElement chern_total(const RingElement& total_chern_base) const;

private:
    ProjBundle() = default;

    RingPresentation::Ptr base_;
    RingPresentation::Ptr ring_;
    std::vector<RingElement> e_classes_;
    Generator xi_;
    int rank_ = 0;
    GradedPoly q_top_; // cached c_{r-1}(Q) polynomial
};

} // namespace blowup
