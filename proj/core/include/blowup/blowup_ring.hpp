#pragma once

#include <memory>
#include <vector>

#include "blowup/manifold.hpp"
#include "blowup/proj_bundle.hpp"

namespace blowup {

/// A class on the blow-up in canonical Gysin-pair form
///
///     f*(m_part) + sum_{j=0}^{r-2} i~^!( p*(exc[j]) xi^j ),
///
/// with m_part in H*(M) and exc[j] in H*(N). The xi^{r-1} component is
/// always eliminated by the formule-clef rewrite, which makes the
/// representation unique; equality is componentwise.
struct BlowupElement {
    MElement m_part;
    std::vector<RingElement> exc;

    friend bool operator==(const BlowupElement& a, const BlowupElement& b) {
        return a.m_part == b.m_part && a.exc == b.exc;
    }
    friend bool operator!=(const BlowupElement& a, const BlowupElement& b) {
        return !(a == b);
    }
    bool is_zero() const;
};

/// The cohomology of the blow-up of M along N with normal bundle E, driven
/// entirely by the maps of the blow-up square (f, i, p, i~). Construction
/// validates the Whitney consistency i*c(M) = c(N)c(E) and the dimension
/// equation. All operations are pure; contexts are immutable and freely
/// shareable.
///
/// The ring structure is forced by three facts:
///   projection formula    x . i~^!(g) = i~^!( i~*(x) g ),
///   self-intersection     i~*(i~^!(g)) = -g xi,
///   formule clef          f* i^!(y) = i~^!( p*(y) c_{r-1}(Q) ),
/// the last of which is used as the canonicalization rewrite that removes
/// xi^{r-1} components. The total tangent class of the blow-up is computed
/// by the blow-up formula
///
///   c(M~) - f*c(M) = -i~^![ p*c(N) (1/xi)( sum_i p*c_i(E)(1+xi)^{r-i}(1-xi)
///                                           - p*c(E) ) ],
///
/// where the division by xi happens in the free ring H*(N)[xi] before the
/// fundamental relation is applied (xi is a zero divisor afterwards).
class BlowupContext {
public:
    using Ptr = std::shared_ptr<const BlowupContext>;

    static Ptr create(ManifoldModel::Ptr model, ProjBundle::Ptr pe,
                      GradedPoly n_total_chern);

    const ManifoldModel::Ptr& model() const { return model_; }
    const ProjBundle::Ptr& pe() const { return pe_; }
    int rank() const { return pe_->rank(); }
    Coeff mode() const { return model_->mode(); }
    const GradedPoly& n_total_chern() const { return n_total_chern_; }
    /// dim of the blow-up (= dim M).
    int dimension() const { return model_->m_ring()->dimension(); }

    BlowupElement zero() const;
    BlowupElement one() const;

    BlowupElement f_pullback(const MElement& a) const;
    BlowupElement f_pullback_poly(const GradedPoly& a) const;

    /// i~^! with built-in canonicalization: any xi^{r-1} mass moves into the
    /// m_part through the formule clef.
    BlowupElement i_tilde_shriek(const RingElement& gamma) const;

    /// i~*: restriction to the exceptional divisor, an element of H*(P(E)).
    RingElement i_tilde_pullback(const BlowupElement& x) const;

    /// The full exceptional sum sum_j p*(exc[j]) xi^j as a P(E) element.
    RingElement gamma_of(const BlowupElement& x) const;

    BlowupElement add(const BlowupElement& a, const BlowupElement& b) const;
    BlowupElement sub(const BlowupElement& a, const BlowupElement& b) const;
    BlowupElement neg(const BlowupElement& a) const;
    BlowupElement scaled(const BlowupElement& a, const Int& k) const;
    BlowupElement multiply(const BlowupElement& a, const BlowupElement& b) const;
    BlowupElement degree_part(const BlowupElement& a, int d) const;

    Int integrate(const BlowupElement& x) const;
    /// Integration of a raw (possibly non-canonical) Gysin pair
    /// f*(m) + i~^!(gamma); used to verify invariance under canonicalization.
    Int integrate_pair(const MElement& m, const RingElement& gamma) const;

    /// The defect class c(M~) - f*c(M) (resp. the w analogue).
    BlowupElement defect_class() const;
    /// Total tangent class of the blow-up; integer mode only.
    BlowupElement chern_blowup() const;
    /// Total Stiefel-Whitney class of the blow-up; mod2 mode only.
    BlowupElement sw_blowup() const;
    /// Mode-agnostic total class (shared pipeline of the two above).
    BlowupElement total_class() const;

    /// i~^!(1), the Poincare dual of the exceptional divisor.
    BlowupElement exceptional_class() const;

    /// The bracket sum_i c_i(E)(1+xi)^{r-i}(1-xi) - c(E) in the free ring
    /// H*(N)[xi], before division by xi. Exposed for verification.
    GradedPoly free_bracket() const;

    /// Canonical rendering "f*(u) + f*i!(v) + i~!(p*(b_j)*xi^j) + ...".
    std::string str(const BlowupElement& x) const;

private:
    BlowupContext() = default;

    /// N-normalizes the coefficients of a polynomial in H*(N)[xi] while
    /// leaving xi untouched (no fundamental relation, no total-degree cut).
    GradedPoly reduce_base_coeffs(const GradedPoly& p) const;

    ManifoldModel::Ptr model_;
    ProjBundle::Ptr pe_;
    GradedPoly n_total_chern_{Coeff::integers};
};

} // namespace blowup
