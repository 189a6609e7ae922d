#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blowup/blowup_ring.hpp"

namespace blowup {

/// Result of one identity check. All comparisons in the suite are exact
/// (integer or mod-2 equality, tolerance identically zero); a failing check
/// always carries a counterexample with both sides printed verbatim.
struct CheckReport {
    std::string name;
    bool pass = true;
    int trials = 0;
    std::string counterexample;
};

/// Deterministic random source. Bounded draws use plain modular reduction so
/// the sequence is identical on every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
    int pick(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    /// Nonzero coefficient of magnitude <= 9 (1 in mod2 mode).
    Int coefficient(Coeff mode);

private:
    std::mt19937_64 eng_;
};

/// Random fully-reduced element with at most `max_terms` terms drawn from
/// the monomial basis of the ring (degrees mixed).
RingElement random_element(const RingPresentation::Ptr& ring, Rng& rng, int max_terms = 5);

/// Degree-homogeneous random element: a random degree with nonempty basis.
/// The identity checks draw homogeneous elements only.
RingElement random_homogeneous(const RingPresentation::Ptr& ring, Rng& rng, int max_terms = 5);

/// Homogeneous element of the given degree (zero when the degree is empty).
RingElement random_homogeneous_of(const RingPresentation::Ptr& ring, Rng& rng, int degree,
                                  int max_terms = 5);

/// Homogeneous as a class: in formal models the symbolic part sits
/// `shriek_shift` below the manifold part.
MElement random_m_element(const BlowupContext& ctx, Rng& rng);

/// Homogeneous canonical class: every component matches one class degree.
BlowupElement random_blowup_element(const BlowupContext& ctx, Rng& rng);

/// Random H*(M) element in the kernel of i* (drawn from basis monomials of
/// degree above dim N, which restrict to zero).
MElement random_i_star_kernel(const BlowupContext& ctx, Rng& rng);

// Identity checks. Each is deterministic given (ctx, trials, seed).

/// x . i~^!(g) = i~^!( i~*(x) g ), both sides through independent code paths.
CheckReport check_projection_formula(const BlowupContext& ctx, int trials, std::uint64_t seed);

/// i*(i^!(y)) = y c_r(E) in H*(N) and i~*(i~^!(g)) = -g xi on the blow-up.
CheckReport check_self_intersection(const BlowupContext& ctx, int trials, std::uint64_t seed);

/// f* i^!(y) = i~^!( p*(y) c_{r-1}(Q) ) as canonical forms.
CheckReport check_formule_clef(const BlowupContext& ctx, int trials, std::uint64_t seed);

/// For y~ with i~*(y~) = -y xi, the residual y~ - i~^!(y) restricts to zero.
CheckReport check_lemma_y_xi(const BlowupContext& ctx, int trials, std::uint64_t seed);

/// Commutativity, associativity, distributivity, units on random elements.
CheckReport check_ring_axioms(const BlowupContext& ctx, int trials, std::uint64_t seed);

/// i~* c(M~) = c(P(E)) (1 - xi).
CheckReport check_tangent_restriction(const BlowupContext& ctx);

/// i~* f* c(M) = p*c(N) p*c(E).
CheckReport check_whitney_pullback(const BlowupContext& ctx);

/// Integration of raw Gysin pairs agrees with integration after
/// canonicalization (concrete contexts only).
CheckReport check_integration_invariance(const BlowupContext& ctx, int trials,
                                         std::uint64_t seed);

/// The closed-form special cases that apply to the context: the first-class
/// defect -(r-1) i~^!(1) always; the binomial defect formula for point
/// blow-ups; the degree-4 formula for codimension-2 centers in dimension 6.
CheckReport check_special_cases(const BlowupContext& ctx);

/// Every applicable check, in a fixed order.
std::vector<CheckReport> run_all_checks(const BlowupContext& ctx, int trials,
                                        std::uint64_t seed);

} // namespace blowup
