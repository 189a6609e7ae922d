#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blowup/graded_poly.hpp"

namespace blowup {

/// One monic rewrite rule: lhs_generator^lhs_exponent -> rhs. The rhs must
/// be homogeneous of the lhs degree and involve the lhs generator only with
/// strictly smaller exponent.
struct RewriteRule {
    Generator lhs;
    int exponent = 0;
    GradedPoly rhs;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;

    std::string summary() const;
};

/// Degree cap on a subset of the generators: any monomial whose total degree
/// within `gens` exceeds `max_degree` reduces to zero. This is how a ring
/// extension remembers the dimension bound of its coefficient subring (the
/// bundle ring H*(N)[xi] keeps H*(N)-degrees capped at dim N even though its
/// own dimension is larger). Sound whenever no rewrite rule decreases the
/// capped degree.
struct SubspaceCap {
    std::set<Generator> gens;
    int max_degree = 0;
};

class RingElement;

/// A presented graded ring: a free polynomial ring modulo at most one
/// triangular monic rewrite rule per generator, truncated above a dimension
/// bound, optionally equipped with an integration functional on top-degree
/// normal-form monomials. Models H*(CP^n), H*(N), H*(P(E)) and the formal
/// rings of the calculus. Immutable once created; all operations are pure.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    using Ptr = std::shared_ptr<const RingPresentation>;

    /// Builds the presentation and runs full validation (shape of the rules,
    /// homogeneity, triangularity, desk-scale local confluence, integral
    /// table sanity). The report is stored; operations on a presentation
    /// whose report is not ok throw ValidationError.
    static Ptr create(std::string label,
                      Coeff mode,
                      std::vector<Generator> generators,
                      std::vector<RewriteRule> rules,
                      int dimension,
                      std::map<Monomial, Int> integrals = {},
                      std::vector<SubspaceCap> caps = {});

    const std::string& label() const { return label_; }
    Coeff mode() const { return mode_; }
    int dimension() const { return dimension_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::map<Generator, RewriteRule>& rules() const { return rules_; }
    const std::vector<SubspaceCap>& caps() const { return caps_; }
    bool has_integrals() const { return has_integrals_; }
    const std::map<Monomial, Int>& integrals() const { return integrals_; }
    const ValidationReport& validation() const { return report_; }

    const Generator* find_generator(const std::string& name) const;

    /// Unique normal form: rewrites until no rule applies, truncating every
    /// term above the dimension bound along the way.
    GradedPoly reduce(const GradedPoly& p) const;

    RingElement element(const GradedPoly& p) const;
    RingElement zero() const;
    RingElement one() const;
    RingElement gen(const std::string& name) const;
    RingElement constant(const Int& value) const;

    /// Evaluation against the fundamental class: sum of coefficient x table
    /// value over top-degree terms; lower degrees contribute nothing.
    Int integrate(const RingElement& x) const;

    /// All normal-form monomials of degree <= max_degree (exponents capped
    /// below each rule exponent and by the degree budget).
    std::vector<Monomial> basis(int max_degree) const;

private:
    RingPresentation() = default;

    enum class Strategy { first, last };
    bool capped(const Monomial& m) const;
    GradedPoly reduce_with(const GradedPoly& p, Strategy s) const;
    GradedPoly reduce_monomial(const Monomial& m, Strategy s,
                               std::map<Monomial, GradedPoly>& memo) const;
    const RewriteRule* applicable_rule(const Monomial& m, Strategy s) const;
    void validate();

    std::string label_;
    Coeff mode_ = Coeff::integers;
    std::vector<Generator> generators_;
    std::map<Generator, RewriteRule> rules_;
    int dimension_ = 0;
    std::map<Monomial, Int> integrals_;
    bool has_integrals_ = false;
    std::vector<SubspaceCap> caps_;
    ValidationReport report_;
};

/// Static validation of presentation data, as used by create(): generator
/// sanity, rule homogeneity and monicity, existence of a triangular order,
/// integral-table shape. create() additionally sweeps every monomial of
/// degree <= dimension through two reduction strategies (local confluence).
ValidationReport validate_presentation(Coeff mode,
                                       const std::vector<Generator>& generators,
                                       const std::map<Generator, RewriteRule>& rules,
                                       int dimension,
                                       const std::map<Monomial, Int>& integrals);

/// A fully reduced element of a presented ring. Arithmetic re-normalizes, so
/// values always satisfy the normal-form invariant and equality is literal.
class RingElement {
public:
    RingElement() = default;
    RingElement(RingPresentation::Ptr ring, GradedPoly value);

    const RingPresentation::Ptr& ring() const { return ring_; }
    const GradedPoly& value() const { return value_; }
    Coeff mode() const { return value_.mode(); }
    bool is_zero() const { return value_.is_zero(); }

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement scaled(const Int& k) const;
    RingElement pow(int n) const;
    RingElement degree_part(int d) const;

    std::string str() const { return value_.str(); }

    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

private:
    static void require_same_ring(const RingElement& a, const RingElement& b);

    RingPresentation::Ptr ring_;
    GradedPoly value_;
};

} // namespace blowup
