#pragma once

#include <compare>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blowup/coeff.hpp"
#include "blowup/errors.hpp"

namespace blowup {

/// A named multiplicative generator of a graded ring, with its cohomological
/// degree and a tag naming the space whose ring owns the symbol. (name,
/// space) pairs are unique within a computation; the degree rides along so
/// monomial grading needs no external lookup.
struct Generator {
    std::string name;
    int degree = 0;
    std::string space;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A commutative power product of generators. Factors are kept sorted by
/// generator with strictly positive exponents; the total cohomological
/// degree is cached. The empty product is the unit monomial of degree 0.
class Monomial {
public:
    using Factor = std::pair<Generator, int>;

    Monomial() = default;

    static Monomial unit() { return Monomial(); }
    static Monomial power(const Generator& g, int exponent);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }

    int exponent(const Generator& g) const;
    bool divisible_by(const Generator& g, int exponent) const;

    Monomial times(const Monomial& other) const;
    /// Removes exponent `e` from generator `g` (which must divide).
    Monomial without_power(const Generator& g, int e) const;

    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

    /// Graded lexicographic order: total degree first, then the factor
    /// sequence. Deterministic, so term maps iterate in a canonical order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.factors_ <=> b.factors_;
    }

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Sparse multivariate polynomial with exact coefficients, graded by the
/// cohomological degree of its monomials. The canonical invariant: no zero
/// coefficient is ever stored, each monomial appears at most once, and in
/// mod2 mode every stored coefficient is 1. Equality is therefore decidable
/// by term-map comparison. Values are immutable in spirit: every operation
/// returns a fresh polynomial and the type is freely shareable across
/// threads.
class GradedPoly {
public:
    static constexpr int unbounded = std::numeric_limits<int>::max();

    explicit GradedPoly(Coeff mode = Coeff::integers) : mode_(mode) {}

    static GradedPoly zero(Coeff mode) { return GradedPoly(mode); }
    static GradedPoly constant(Int value, Coeff mode);
    static GradedPoly generator(const Generator& g, Coeff mode);
    static GradedPoly from_monomial(const Monomial& m, Int coeff, Coeff mode);

    Coeff mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient(Monomial::unit()); }

    /// Largest (resp. smallest) monomial degree present; 0 for the zero
    /// polynomial.
    int max_degree() const;
    int min_degree() const;

    /// True when all terms share one degree; the zero polynomial is
    /// homogeneous of every degree. On success stores that degree (0 if
    /// zero) into `degree_out` when given.
    bool is_homogeneous(int* degree_out = nullptr) const;

    std::set<Generator> generators_used() const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    GradedPoly& operator*=(const GradedPoly& rhs);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

    GradedPoly scaled(const Int& k) const;
    GradedPoly times_monomial(const Monomial& m, const Int& coeff = 1) const;
    GradedPoly pow(int n) const;

    /// Keeps exactly the terms with lo <= degree <= hi.
    GradedPoly project_degrees(int lo, int hi) const;
    GradedPoly degree_part(int d) const { return project_degrees(d, d); }

    /// Multiplicative inverse up to degree `hi`: requires a unit constant
    /// term (1, or -1 in integer mode); returns v with (u*v) projected to
    /// degrees [0, hi] equal to 1. Truncated geometric series.
    GradedPoly geometric_inverse(int hi) const;

    /// Exact division by a generator in the free ring: every monomial must
    /// carry the factor, otherwise a DivisionError names the offender.
    GradedPoly exact_divide(const Generator& g) const;

    /// Substitution homomorphism. Each assigned image must be homogeneous of
    /// the source generator's degree (the zero polynomial qualifies);
    /// generators absent from the assignment map to themselves.
    GradedPoly map_generators(const std::map<Generator, GradedPoly>& assignment) const;

    std::string str() const;

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }

private:
    void add_term(const Monomial& m, Int c);
    void require_same_mode(const GradedPoly& other, const char* op) const;

    Coeff mode_;
    std::map<Monomial, Int> terms_;
};

} // namespace blowup
