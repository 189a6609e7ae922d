#include "blowup/graded_poly.hpp"

#include <algorithm>
#include <sstream>

namespace blowup {

Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::power(const Generator& g, int exponent) {
    Monomial m;
    if (exponent < 0) throw Error("negative exponent in monomial");
    if (exponent > 0) {
        m.factors_.emplace_back(g, exponent);
        m.degree_ = g.degree * exponent;
    }
    return m;
}

int Monomial::exponent(const Generator& g) const {
    for (const auto& [gen, e] : factors_)
        if (gen == g) return e;
    return 0;
}

bool Monomial::divisible_by(const Generator& g, int exponent) const {
    return this->exponent(g) >= exponent;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::without_power(const Generator& g, int e) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    bool found = false;
    for (const auto& [gen, exp] : factors_) {
        if (gen == g) {
            found = true;
            if (exp < e) throw DivisionError("monomial " + str() + " lacks " + g.name + "^" + std::to_string(e));
            if (exp > e) out.factors_.emplace_back(gen, exp - e);
        } else {
            out.factors_.emplace_back(gen, exp);
        }
    }
    if (!found && e > 0)
        throw DivisionError("monomial " + str() + " lacks factor " + g.name);
    out.degree_ = degree_ - g.degree * e;
    return out;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [gen, exp] : factors_) {
        if (!first) os << "*";
        os << gen.name;
        if (exp != 1) os << "^" << exp;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GradedPoly

GradedPoly GradedPoly::constant(Int value, Coeff mode) {
    GradedPoly p(mode);
    p.add_term(Monomial::unit(), std::move(value));
    return p;
}

GradedPoly GradedPoly::generator(const Generator& g, Coeff mode) {
    GradedPoly p(mode);
    p.add_term(Monomial::power(g, 1), 1);
    return p;
}

GradedPoly GradedPoly::from_monomial(const Monomial& m, Int coeff, Coeff mode) {
    GradedPoly p(mode);
    p.add_term(m, std::move(coeff));
    return p;
}

Int GradedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

int GradedPoly::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

int GradedPoly::min_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool GradedPoly::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    const int d = terms_.begin()->first.degree();
    if (terms_.rbegin()->first.degree() != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

std::set<Generator> GradedPoly::generators_used() const {
    std::set<Generator> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [g, e] : m.factors()) out.insert(g);
    return out;
}

void GradedPoly::add_term(const Monomial& m, Int c) {
    if (mode_ == Coeff::mod2) {
        c %= 2;
        if (c < 0) c += 2;
    }
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
        return;
    }
    it->second += c;
    if (mode_ == Coeff::mod2) {
        it->second %= 2;
        if (it->second < 0) it->second += 2;
    }
    if (it->second == 0) terms_.erase(it);
}

void GradedPoly::require_same_mode(const GradedPoly& other, const char* op) const {
    if (mode_ != other.mode_)
        throw ModeMismatchError(std::string(op) + ": coefficient modes differ (" +
                                coeff_name(mode_) + " vs " + coeff_name(other.mode_) + ")");
}

GradedPoly GradedPoly::operator-() const {
    if (mode_ == Coeff::mod2) return *this;
    GradedPoly out(mode_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    require_same_mode(rhs, "add");
    for (const auto& [m, c] : rhs.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (mode_ == Coeff::mod2) {
                it->second %= 2;
                if (it->second < 0) it->second += 2;
            }
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
    require_same_mode(rhs, "subtract");
    return *this += -rhs;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    a.require_same_mode(b, "multiply");
    GradedPoly out(a.mode());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

GradedPoly GradedPoly::scaled(const Int& k) const {
    GradedPoly out(mode_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * k);
    return out;
}

GradedPoly GradedPoly::times_monomial(const Monomial& m, const Int& coeff) const {
    GradedPoly out(mode_);
    for (const auto& [mono, c] : terms_) out.add_term(mono.times(m), c * coeff);
    return out;
}

GradedPoly GradedPoly::pow(int n) const {
    if (n < 0) throw Error("negative power of a polynomial");
    GradedPoly result = constant(1, mode_);
    GradedPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

GradedPoly GradedPoly::project_degrees(int lo, int hi) const {
    if (lo < 0 || lo > hi)
        throw DegreeError("project_degrees: need 0 <= lo <= hi, got [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    GradedPoly out(mode_);
    for (const auto& [m, c] : terms_)
        if (m.degree() >= lo && m.degree() <= hi) out.terms_.emplace(m, c);
    return out;
}

GradedPoly GradedPoly::geometric_inverse(int hi) const {
    const Int c0 = constant_term();
    const bool unit_pos = c0 == 1;
    const bool unit_neg = mode_ == Coeff::integers && c0 == -1;
    if (!unit_pos && !unit_neg)
        throw Error("geometric_inverse: constant term " + c0.str() + " is not a unit");
    // u = c0 (1 + c0 h) with h of strictly positive degree, so
    // u^{-1} = c0 (1 - c0 h + (c0 h)^2 - ...), truncated at degree hi.
    GradedPoly h = *this;
    h -= constant(c0, mode_);
    GradedPoly w = (-h).scaled(c0).project_degrees(0, hi);
    GradedPoly result = constant(1, mode_);
    GradedPoly power = constant(1, mode_);
    while (true) {
        power = (power * w).project_degrees(0, hi);
        if (power.is_zero()) break;
        result += power;
    }
    return result.scaled(c0);
}

GradedPoly GradedPoly::exact_divide(const Generator& g) const {
    GradedPoly out(mode_);
    for (const auto& [m, c] : terms_) {
        if (!m.divisible_by(g, 1))
            throw DivisionError("term " + m.str() + " is not divisible by " + g.name);
        out.terms_.emplace(m.without_power(g, 1), c);
    }
    return out;
}

GradedPoly GradedPoly::map_generators(const std::map<Generator, GradedPoly>& assignment) const {
    for (const auto& [g, image] : assignment) {
        int d = 0;
        if (image.mode() != mode_)
            throw ModeMismatchError("map_generators: image mode differs for " + g.name);
        if (!image.is_homogeneous(&d) || (!image.is_zero() && d != g.degree))
            throw DegreeError("map_generators: image of " + g.name +
                              " is not homogeneous of degree " + std::to_string(g.degree));
    }
    GradedPoly out(mode_);
    for (const auto& [m, c] : terms_) {
        GradedPoly term = constant(c, mode_);
        Monomial untouched;
        for (const auto& [g, e] : m.factors()) {
            auto it = assignment.find(g);
            if (it == assignment.end())
                untouched = untouched.times(Monomial::power(g, e));
            else
                term = term * it->second.pow(e);
        }
        out += term.times_monomial(untouched);
    }
    return out;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_unit()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << m.str();
        }
        first = false;
    }
    return os.str();
}

} // namespace blowup
