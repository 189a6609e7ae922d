#include "blowup/quotient_ring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace blowup {

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < problems.size(); ++i) {
        if (i) os << "; ";
        os << problems[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// validation

namespace {

/// Enumerates every monomial (reducible or not) over `gens` with total
/// degree <= max_degree, exponents additionally capped by `caps` when a cap
/// is nonnegative. Used for the confluence sweep and for basis enumeration.
void enumerate_monomials(const std::vector<Generator>& gens,
                         const std::vector<int>& caps,
                         int max_degree,
                         std::size_t index,
                         Monomial current,
                         std::vector<Monomial>& out) {
    if (index == gens.size()) {
        out.push_back(current);
        return;
    }
    const Generator& g = gens[index];
    const int budget = (max_degree - current.degree()) / g.degree;
    int top = budget;
    if (caps[index] >= 0) top = std::min(top, caps[index]);
    for (int e = 0; e <= top; ++e) {
        enumerate_monomials(gens, caps, max_degree, index + 1,
                            e == 0 ? current : current.times(Monomial::power(g, e)), out);
    }
}

} // namespace

ValidationReport validate_presentation(Coeff mode,
                                       const std::vector<Generator>& generators,
                                       const std::map<Generator, RewriteRule>& rules,
                                       int dimension,
                                       const std::map<Monomial, Int>& integrals) {
    ValidationReport rep;
    auto fail = [&rep](std::string why) {
        rep.ok = false;
        rep.problems.push_back(std::move(why));
    };

    if (dimension < 0) fail("negative dimension");
    if (mode == Coeff::integers && dimension % 2 != 0)
        fail("odd dimension in integer (Chern) mode");

    std::set<std::string> names;
    std::set<Generator> gen_set(generators.begin(), generators.end());
    for (const auto& g : generators) {
        if (g.degree < 1) fail("generator " + g.name + " has degree < 1");
        if (mode == Coeff::integers && g.degree % 2 != 0)
            fail("generator " + g.name + " has odd degree in integer mode");
        if (!names.insert(g.name).second) fail("duplicate generator name " + g.name);
    }

    for (const auto& [g, rule] : rules) {
        const std::string where = "rule for " + g.name + "^" + std::to_string(rule.exponent);
        if (!gen_set.count(g)) fail(where + ": lhs is not a ring generator");
        if (rule.exponent < 1) fail(where + ": exponent < 1");
        if (rule.rhs.mode() != mode) fail(where + ": rhs coefficient mode differs");
        int d = 0;
        if (!rule.rhs.is_homogeneous(&d) ||
            (!rule.rhs.is_zero() && d != rule.exponent * g.degree))
            fail(where + ": inhomogeneous rhs");
        for (const auto& [m, c] : rule.rhs.terms()) {
            if (m.exponent(g) >= rule.exponent)
                fail(where + ": rhs term " + m.str() + " not smaller in " + g.name);
            for (const auto& [h, e] : m.factors())
                if (!gen_set.count(h)) fail(where + ": rhs uses foreign generator " + h.name);
        }
    }

    // Triangular order: the dependency graph (rule owner -> other generators
    // in its rhs) must be acyclic; self-dependence with smaller exponent was
    // checked above.
    {
        std::map<Generator, std::set<Generator>> deps;
        for (const auto& [g, rule] : rules)
            for (const auto& [m, c] : rule.rhs.terms())
                for (const auto& [h, e] : m.factors())
                    if (!(h == g)) deps[g].insert(h);
        std::map<Generator, int> state; // 0 new, 1 visiting, 2 done
        std::function<bool(const Generator&)> visit = [&](const Generator& g) {
            int& s = state[g];
            if (s == 1) return false;
            if (s == 2) return true;
            s = 1;
            for (const auto& h : deps[g])
                if (!visit(h)) return false;
            s = 2;
            return true;
        };
        for (const auto& [g, rule] : rules)
            if (!visit(g)) {
                fail("no triangular order: cyclic dependency through " + g.name);
                break;
            }
    }

    for (const auto& [m, v] : integrals) {
        if (m.degree() != dimension)
            fail("integral table key " + m.str() + " has degree " +
                 std::to_string(m.degree()) + " != dimension");
        for (const auto& [g, e] : m.factors()) {
            if (!gen_set.count(g)) fail("integral table key uses foreign generator " + g.name);
            auto it = rules.find(g);
            if (it != rules.end() && e >= it->second.exponent)
                fail("integral table key " + m.str() + " is not in normal form");
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// RingPresentation

RingPresentation::Ptr RingPresentation::create(std::string label,
                                               Coeff mode,
                                               std::vector<Generator> generators,
                                               std::vector<RewriteRule> rules,
                                               int dimension,
                                               std::map<Monomial, Int> integrals,
                                               std::vector<SubspaceCap> caps) {
    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->label_ = std::move(label);
    ring->mode_ = mode;
    ring->generators_ = std::move(generators);
    ring->dimension_ = dimension;
    ring->has_integrals_ = !integrals.empty();
    ring->integrals_ = std::move(integrals);
    ring->caps_ = std::move(caps);
    for (auto& r : rules) {
        Generator g = r.lhs;
        ring->rules_.emplace(std::move(g), std::move(r));
    }
    ring->validate();
    return ring;
}

bool RingPresentation::capped(const Monomial& m) const {
    for (const auto& cap : caps_) {
        int degree = 0;
        for (const auto& [g, e] : m.factors())
            if (cap.gens.count(g)) degree += g.degree * e;
        if (degree > cap.max_degree) return true;
    }
    return false;
}

void RingPresentation::validate() {
    report_ = validate_presentation(mode_, generators_, rules_, dimension_, integrals_);
    for (const auto& cap : caps_) {
        if (cap.max_degree < 0) {
            report_.ok = false;
            report_.problems.push_back("negative subspace cap");
        }
    }
    for (const auto& [m, v] : integrals_) {
        if (capped(m)) {
            report_.ok = false;
            report_.problems.push_back("integral table key " + m.str() +
                                       " is killed by a subspace cap");
        }
    }
    if (!report_.ok) return;

    // Local confluence sweep over all monomials of bounded degree.
    std::vector<int> no_caps(generators_.size(), -1);
    std::vector<Monomial> all;
    enumerate_monomials(generators_, no_caps, dimension_, 0, Monomial::unit(), all);
    for (const auto& m : all) {
        std::map<Monomial, GradedPoly> memo_a, memo_b;
        GradedPoly a = reduce_monomial(m, Strategy::first, memo_a);
        GradedPoly b = reduce_monomial(m, Strategy::last, memo_b);
        if (!(a == b)) {
            report_.ok = false;
            report_.problems.push_back("not locally confluent at monomial " + m.str() +
                                       ": " + a.str() + " vs " + b.str());
            return;
        }
    }
}

const Generator* RingPresentation::find_generator(const std::string& name) const {
    for (const auto& g : generators_)
        if (g.name == name) return &g;
    return nullptr;
}

const RewriteRule* RingPresentation::applicable_rule(const Monomial& m, Strategy s) const {
    const RewriteRule* found = nullptr;
    for (const auto& [g, e] : m.factors()) {
        auto it = rules_.find(g);
        if (it != rules_.end() && e >= it->second.exponent) {
            found = &it->second;
            if (s == Strategy::first) return found;
        }
    }
    return found;
}

GradedPoly RingPresentation::reduce_monomial(const Monomial& m, Strategy s,
                                             std::map<Monomial, GradedPoly>& memo) const {
    if (m.degree() > dimension_ || capped(m)) return GradedPoly::zero(mode_);
    auto hit = memo.find(m);
    if (hit != memo.end()) return hit->second;
    const RewriteRule* rule = applicable_rule(m, s);
    GradedPoly out(mode_);
    if (!rule) {
        out = GradedPoly::from_monomial(m, 1, mode_);
    } else {
        const Monomial rest = m.without_power(rule->lhs, rule->exponent);
        const GradedPoly replaced = rule->rhs.times_monomial(rest);
        for (const auto& [mono, c] : replaced.terms())
            out += reduce_monomial(mono, s, memo).scaled(c);
    }
    memo.emplace(m, out);
    return out;
}

GradedPoly RingPresentation::reduce_with(const GradedPoly& p, Strategy s) const {
    std::map<Monomial, GradedPoly> memo;
    GradedPoly out(mode_);
    for (const auto& [m, c] : p.terms())
        out += reduce_monomial(m, s, memo).scaled(c);
    return out;
}

GradedPoly RingPresentation::reduce(const GradedPoly& p) const {
    if (!report_.ok)
        throw ValidationError("ring " + label_ + " is invalid: " + report_.summary());
    if (p.mode() != mode_)
        throw ModeMismatchError("ring " + label_ + ": element coefficient mode differs");
    std::set<Generator> own(generators_.begin(), generators_.end());
    for (const auto& g : p.generators_used())
        if (!own.count(g))
            throw ForeignGeneratorError("ring " + label_ + " does not own generator " +
                                        g.name + " (space " + g.space + ")");
    return reduce_with(p, Strategy::first);
}

RingElement RingPresentation::element(const GradedPoly& p) const {
    return RingElement(shared_from_this(), reduce(p));
}

RingElement RingPresentation::zero() const { return element(GradedPoly::zero(mode_)); }

RingElement RingPresentation::one() const { return element(GradedPoly::constant(1, mode_)); }

RingElement RingPresentation::constant(const Int& value) const {
    return element(GradedPoly::constant(value, mode_));
}

RingElement RingPresentation::gen(const std::string& name) const {
    const Generator* g = find_generator(name);
    if (!g) throw ForeignGeneratorError("ring " + label_ + " has no generator " + name);
    return element(GradedPoly::generator(*g, mode_));
}

Int RingPresentation::integrate(const RingElement& x) const {
    if (!has_integrals_)
        throw IntegrationError("ring " + label_ + " has no integration table");
    Int total = 0;
    for (const auto& [m, c] : x.value().terms()) {
        if (m.degree() < dimension_) continue;
        auto it = integrals_.find(m);
        if (it == integrals_.end())
            throw IntegrationError("ring " + label_ + ": top-degree monomial " + m.str() +
                                   " missing from the integration table");
        total += c * it->second;
    }
    if (mode_ == Coeff::mod2) {
        total %= 2;
        if (total < 0) total += 2;
    }
    return total;
}

std::vector<Monomial> RingPresentation::basis(int max_degree) const {
    std::vector<int> exp_caps;
    exp_caps.reserve(generators_.size());
    for (const auto& g : generators_) {
        auto it = rules_.find(g);
        exp_caps.push_back(it == rules_.end() ? -1 : it->second.exponent - 1);
    }
    std::vector<Monomial> out;
    enumerate_monomials(generators_, exp_caps, std::min(max_degree, dimension_), 0,
                        Monomial::unit(), out);
    std::erase_if(out, [this](const Monomial& m) { return capped(m); });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPresentation::Ptr ring, GradedPoly value)
    : ring_(std::move(ring)), value_(std::move(value)) {}

void RingElement::require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_)
        throw Error("ring elements belong to different presentations (" +
                    (a.ring_ ? a.ring_->label() : "null") + " vs " +
                    (b.ring_ ? b.ring_->label() : "null") + ")");
}

RingElement RingElement::operator-() const { return RingElement(ring_, -value_); }

RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement::require_same_ring(a, b);
    return RingElement(a.ring_, a.value_ + b.value_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    RingElement::require_same_ring(a, b);
    return RingElement(a.ring_, a.value_ - b.value_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement::require_same_ring(a, b);
    return RingElement(a.ring_, a.ring_->reduce(a.value_ * b.value_));
}

RingElement RingElement::scaled(const Int& k) const {
    return RingElement(ring_, ring_->reduce(value_.scaled(k)));
}

RingElement RingElement::pow(int n) const {
    if (n < 0) throw Error("negative power of a ring element");
    RingElement result = ring_->one();
    RingElement base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

RingElement RingElement::degree_part(int d) const {
    if (d < 0) return RingElement(ring_, GradedPoly::zero(value_.mode()));
    return RingElement(ring_, value_.project_degrees(d, d));
}

bool operator==(const RingElement& a, const RingElement& b) {
    RingElement::require_same_ring(a, b);
    return a.value_ == b.value_;
}

} // namespace blowup
