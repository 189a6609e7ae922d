#include "blowup/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace blowup {

using nlohmann::json;

namespace {

// -------------------------------------------------------------------------
// small helpers

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

/// Splits "cp:3" against an expected head, returning the number.
std::optional<int> preset_number(const std::string& preset, const std::string& head) {
    const std::string prefix = head + ":";
    if (preset.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string tail = preset.substr(prefix.size());
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw ScenarioError("malformed preset \"" + preset + "\"");
    try {
        return std::stoi(tail);
    } catch (const std::exception&) {
        throw ScenarioError("malformed preset \"" + preset + "\"");
    }
}

GeneratorTable table_of(const RingPresentation::Ptr& ring) {
    GeneratorTable t;
    for (const auto& g : ring->generators()) t.emplace(g.name, g);
    return t;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string partition_label(const std::vector<int>& lambda, Coeff mode) {
    std::map<int, int> counts;
    for (int p : lambda) counts[p]++;
    std::ostringstream os;
    const char* prefix = mode == Coeff::integers ? "c" : "w";
    bool first = true;
    for (const auto& [p, k] : counts) {
        if (!first) os << "*";
        os << prefix << p;
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

json json_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

// -------------------------------------------------------------------------
// ring construction

struct ResolvedSpace {
    RingPresentation::Ptr ring;
    GradedPoly total_chern{Coeff::integers};
    GeneratorTable table;
};

ResolvedSpace make_projective_space(int n, Coeff mode, const std::string& gen_name,
                                    const std::string& space, const std::string& label) {
    const int unit = degree_unit(mode);
    Generator h{gen_name, unit, space};
    std::vector<Generator> gens;
    std::map<Monomial, Int> integrals;
    std::vector<RewriteRule> rules;
    if (n >= 1) {
        gens.push_back(h);
        rules.push_back(RewriteRule{h, n + 1, GradedPoly::zero(mode)});
        integrals.emplace(Monomial::power(h, n), 1);
    } else {
        integrals.emplace(Monomial::unit(), 1);
    }
    ResolvedSpace out;
    out.ring = RingPresentation::create(label, mode, gens, rules, n * unit, integrals);
    GradedPoly one_plus_h = GradedPoly::constant(1, mode);
    if (n >= 1) one_plus_h += GradedPoly::generator(h, mode);
    out.total_chern = out.ring->reduce(one_plus_h.pow(n + 1));
    out.table = table_of(out.ring);
    return out;
}

ResolvedSpace make_point(Coeff mode, const std::string& label) {
    ResolvedSpace out;
    std::map<Monomial, Int> integrals;
    integrals.emplace(Monomial::unit(), 1);
    out.ring = RingPresentation::create(label, mode, {}, {}, 0, integrals);
    out.total_chern = GradedPoly::constant(1, mode);
    return out;
}

ResolvedSpace make_custom(const PresentationSpec& spec, Coeff mode,
                          const std::string& space, const std::string& label) {
    std::vector<Generator> gens;
    GeneratorTable table;
    for (const auto& [name, degree] : spec.generators) {
        if (!is_identifier(name))
            throw ScenarioError("bad generator name \"" + name + "\"");
        Generator g{name, degree, space};
        if (!table.emplace(name, g).second)
            throw ScenarioError("duplicate generator \"" + name + "\"");
        gens.push_back(g);
    }
    std::vector<RewriteRule> rules;
    for (const auto& r : spec.rules) {
        auto it = table.find(r.gen);
        if (it == table.end())
            throw ScenarioError("rule for unknown generator \"" + r.gen + "\"");
        rules.push_back(RewriteRule{it->second, r.exponent, parse_poly(r.rhs, table, mode)});
    }
    std::map<Monomial, Int> integrals;
    for (const auto& [key, value] : spec.integrals)
        integrals.emplace(parse_monomial(key, table), value);
    ResolvedSpace out;
    out.ring = RingPresentation::create(label, mode, std::move(gens), std::move(rules),
                                        spec.dimension, std::move(integrals));
    if (!out.ring->validation().ok)
        throw ScenarioError("invalid presentation for " + label + ": " +
                            out.ring->validation().summary());
    out.total_chern = out.ring->reduce(parse_poly(spec.total_chern, table, mode));
    out.table = table;
    return out;
}

RingPresentation::Ptr make_formal_ring(const std::string& label, const std::string& prefix,
                                       const std::string& space, int dimension, Coeff mode,
                                       std::vector<Generator> extra_gens,
                                       std::vector<Generator>* tangent_gens_out) {
    const int unit = degree_unit(mode);
    std::vector<Generator> gens;
    for (int i = 1; i * unit <= dimension; ++i) {
        Generator g{prefix + std::to_string(i), i * unit, space};
        gens.push_back(g);
        if (tangent_gens_out) tangent_gens_out->push_back(g);
    }
    for (auto& g : extra_gens) gens.push_back(std::move(g));
    return RingPresentation::create(label, mode, std::move(gens), {}, dimension, {});
}

void require_distinct_names(const RingPresentation::Ptr& m_ring,
                            const RingPresentation::Ptr& n_ring) {
    std::set<std::string> seen{"xi"};
    for (const auto& g : m_ring->generators())
        if (!seen.insert(g.name).second)
            throw ScenarioError("generator name \"" + g.name + "\" collides (xi is reserved)");
    for (const auto& g : n_ring->generators())
        if (!seen.insert(g.name).second)
            throw ScenarioError("generator name \"" + g.name +
                                "\" is used by both M and N (or is reserved)");
}

// -------------------------------------------------------------------------
// build: formal mode

Built build_formal(const Scenario& s) {
    const Coeff mode = s.mode;
    const int unit = degree_unit(mode);
    if (s.dim_m < 0 || s.dim_n < 0)
        throw ScenarioError("formal scenarios need dims for both M and N");
    if ((s.dim_m - s.dim_n) % unit != 0 || s.dim_m <= s.dim_n)
        throw ScenarioError("formal dims must satisfy dim M = dim N + rank*" +
                            std::to_string(unit) + " with rank >= 1");
    const int derived_rank = (s.dim_m - s.dim_n) / unit;
    const int r = s.rank > 0 ? s.rank : derived_rank;
    if (r != derived_rank)
        throw ScenarioError("rank " + std::to_string(s.rank) +
                            " contradicts dims (expected " + std::to_string(derived_rank) + ")");

    const std::string tm = mode == Coeff::integers ? "cM" : "wM";
    const std::string tn = mode == Coeff::integers ? "cN" : "wN";

    // E data: named formal generators (default e1..er), "0" entries giving
    // zero classes, an explicitly empty list giving the trivial bundle.
    std::vector<std::string> e_names;
    if (!s.e_chern_given) {
        for (int i = 1; i <= r; ++i) e_names.push_back("e" + std::to_string(i));
    } else {
        e_names = s.e_chern;
        if (!e_names.empty() && static_cast<int>(e_names.size()) != r)
            throw ScenarioError("E.chern must list exactly rank entries (or be empty)");
    }
    std::vector<Generator> e_gens;
    std::vector<bool> e_alive(static_cast<std::size_t>(r), false);
    for (std::size_t i = 0; i < e_names.size(); ++i) {
        const std::string& name = e_names[i];
        if (name == "0") continue;
        if (!is_identifier(name))
            throw ScenarioError("formal E.chern entries must be fresh names or \"0\", got \"" +
                                name + "\"");
        e_gens.push_back(Generator{name, static_cast<int>(i + 1) * unit, "N"});
        e_alive[i] = true;
    }

    std::vector<Generator> n_tangent;
    auto n_ring = make_formal_ring("N-formal", tn, "N", s.dim_n, mode, e_gens, &n_tangent);
    std::vector<Generator> m_tangent;
    auto m_ring = make_formal_ring("M-formal", tm, "M", s.dim_m, mode, {}, &m_tangent);
    require_distinct_names(m_ring, n_ring);

    std::vector<RingElement> e_elems;
    for (int i = 1; i <= r; ++i) {
        if (i <= static_cast<int>(e_alive.size()) && e_alive[i - 1])
            e_elems.push_back(n_ring->gen(e_names[i - 1]));
        else
            e_elems.push_back(n_ring->zero());
    }
    auto pe = ProjBundle::create(n_ring, e_elems);

    GradedPoly n_total = GradedPoly::constant(1, mode);
    for (const auto& g : n_tangent) n_total += GradedPoly::generator(g, mode);
    GradedPoly m_total = GradedPoly::constant(1, mode);
    for (const auto& g : m_tangent) m_total += GradedPoly::generator(g, mode);

    const RingElement whitney = n_ring->element(n_total * pe->total_e_poly());
    auto model = ManifoldModel::formal(m_ring, n_ring, m_total, whitney, r,
                                       pe->e_class(r));
    Built out;
    out.ctx = BlowupContext::create(model, pe, n_total);
    if (!s.label.empty()) {
        out.label = s.label;
    } else {
        std::ostringstream os;
        os << "formal dimM=" << s.dim_m << " dimN=" << s.dim_n << " rank=" << r;
        if (mode == Coeff::mod2) os << " mod2";
        out.label = os.str();
    }
    return out;
}

// -------------------------------------------------------------------------
// build: concrete mode

Built build_concrete(const Scenario& s) {
    const Coeff mode = s.mode;
    const int unit = degree_unit(mode);

    // --- M ---
    ResolvedSpace M;
    std::optional<int> cp_n; // set when M is a complex/real projective preset
    if (!s.m_preset.empty()) {
        if (auto n = preset_number(s.m_preset, "cp")) {
            if (mode != Coeff::integers)
                throw ScenarioError("preset cp:n requires integer coefficients");
            if (*n < 1 || *n > 8) throw ScenarioError("cp:n supports 1 <= n <= 8");
            M = make_projective_space(*n, mode, "h", "M", s.m_preset);
            cp_n = *n;
        } else if (auto n2 = preset_number(s.m_preset, "rp")) {
            if (mode != Coeff::mod2)
                throw ScenarioError("preset rp:n requires mod2 coefficients "
                                    "(--coefficients z2)");
            if (*n2 < 1 || *n2 > 8) throw ScenarioError("rp:n supports 1 <= n <= 8");
            M = make_projective_space(*n2, mode, "w", "M", s.m_preset);
            cp_n = *n2;
        } else {
            throw ScenarioError("unknown M preset \"" + s.m_preset + "\"");
        }
    } else if (s.m_custom) {
        M = make_custom(*s.m_custom, mode, "M", "M-custom");
    } else {
        throw ScenarioError("scenario gives no description of M");
    }

    // --- N, default embedding, default E ---
    ResolvedSpace N;
    std::map<std::string, std::string> istar_default;
    std::vector<std::pair<std::string, std::string>> ishriek_default;
    int rank = 0;
    std::vector<RingElement> e_default;
    bool have_e_default = false;

    if (!s.n_preset.empty()) {
        if (s.n_preset == "point") {
            N = make_point(mode, "point");
            for (const auto& g : M.ring->generators()) istar_default.emplace(g.name, "0");
            rank = M.ring->dimension() / unit;
            if (cp_n) {
                const Generator* h = M.ring->find_generator(M.ring->generators()[0].name);
                std::ostringstream os;
                os << h->name;
                if (*cp_n != 1) os << "^" << *cp_n;
                ishriek_default.emplace_back("1", os.str());
            }
        } else if (auto k = preset_number(s.n_preset, "cp-linear")) {
            if (!cp_n || mode != Coeff::integers)
                throw ScenarioError("preset cp-linear:k needs M = cp:n over the integers");
            if (*k < 1 || *k >= *cp_n)
                throw ScenarioError("cp-linear:k needs 1 <= k < n");
            N = make_projective_space(*k, mode, "hN", "N", s.n_preset);
            rank = *cp_n - *k;
            istar_default.emplace("h", "hN");
            for (int j = 0; j <= *k; ++j) {
                std::ostringstream key, val;
                if (j == 0)
                    key << "1";
                else if (j == 1)
                    key << "hN";
                else
                    key << "hN^" << j;
                val << "h^" << j + rank;
                ishriek_default.emplace_back(key.str(), val.str());
            }
            // Normal bundle of a linear subspace: c(E) = (1 + hN)^{n-k}.
            GradedPoly one_plus = GradedPoly::constant(1, mode);
            one_plus += GradedPoly::generator(*N.ring->find_generator("hN"), mode);
            const GradedPoly total = N.ring->reduce(one_plus.pow(rank));
            for (int i = 1; i <= rank; ++i)
                e_default.push_back(N.ring->element(total.degree_part(i * unit)));
            have_e_default = true;
        } else {
            throw ScenarioError("unknown N preset \"" + s.n_preset + "\"");
        }
    } else if (s.n_custom) {
        N = make_custom(*s.n_custom, mode, "N", "N-custom");
    } else {
        throw ScenarioError("scenario gives no description of N");
    }

    require_distinct_names(M.ring, N.ring);

    // --- rank and E classes ---
    const int dim_gap = M.ring->dimension() - N.ring->dimension();
    if (rank == 0) {
        if (dim_gap <= 0 || dim_gap % unit != 0)
            throw ScenarioError("cannot derive a codimension rank from the dimensions");
        rank = dim_gap / unit;
    }
    if (s.rank > 0 && s.rank != rank)
        throw ScenarioError("E.rank = " + std::to_string(s.rank) +
                            " contradicts the scenario (expected " + std::to_string(rank) + ")");

    std::vector<RingElement> e_elems;
    if (s.e_chern_given) {
        if (static_cast<int>(s.e_chern.size()) > rank)
            throw ScenarioError("E.chern lists more classes than the rank");
        for (int i = 1; i <= rank; ++i) {
            if (i <= static_cast<int>(s.e_chern.size()))
                e_elems.push_back(N.ring->element(parse_poly(s.e_chern[i - 1], N.table, mode)));
            else
                e_elems.push_back(N.ring->zero());
        }
    } else if (have_e_default) {
        e_elems = std::move(e_default);
    } else {
        for (int i = 0; i < rank; ++i) e_elems.push_back(N.ring->zero());
    }
    auto pe = ProjBundle::create(N.ring, e_elems);

    // --- embedding tables ---
    const auto& istar_src = s.embedding.i_star_given ? s.embedding.i_star : istar_default;
    std::map<Generator, GradedPoly> istar;
    for (const auto& [name, expr] : istar_src) {
        const Generator* g = M.ring->find_generator(name);
        if (!g) throw ScenarioError("i_star table names unknown M generator \"" + name + "\"");
        istar.emplace(*g, parse_poly(expr, N.table, mode));
    }
    const auto& ishriek_src =
        s.embedding.i_shriek_given ? s.embedding.i_shriek : ishriek_default;
    if (ishriek_src.empty())
        throw ScenarioError("scenario needs an i_shriek table (none derivable)");
    std::map<Monomial, GradedPoly> ishriek;
    for (const auto& [key, expr] : ishriek_src)
        ishriek.emplace(parse_monomial(key, N.table), parse_poly(expr, M.table, mode));

    auto model = ManifoldModel::presented(M.ring, N.ring, M.total_chern, std::move(istar),
                                          std::move(ishriek), rank, pe->e_class(rank));
    Built out;
    out.ctx = BlowupContext::create(model, pe, N.total_chern);
    if (!s.label.empty()) {
        out.label = s.label;
    } else {
        const std::string mdesc = s.m_preset.empty() ? "M-custom" : s.m_preset;
        const std::string ndesc = s.n_preset.empty() ? "N-custom" : s.n_preset;
        out.label = mdesc + " / " + ndesc + (mode == Coeff::mod2 ? " mod2" : "");
    }
    return out;
}

} // namespace

Built build_scenario(const Scenario& s) {
    return s.formal ? build_formal(s) : build_concrete(s);
}

GeneratorTable generator_table(const BlowupContext& ctx) {
    GeneratorTable t;
    for (const auto& g : ctx.model()->m_ring()->generators()) t.emplace(g.name, g);
    for (const auto& g : ctx.pe()->ring()->generators()) t.emplace(g.name, g);
    return t;
}

// ---------------------------------------------------------------------------
// scenario parsing

namespace {

PresentationSpec parse_presentation(const json& j) {
    PresentationSpec spec;
    spec.dimension = j.at("dim").get<int>();
    if (j.contains("generators"))
        for (const auto& g : j.at("generators"))
            spec.generators.emplace_back(g.at("name").get<std::string>(),
                                         g.at("degree").get<int>());
    if (j.contains("rules"))
        for (const auto& r : j.at("rules")) {
            PresentationSpec::RuleSpec rule;
            rule.gen = r.at("gen").get<std::string>();
            rule.exponent = r.at("exponent").get<int>();
            rule.rhs = r.at("rhs").get<std::string>();
            spec.rules.push_back(std::move(rule));
        }
    if (j.contains("integrals"))
        for (const auto& [key, value] : j.at("integrals").items()) {
            Int v = value.is_string() ? Int(value.get<std::string>())
                                      : Int(value.get<std::int64_t>());
            spec.integrals.emplace_back(key, std::move(v));
        }
    if (j.contains("total_chern")) spec.total_chern = j.at("total_chern").get<std::string>();
    return spec;
}

Coeff parse_coefficients(const std::string& word) {
    if (word == "integers" || word == "z" || word == "Z") return Coeff::integers;
    if (word == "mod2" || word == "z2" || word == "Z2") return Coeff::mod2;
    throw ScenarioError("unknown coefficients \"" + word + "\" (use z or z2)");
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario JSON: ") + e.what());
    }
    try {
        Scenario s;
        if (j.contains("label")) s.label = j.at("label").get<std::string>();
        if (j.contains("coefficients"))
            s.mode = parse_coefficients(j.at("coefficients").get<std::string>());
        if (j.contains("mode")) {
            const std::string m = j.at("mode").get<std::string>();
            if (m == "formal")
                s.formal = true;
            else if (m != "concrete")
                throw ScenarioError("mode must be formal or concrete");
        }
        if (j.contains("dims")) {
            s.formal = true;
            s.dim_m = j.at("dims").at("M").get<int>();
            s.dim_n = j.at("dims").at("N").get<int>();
        }
        if (j.contains("M")) {
            if (j.at("M").is_string())
                s.m_preset = j.at("M").get<std::string>();
            else
                s.m_custom = parse_presentation(j.at("M"));
        }
        if (j.contains("N")) {
            if (j.at("N").is_string())
                s.n_preset = j.at("N").get<std::string>();
            else
                s.n_custom = parse_presentation(j.at("N"));
        }
        if (j.contains("E")) {
            const json& e = j.at("E");
            if (e.contains("rank")) s.rank = e.at("rank").get<int>();
            if (e.contains("chern")) {
                s.e_chern_given = true;
                for (const auto& c : e.at("chern")) s.e_chern.push_back(c.get<std::string>());
            }
        }
        if (j.contains("embedding")) {
            const json& emb = j.at("embedding");
            if (emb.contains("i_star")) {
                s.embedding.i_star_given = true;
                for (const auto& [key, value] : emb.at("i_star").items())
                    s.embedding.i_star.emplace(key, value.get<std::string>());
            }
            if (emb.contains("i_shriek")) {
                s.embedding.i_shriek_given = true;
                for (const auto& [key, value] : emb.at("i_shriek").items())
                    s.embedding.i_shriek.emplace_back(key, value.get<std::string>());
            }
        }
        if (s.m_preset.rfind("rp:", 0) == 0 && !j.contains("coefficients"))
            s.mode = Coeff::mod2;
        return s;
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario JSON: ") + e.what());
    }
}

Scenario scenario_from_positional(const std::vector<std::string>& args) {
    if (args.empty())
        throw ScenarioError("expected scenario arguments (e.g. \"cp:2 point\" or "
                            "\"formal dimM=6 dimN=2\") or --scenario FILE");
    auto parse_int = [](const std::string& key, const std::string& val) {
        try {
            std::size_t used = 0;
            const int out = std::stoi(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            return out;
        } catch (const std::exception&) {
            throw ScenarioError(key + " expects an integer, got \"" + val + "\"");
        }
    };
    Scenario s;
    if (args[0] == "formal") {
        s.formal = true;
        for (std::size_t i = 1; i < args.size(); ++i) {
            const std::string& a = args[i];
            const auto eq = a.find('=');
            if (eq == std::string::npos)
                throw ScenarioError("formal scenario arguments look like key=value, got \"" +
                                    a + "\"");
            const std::string key = a.substr(0, eq);
            const std::string val = a.substr(eq + 1);
            if (key == "dimM")
                s.dim_m = parse_int(key, val);
            else if (key == "dimN")
                s.dim_n = parse_int(key, val);
            else if (key == "rank")
                s.rank = parse_int(key, val);
            else if (key == "chern") {
                s.e_chern_given = true;
                std::stringstream ss(val);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) s.e_chern.push_back(item);
            } else {
                throw ScenarioError("unknown formal scenario key \"" + key + "\"");
            }
        }
        return s;
    }
    if (args.size() != 2)
        throw ScenarioError("expected exactly M and N presets, e.g. \"cp:3 cp-linear:1\"");
    s.m_preset = args[0];
    s.n_preset = args[1];
    if (s.m_preset.rfind("rp:", 0) == 0) s.mode = Coeff::mod2;
    return s;
}

// ---------------------------------------------------------------------------
// commands

ComputeResult run_compute(const Built& built, int max_index) {
    const BlowupContext& ctx = *built.ctx;
    const int unit = degree_unit(ctx.mode());
    ComputeResult out;
    out.scenario_label = built.label;
    out.mode = ctx.mode();
    out.formal = ctx.model()->is_formal();
    out.rank = ctx.rank();
    out.dim_m = ctx.model()->m_ring()->dimension();
    out.dim_n = ctx.model()->n_ring()->dimension();

    const BlowupElement total = ctx.total_class();
    const int top_index = out.dim_m / unit;
    const int max_k = max_index < 0 ? top_index : std::min(max_index, top_index);
    for (int k = 0; k <= max_k; ++k) {
        const BlowupElement part = ctx.degree_part(total, k * unit);
        ClassLine line;
        line.degree = k * unit;
        line.index = k;
        line.rendered = ctx.str(part);
        line.m_part = part.m_part.u.str();
        line.m_shriek_part = out.formal ? part.m_part.v.str() : "";
        for (const auto& b : part.exc) line.exc_parts.push_back(b.str());
        out.classes.push_back(std::move(line));
    }

    if (!out.formal) {
        for (const auto& lambda : partitions(top_index)) {
            BlowupElement prod = ctx.one();
            for (int p : lambda) prod = ctx.multiply(prod, ctx.degree_part(total, p * unit));
            out.char_numbers.emplace_back(partition_label(lambda, ctx.mode()),
                                          ctx.integrate(prod));
        }
        out.euler = ctx.integrate(ctx.degree_part(total, out.dim_m));
    }
    return out;
}

bool VerifyResult::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VerifyResult run_verify(const Built& built, int trials, std::uint64_t seed) {
    VerifyResult out;
    out.scenario_label = built.label;
    out.checks = run_all_checks(*built.ctx, trials, seed);
    return out;
}

Int run_euler(const Built& built) {
    const BlowupContext& ctx = *built.ctx;
    const BlowupElement total = ctx.total_class();
    return ctx.integrate(ctx.degree_part(total, ctx.dimension()));
}

std::string to_text(const ComputeResult& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario_label << "\n";
    os << "mode: " << (r.formal ? "formal" : "concrete") << ", coefficients: "
       << coeff_name(r.mode) << ", rank: " << r.rank << ", dim M: " << r.dim_m
       << ", dim N: " << r.dim_n << "\n";
    const char* prefix = r.mode == Coeff::integers ? "c" : "w";
    for (const auto& line : r.classes)
        os << prefix << "_" << line.index << "(M~) = " << line.rendered << "\n";
    if (!r.char_numbers.empty()) {
        os << "characteristic numbers:\n";
        for (const auto& [name, value] : r.char_numbers)
            os << "  " << name << " = " << value.str() << "\n";
    }
    if (r.euler) os << "euler characteristic = " << r.euler->str() << "\n";
    return os.str();
}

std::string to_json(const ComputeResult& r) {
    json j;
    j["scenario"] = {{"label", r.scenario_label},
                     {"mode", r.formal ? "formal" : "concrete"},
                     {"coefficients", coeff_name(r.mode)},
                     {"rank", r.rank},
                     {"dim_M", r.dim_m},
                     {"dim_N", r.dim_n}};
    json classes = json::array();
    for (const auto& line : r.classes) {
        json c = {{"degree", line.degree},
                  {"index", line.index},
                  {"m_part", line.m_part},
                  {"exc_parts", line.exc_parts},
                  {"rendered", line.rendered}};
        if (r.formal) c["m_shriek_part"] = line.m_shriek_part;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    if (!r.char_numbers.empty()) {
        json numbers = json::object();
        for (const auto& [name, value] : r.char_numbers) numbers[name] = json_int(value);
        j[r.mode == Coeff::integers ? "chern_numbers" : "sw_numbers"] = std::move(numbers);
    }
    if (r.euler) j["euler"] = json_int(*r.euler);
    return j.dump(2) + "\n";
}

std::string to_text(const VerifyResult& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario_label << "\n";
    int passed = 0;
    for (const auto& c : r.checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name << " (" << c.trials
           << (c.trials == 1 ? " trial" : " trials") << ")";
        if (!c.pass) os << "\n      counterexample: " << c.counterexample;
        os << "\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

std::string to_json(const VerifyResult& r) {
    json j;
    j["scenario"] = r.scenario_label;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name},
                  {"status", c.pass ? "pass" : "fail"},
                  {"trials", c.trials}};
        if (!c.pass) e["counterexample"] = c.counterexample;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

} // namespace blowup
