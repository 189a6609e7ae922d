#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/blowup_ring.hpp"
#include "blowup/identity_suite.hpp"
#include "blowup/poly_io.hpp"

namespace blowup {

/// An explicit ring description as it appears in scenario files.
struct PresentationSpec {
    int dimension = 0;
    std::vector<std::pair<std::string, int>> generators; // (name, degree)
    struct RuleSpec {
        std::string gen;
        int exponent = 0;
        std::string rhs;
    };
    std::vector<RuleSpec> rules;
    std::vector<std::pair<std::string, Int>> integrals; // (monomial, value)
    std::string total_chern = "1";
};

struct EmbeddingSpec {
    std::map<std::string, std::string> i_star;                  // M generator -> N class
    std::vector<std::pair<std::string, std::string>> i_shriek;  // N monomial -> M class
    bool i_star_given = false;
    bool i_shriek_given = false;
};

/// Serialized description of a blow-up situation (M, N, i*, i^!, E), either
/// formal (generic tangent classes, symbolic pushforward) or concrete
/// (presets or explicit presentations with tables). Parsed from JSON or
/// assembled from command-line arguments; build_scenario() turns it into a
/// validated BlowupContext.
struct Scenario {
    std::string label;
    bool formal = false;
    Coeff mode = Coeff::integers;

    std::string m_preset; // "cp:n" | "rp:n" | "" when custom/formal
    std::optional<PresentationSpec> m_custom;
    std::string n_preset; // "point" | "cp-linear:k" | "" when custom/formal
    std::optional<PresentationSpec> n_custom;
    EmbeddingSpec embedding;

    int rank = 0;                     // 0 = derive from presets / dims
    std::vector<std::string> e_chern; // class expressions (formal: names)
    bool e_chern_given = false;

    int dim_m = -1, dim_n = -1; // formal mode
};

/// Parses scenario JSON. Errors carry the location of the offending token.
Scenario parse_scenario(const std::string& json_text);

/// Builds a scenario from CLI positional arguments:
///   M-preset N-preset          e.g. "cp:3" "cp-linear:1"
///   formal dimM=6 dimN=2 [rank=2] [chern=e1,e2]
Scenario scenario_from_positional(const std::vector<std::string>& args);

struct Built {
    BlowupContext::Ptr ctx;
    std::string label;
};

/// Resolves presets, parses class expressions, wires the embedding tables
/// and runs every build-time validation (Whitney, dimension equation, table
/// consistency). Scenario-level problems throw ScenarioError; mathematical
/// inconsistencies propagate the engine's validation errors.
Built build_scenario(const Scenario& s);

/// Name -> generator table over all spaces of the context (M, N, xi); used
/// to re-parse printed classes.
GeneratorTable generator_table(const BlowupContext& ctx);

// ---------------------------------------------------------------------------
// Command-level results

struct ClassLine {
    int degree = 0; // cohomological degree
    int index = 0;  // class index (degree / unit)
    std::string rendered;
    std::string m_part;
    std::string m_shriek_part; // formal contexts only, "" when concrete
    std::vector<std::string> exc_parts;
};

struct ComputeResult {
    std::string scenario_label;
    Coeff mode = Coeff::integers;
    bool formal = false;
    int rank = 0, dim_m = 0, dim_n = 0;
    std::vector<ClassLine> classes;
    std::vector<std::pair<std::string, Int>> char_numbers; // concrete only
    std::optional<Int> euler;                              // concrete only
};

/// Total class of the blow-up in canonical form, degree by degree up to
/// class index max_index (negative = everything); concrete scenarios also
/// get characteristic numbers and the Euler characteristic.
ComputeResult run_compute(const Built& built, int max_index);

struct VerifyResult {
    std::string scenario_label;
    std::vector<CheckReport> checks;
    bool all_pass() const;
};

VerifyResult run_verify(const Built& built, int trials, std::uint64_t seed);

/// Integral of the top class of the blow-up; concrete scenarios only.
Int run_euler(const Built& built);

std::string to_text(const ComputeResult& r);
std::string to_json(const ComputeResult& r);
std::string to_text(const VerifyResult& r);
std::string to_json(const VerifyResult& r);

} // namespace blowup
