#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "document.hpp"
#include "norm_check.hpp"

namespace pact {

/// Exit code plus the machine-readable report. 0 all pass, 1 a property or
/// decision came out negative, 2 the input was unusable.
struct CliResult {
    int code = 0;
    Json report;
};

namespace clidetail {

inline Json violations_json(const Report& rep) {
    Json arr = Json::array();
    for (const auto& v : rep.violations())
        arr.push_back(Json{{"rule", v.rule}, {"witness", v.witness}});
    return arr;
}

inline Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (std::size_t c = 0; c < v.size(); ++c) arr.push_back(v[c].str());
    return arr;
}

inline Json matrix_json(const DenseMatrix& m) {
    Json arr = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(vec_json(m.row(r)));
    return arr;
}

inline CliResult input_error(const std::string& command, const std::string& what) {
    return {2, Json{{"command", command}, {"error", what}}};
}

/// The family to work with: the document's if it carries one, otherwise the
/// canonical one. The obstruction case is reported by the caller.
inline FamilyOutcome pick_family(const Document& d) {
    if (d.family) return *d.family;
    return canonical_family(*d.action);
}

inline Json obstruction_json(const FamilyObstruction& obs) {
    return Json{{"rule", obs.ambiguous ? "family-witness-ambiguous" : "family-witness-missing"},
                {"witness", obs.describe()}};
}

}  // namespace clidetail

inline CliResult run_schema(const Json& doc) {
    std::vector<std::string> notes = schema_check(doc);
    Json rep{{"command", "schema"}, {"ok", notes.empty()}, {"diagnostics", notes}};
    return {notes.empty() ? 0 : 2, rep};
}

inline CliResult run_validate(const Document& d) {
    Json checks = Json::array();
    bool ok = true;
    auto record = [&](const char* target, const Report& rep) {
        checks.push_back(Json{{"target", target},
                              {"verdict", rep.pass() ? "pass" : "fail"},
                              {"violations", clidetail::violations_json(rep)}});
        ok = ok && rep.pass();
    };
    record("group", check_group(*d.group));
    if (d.algebra) record("algebra", check_star_algebra(*d.algebra));
    if (d.realization) record("realization", check_realization(*d.algebra, *d.realization));
    if (d.action) record("action", check_partial_action(*d.action));
    if (d.set_action) record("set-action", check_set_paction(*d.set_action));
    return {ok ? 0 : 1, Json{{"command", "validate"}, {"ok", ok}, {"checks", checks}}};
}

inline CliResult run_units(const Document& d) {
    if (!d.action) return clidetail::input_error("units", "document has no action");
    try {
        Report rep = unital_identities_check(*d.action);
        return {rep.pass() ? 0 : 1, Json{{"command", "units"},
                                         {"ok", rep.pass()},
                                         {"violations", clidetail::violations_json(rep)}}};
    } catch (const std::invalid_argument& e) {
        return {1, Json{{"command", "units"}, {"ok", false}, {"reason", e.what()}}};
    }
}

inline CliResult run_decide(const Document& d) {
    if (!d.action) return clidetail::input_error("decide", "document has no action");
    Decision dec = decide(*d.action);
    if (dec.yes())
        return {0, Json{{"command", "decide"},
                        {"answer", "yes"},
                        {"envelope_dim", dec.envelope->envelope_dim()},
                        {"clauses", dec.envelope->clauses}}};
    return {1, Json{{"command", "decide"},
                    {"answer", "no"},
                    {"reasons", clidetail::violations_json(dec.reasons)}}};
}

inline CliResult run_globalize(const Document& d) {
    if (!d.action) return clidetail::input_error("globalize", "document has no action");
    FamilyOutcome fo = clidetail::pick_family(d);
    if (const auto* obs = std::get_if<FamilyObstruction>(&fo))
        return {1, Json{{"command", "globalize"}, {"obstruction", clidetail::obstruction_json(*obs)}}};
    try {
        EnvelopePair env = globalize(*d.action, std::get<EnvelopingFamily>(fo));
        Json orbit = Json::array();
        for (std::size_t q = 0; q < env.envelope_dim(); ++q)
            orbit.push_back(clidetail::vec_json(env.orbit_span.basis_row(q)));
        Json structure = Json::array();
        const StarAlgebra& b = env.b_algebra;
        for (std::size_t q = 0; q < b.dim(); ++q)
            for (std::size_t p = 0; p < b.dim(); ++p)
                for (std::size_t k = 0; k < b.dim(); ++k)
                    if (!b.sc(q, p, k).is_zero())
                        structure.push_back(Json{q, p, k, b.sc(q, p, k).str()});
        Json beta = Json::array();
        for (std::size_t t = 0; t < env.base.group.order; ++t)
            beta.push_back(clidetail::matrix_json(env.beta.map(t)));
        return {0, Json{{"command", "globalize"},
                        {"envelope_dim", env.envelope_dim()},
                        {"clauses", env.clauses},
                        {"orbit_basis", orbit},
                        {"b_structure", structure},
                        {"b_involution", clidetail::matrix_json(b.involution())},
                        {"beta", beta},
                        {"mu_matrix", clidetail::matrix_json(env.mu_matrix)}}};
    } catch (const GlobalizeError& e) {
        return {1, Json{{"command", "globalize"},
                        {"clause", e.clause()},
                        {"witness", e.witness()}}};
    }
}

inline CliResult run_family_check(const Document& d) {
    if (!d.action) return clidetail::input_error("family-check", "document has no action");
    FamilyOutcome fo = clidetail::pick_family(d);
    if (const auto* obs = std::get_if<FamilyObstruction>(&fo))
        return {1,
                Json{{"command", "family-check"}, {"obstruction", clidetail::obstruction_json(*obs)}}};
    const EnvelopingFamily& fam = std::get<EnvelopingFamily>(fo);
    Report alg = check_family(*d.action, fam, FamilyMode::algebraic);
    Report star = check_family(*d.action, fam, FamilyMode::star);
    bool ok = alg.pass() && star.pass();
    return {ok ? 0 : 1, Json{{"command", "family-check"},
                             {"source", d.family ? "document" : "canonical"},
                             {"ok", ok},
                             {"algebraic", clidetail::violations_json(alg)},
                             {"star", clidetail::violations_json(star)}}};
}

inline CliResult run_compare(const Document& d) {
    if (!d.action) return clidetail::input_error("compare", "document has no action");
    if (!d.candidate) return clidetail::input_error("compare", "document has no candidate envelope");
    FamilyOutcome fo = clidetail::pick_family(d);
    if (const auto* obs = std::get_if<FamilyObstruction>(&fo))
        return {1, Json{{"command", "compare"}, {"obstruction", clidetail::obstruction_json(*obs)}}};
    try {
        std::vector<GMultiplier> ours =
            multiplier_inclusion(*d.action, std::get<EnvelopingFamily>(fo));
        std::vector<GMultiplier> theirs = multiplier_inclusion(*d.action, *d.candidate);
        InclusionComparison cmp = compare_inclusions(ours, theirs);
        Json rep{{"command", "compare"}, {"equal", cmp.equal}};
        if (!cmp.equal) rep["witness"] = cmp.witness;
        return {cmp.equal ? 0 : 1, rep};
    } catch (const std::invalid_argument& e) {
        return {1, Json{{"command", "compare"}, {"equal", false}, {"reason", e.what()}}};
    }
}

inline CliResult run_set_envelope(const Document& d) {
    if (!d.set_action) return clidetail::input_error("set-envelope", "document has no set action");
    Report rep = check_set_paction(*d.set_action);
    if (!rep.pass())
        return {1, Json{{"command", "set-envelope"},
                        {"ok", false},
                        {"violations", clidetail::violations_json(rep)}}};
    try {
        SetEnvelope env = set_envelope(*d.set_action);
        return {0, Json{{"command", "set-envelope"},
                        {"ok", true},
                        {"classes", env.classes},
                        {"class_of", env.class_of},
                        {"iota", env.iota},
                        {"beta", env.beta}}};
    } catch (const std::logic_error& e) {
        return {1, Json{{"command", "set-envelope"}, {"ok", false}, {"reason", e.what()}}};
    }
}

inline CliResult run_norm_check(const Document& d, std::optional<std::uint64_t> seed,
                                std::optional<std::size_t> samples) {
    if (!d.action) return clidetail::input_error("norm-check", "document has no action");
    if (!d.realization)
        return clidetail::input_error("norm-check", "document has no block realization");
    const std::uint64_t use_seed = seed.value_or(d.seed);
    const std::size_t use_samples = samples.value_or(d.samples);
    try {
        NormCheckResult res =
            norm_inequality_check(*d.action, *d.realization, use_samples, use_seed);
        Json wit = Json::array();
        for (std::size_t k = 0; k < res.violations.size() && k < 10; ++k) {
            const NormViolation& v = res.violations[k];
            wit.push_back(Json{{"sample", v.sample},
                               {"r", v.r},
                               {"t", v.t},
                               {"a", clidetail::vec_json(v.a)},
                               {"lhs", v.lhs},
                               {"rhs", v.rhs}});
        }
        return {res.pass() ? 0 : 1, Json{{"command", "norm-check"},
                                         {"samples", res.samples},
                                         {"seed", res.seed},
                                         {"violations", res.violations.size()},
                                         {"max_slack", res.max_slack},
                                         {"witnesses", wit}}};
    } catch (const std::invalid_argument& e) {
        return clidetail::input_error("norm-check", e.what());
    }
}

/// Plain-text rendering of a report for terminals; the json format is the
/// stable machine interface.
inline std::string render_text(const Json& rep) {
    std::ostringstream os;
    // Index-tuple witnesses read as "rule at (t=1)"; sentence witnesses as
    // "rule: ...".
    auto line = [&](const std::string& pad, const Json& e) {
        const std::string w = e["witness"].get<std::string>();
        const char* sep = (!w.empty() && w.front() == '(') ? " at " : ": ";
        os << pad << e["rule"].get<std::string>() << sep << w << "\n";
    };
    std::function<void(const Json&, int)> walk = [&](const Json& j, int depth) {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        for (const auto& [key, val] : j.items()) {
            if (val.is_array() && !val.empty() && val[0].is_object() &&
                val[0].contains("rule")) {
                os << pad << key << ":\n";
                for (const Json& e : val) line(pad + "  ", e);
            } else if (val.is_array() && !val.empty() && val[0].is_object() &&
                       val[0].contains("target")) {
                os << pad << key << ":\n";
                for (const Json& e : val) {
                    os << pad << "  " << e["target"].get<std::string>() << ": "
                       << e["verdict"].get<std::string>() << "\n";
                    for (const Json& v : e["violations"]) line(pad + "    ", v);
                }
            } else if (val.is_array() && !val.empty() && val[0].is_string() &&
                       !val[0].get<std::string>().empty()) {
                os << pad << key << ":\n";
                for (const Json& e : val)
                    os << pad << "  " << e.get<std::string>() << "\n";
            } else if (val.is_object()) {
                os << pad << key << ":\n";
                walk(val, depth + 1);
            } else if (val.is_string()) {
                os << pad << key << ": " << val.get<std::string>() << "\n";
            } else {
                os << pad << key << ": " << val.dump() << "\n";
            }
        }
    };
    walk(rep, 0);
    return os.str();
}

/// Dispatch by subcommand name over a loaded document.
inline CliResult run_command(const std::string& name, const Document& d,
                             std::optional<std::uint64_t> seed = std::nullopt,
                             std::optional<std::size_t> samples = std::nullopt) {
    if (name == "validate") return run_validate(d);
    if (name == "units") return run_units(d);
    if (name == "decide") return run_decide(d);
    if (name == "globalize") return run_globalize(d);
    if (name == "family-check") return run_family_check(d);
    if (name == "compare") return run_compare(d);
    if (name == "set-envelope") return run_set_envelope(d);
    if (name == "norm-check") return run_norm_check(d, seed, samples);
    return clidetail::input_error(name, "unknown subcommand");
}

}  // namespace pact
