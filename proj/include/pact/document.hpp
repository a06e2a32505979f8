#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "block_realization.hpp"
#include "envelope.hpp"
#include "set_action.hpp"

namespace pact {

using Json = nlohmann::ordered_json;

/// Unusable input: schema violations, dangling cross references, objects that
/// cannot be constructed. Distinct from negative verdicts about well-formed
/// input, which are reported, not thrown.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a scenario file can carry. Scalars are strings in the document
/// ("p/q", "r/s i", "p/q+r/s i") and exact the moment they are read.
struct Document {
    std::optional<Group> group;
    std::optional<StarAlgebra> algebra;
    std::optional<BlockRealization> realization;
    std::optional<PartialAction> action;
    bool action_restricted = false;  // action came from cutting a global one down
    std::optional<EnvelopingFamily> family;
    std::optional<EnvelopeCandidate> candidate;
    std::optional<SetPAction> set_action;
    std::uint64_t seed = 42;
    std::size_t samples = 100;
};

namespace docdetail {

inline bool is_uint(const Json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

inline bool scalar_ok(const Json& j) {
    return j.is_string() && GaussianRational::parse(j.get<std::string>()).has_value();
}

struct SchemaLog {
    std::vector<std::string> notes;

    void err(const std::string& path, const std::string& what) { notes.push_back(path + ": " + what); }
};

inline void check_row(SchemaLog& log, const Json& j, const std::string& path, std::size_t len) {
    if (!j.is_array() || j.size() != len) {
        log.err(path, "expected " + std::to_string(len) + " scalar strings");
        return;
    }
    for (std::size_t c = 0; c < j.size(); ++c)
        if (!scalar_ok(j[c]))
            log.err(path + "/" + std::to_string(c),
                    j[c].is_string() ? "unparsable scalar '" + j[c].get<std::string>() + "'"
                                     : "expected a scalar string");
}

inline void check_matrix(SchemaLog& log, const Json& j, const std::string& path, std::size_t rows,
                         std::size_t cols) {
    if (!j.is_array() || j.size() != rows) {
        log.err(path, "expected " + std::to_string(rows) + " rows");
        return;
    }
    for (std::size_t r = 0; r < rows; ++r) check_row(log, j[r], path + "/" + std::to_string(r), cols);
}

inline void check_rows(SchemaLog& log, const Json& j, const std::string& path, std::size_t cols) {
    if (!j.is_array()) {
        log.err(path, "expected an array of rows");
        return;
    }
    for (std::size_t r = 0; r < j.size(); ++r) check_row(log, j[r], path + "/" + std::to_string(r), cols);
}

inline std::size_t algebra_schema(SchemaLog& log, const Json& j, const std::string& path) {
    if (!j.is_object()) {
        log.err(path, "expected an object");
        return 0;
    }
    std::size_t dim = 0;
    if (!j.contains("dim") || !is_uint(j["dim"]) || j["dim"].get<std::size_t>() == 0)
        log.err(path + "/dim", "expected a positive count");
    else
        dim = j["dim"].get<std::size_t>();
    if (!j.contains("structure") || !j["structure"].is_array())
        log.err(path + "/structure", "expected an array of [i, j, k, scalar] entries");
    else
        for (std::size_t e = 0; e < j["structure"].size(); ++e) {
            const Json& ent = j["structure"][e];
            const std::string p = path + "/structure/" + std::to_string(e);
            if (!ent.is_array() || ent.size() != 4) {
                log.err(p, "expected [i, j, k, scalar]");
                continue;
            }
            for (std::size_t c = 0; c < 3; ++c)
                if (!is_uint(ent[c]) || (dim && ent[c].get<std::size_t>() >= dim))
                    log.err(p + "/" + std::to_string(c), "index out of range");
            if (!scalar_ok(ent[3]))
                log.err(p + "/3", ent[3].is_string()
                                      ? "unparsable scalar '" + ent[3].get<std::string>() + "'"
                                      : "expected a scalar string");
        }
    if (!j.contains("involution"))
        log.err(path + "/involution", "missing involution block");
    else if (dim)
        check_matrix(log, j["involution"], path + "/involution", dim, dim);
    for (const auto& [key, val] : j.items()) {
        (void)val;
        if (key != "dim" && key != "structure" && key != "involution")
            log.err(path + "/" + key, "unknown key");
    }
    return dim;
}

}  // namespace docdetail

/// Structural validation without constructing any algebraic object: key
/// shapes, index bounds that are knowable locally, and every scalar literal.
/// Returns one note per problem, each naming the JSON path.
inline std::vector<std::string> schema_check(const Json& doc) {
    using namespace docdetail;
    SchemaLog log;
    if (!doc.is_object()) {
        log.err("/", "document must be an object");
        return log.notes;
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<long long>() != 1)
        log.err("/version", "unsupported document version, expected 1");

    static const std::vector<std::string> known = {"version",   "group",  "algebra",
                                                   "realization", "action", "family",
                                                   "candidate", "set_action", "params"};
    for (const auto& [key, val] : doc.items()) {
        (void)val;
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) log.err("/" + key, "unknown key");
    }

    if (!doc.contains("group")) {
        log.err("/group", "missing group");
    } else {
        const Json& g = doc["group"];
        if (!g.is_object() || (g.contains("describe") == g.contains("table")))
            log.err("/group", "expected exactly one of 'describe' or 'table'");
        else if (g.contains("describe")) {
            if (!g["describe"].is_string()) log.err("/group/describe", "expected a string");
        } else {
            const Json& t = g["table"];
            if (!t.is_array() || t.empty())
                log.err("/group/table", "expected a nonempty square array");
            else {
                const std::size_t n = t.size();
                for (std::size_t r = 0; r < n; ++r) {
                    if (!t[r].is_array() || t[r].size() != n) {
                        log.err("/group/table/" + std::to_string(r), "row of length " +
                                                                         std::to_string(n) +
                                                                         " expected");
                        continue;
                    }
                    for (std::size_t c = 0; c < n; ++c)
                        if (!is_uint(t[r][c]) || t[r][c].get<std::size_t>() >= n)
                            log.err("/group/table/" + std::to_string(r) + "/" + std::to_string(c),
                                    "entry out of range");
                }
            }
        }
    }

    std::size_t dim = 0;
    if (doc.contains("algebra")) dim = algebra_schema(log, doc["algebra"], "/algebra");

    if (doc.contains("realization")) {
        const Json& r = doc["realization"];
        if (!doc.contains("algebra")) log.err("/realization", "realization requires an algebra");
        if (!r.is_object() || !r.contains("block_sizes") || !r.contains("images")) {
            log.err("/realization", "expected block_sizes and images");
        } else {
            const Json& bs = r["block_sizes"];
            if (!bs.is_array() || bs.empty())
                log.err("/realization/block_sizes", "expected a nonempty array");
            std::vector<std::size_t> sizes;
            if (bs.is_array())
                for (std::size_t b = 0; b < bs.size(); ++b) {
                    if (!is_uint(bs[b]))
                        log.err("/realization/block_sizes/" + std::to_string(b), "expected a count");
                    else
                        sizes.push_back(bs[b].get<std::size_t>());
                }
            const Json& im = r["images"];
            if (!im.is_array() || (dim && im.size() != dim))
                log.err("/realization/images", "one image list per basis element required");
            else if (sizes.size() == bs.size())
                for (std::size_t i = 0; i < im.size(); ++i) {
                    const std::string p = "/realization/images/" + std::to_string(i);
                    if (!im[i].is_array() || im[i].size() != sizes.size()) {
                        log.err(p, "one matrix per block required");
                        continue;
                    }
                    for (std::size_t b = 0; b < sizes.size(); ++b)
                        check_matrix(log, im[i][b], p + "/" + std::to_string(b), sizes[b], sizes[b]);
                }
        }
    }

    if (doc.contains("action")) {
        const Json& a = doc["action"];
        if (!doc.contains("algebra")) log.err("/action", "action requires an algebra");
        if (!a.is_object() || (a.contains("restrict") == a.contains("domains"))) {
            log.err("/action", "expected either domains+maps or restrict");
        } else if (a.contains("domains")) {
            if (!a.contains("maps") || !a["maps"].is_array())
                log.err("/action/maps", "expected an array of matrices");
            if (!a["domains"].is_array())
                log.err("/action/domains", "expected an array of row lists");
            else if (dim)
                for (std::size_t t = 0; t < a["domains"].size(); ++t)
                    check_rows(log, a["domains"][t], "/action/domains/" + std::to_string(t), dim);
            if (a.contains("maps") && a["maps"].is_array() && dim)
                for (std::size_t t = 0; t < a["maps"].size(); ++t) {
                    const Json& mt = a["maps"][t];
                    const std::string p = "/action/maps/" + std::to_string(t);
                    if (!mt.is_array() || mt.size() != dim)
                        log.err(p, "expected " + std::to_string(dim) + " rows");
                    else
                        for (std::size_t r = 0; r < dim; ++r)
                            check_row(log, mt[r], p + "/" + std::to_string(r), mt[0].is_array() ? mt[0].size() : 0);
                }
        } else {
            const Json& res = a["restrict"];
            if (!res.is_object() || !res.contains("maps") || !res.contains("ideal"))
                log.err("/action/restrict", "expected maps and ideal");
            else if (dim) {
                if (!res["maps"].is_array())
                    log.err("/action/restrict/maps", "expected an array of matrices");
                else
                    for (std::size_t t = 0; t < res["maps"].size(); ++t)
                        check_matrix(log, res["maps"][t],
                                     "/action/restrict/maps/" + std::to_string(t), dim, dim);
                check_rows(log, res["ideal"], "/action/restrict/ideal", dim);
            }
        }
    }

    if (doc.contains("family")) {
        const Json& f = doc["family"];
        if (!doc.contains("algebra")) log.err("/family", "family requires an algebra");
        if (!f.is_object() || !f.contains("tensors") || !f["tensors"].is_array())
            log.err("/family", "expected a tensors array");
        else if (dim)
            for (std::size_t t = 0; t < f["tensors"].size(); ++t) {
                const Json& ft = f["tensors"][t];
                const std::string pt = "/family/tensors/" + std::to_string(t);
                if (!ft.is_array() || ft.size() != dim) {
                    log.err(pt, "expected " + std::to_string(dim) + " rows of values");
                    continue;
                }
                for (std::size_t i = 0; i < dim; ++i)
                    check_rows(log, ft[i], pt + "/" + std::to_string(i), dim);
            }
    }

    if (doc.contains("candidate")) {
        const Json& c = doc["candidate"];
        if (!c.is_object() || !c.contains("algebra") || !c.contains("maps") ||
            !c.contains("embedding")) {
            log.err("/candidate", "expected algebra, maps and embedding");
        } else {
            std::size_t cdim = algebra_schema(log, c["algebra"], "/candidate/algebra");
            if (cdim) {
                if (!c["maps"].is_array())
                    log.err("/candidate/maps", "expected an array of matrices");
                else
                    for (std::size_t t = 0; t < c["maps"].size(); ++t)
                        check_matrix(log, c["maps"][t], "/candidate/maps/" + std::to_string(t),
                                     cdim, cdim);
                if (dim) check_matrix(log, c["embedding"], "/candidate/embedding", cdim, dim);
            }
        }
    }

    if (doc.contains("set_action")) {
        const Json& s = doc["set_action"];
        if (!s.is_object() || !s.contains("points") || !is_uint(s["points"])) {
            log.err("/set_action", "expected points, subsets and maps");
        } else {
            const std::size_t pts = s["points"].get<std::size_t>();
            for (const char* key : {"subsets", "maps"}) {
                const std::string p = std::string("/set_action/") + key;
                if (!s.contains(key) || !s[key].is_array()) {
                    log.err(p, "expected an array per group element");
                    continue;
                }
                for (std::size_t t = 0; t < s[key].size(); ++t) {
                    const Json& lst = s[key][t];
                    if (!lst.is_array()) {
                        log.err(p + "/" + std::to_string(t), "expected an array of points");
                        continue;
                    }
                    for (std::size_t k = 0; k < lst.size(); ++k)
                        if (!is_uint(lst[k]) || lst[k].get<std::size_t>() >= pts)
                            log.err(p + "/" + std::to_string(t) + "/" + std::to_string(k),
                                    "point out of range");
                }
            }
        }
    }

    if (doc.contains("params")) {
        const Json& p = doc["params"];
        if (!p.is_object())
            log.err("/params", "expected an object");
        else
            for (const auto& [key, val] : p.items()) {
                if (key != "seed" && key != "samples")
                    log.err("/params/" + key, "unknown key");
                else if (!is_uint(val))
                    log.err("/params/" + key, "expected a number");
            }
    }

    return log.notes;
}

namespace docdetail {

inline GaussianRational scalar_from(const Json& j) {
    auto z = GaussianRational::parse(j.get<std::string>());
    if (!z) throw DocumentError("unparsable scalar '" + j.get<std::string>() + "'");
    return *z;
}

inline Vec vec_from(const Json& j) {
    Vec v(j.size());
    for (std::size_t c = 0; c < j.size(); ++c) v[c] = scalar_from(j[c]);
    return v;
}

inline DenseMatrix matrix_from(const Json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    DenseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from(j[r][c]);
    return m;
}

inline StarAlgebra algebra_from(const Json& j) {
    const std::size_t dim = j["dim"].get<std::size_t>();
    std::vector<GaussianRational> sc(dim * dim * dim);
    for (const Json& ent : j["structure"]) {
        const std::size_t i = ent[0].get<std::size_t>();
        const std::size_t jj = ent[1].get<std::size_t>();
        const std::size_t k = ent[2].get<std::size_t>();
        sc[(i * dim + jj) * dim + k] = scalar_from(ent[3]);
    }
    return StarAlgebra(dim, std::move(sc), matrix_from(j["involution"]));
}

}  // namespace docdetail

/// Builds all objects a document describes. Assumes (and re-runs) the schema
/// check; any failure to construct or cross-reference throws DocumentError.
inline Document load_document(const Json& doc) {
    using namespace docdetail;
    {
        std::vector<std::string> notes = schema_check(doc);
        if (!notes.empty()) throw DocumentError(notes.front());
    }
    Document out;
    try {
        const Json& g = doc["group"];
        if (g.contains("describe")) {
            out.group = build_group(g["describe"].get<std::string>());
        } else {
            std::vector<std::vector<std::size_t>> rows;
            for (const Json& r : g["table"]) rows.push_back(r.get<std::vector<std::size_t>>());
            out.group = Group::from_table(rows);
        }
        const std::size_t n = out.group->order;

        if (doc.contains("algebra")) out.algebra = algebra_from(doc["algebra"]);

        if (doc.contains("realization")) {
            BlockRealization real;
            real.block_sizes = doc["realization"]["block_sizes"].get<std::vector<std::size_t>>();
            for (const Json& per_basis : doc["realization"]["images"]) {
                std::vector<Eigen::MatrixXcd> mats;
                for (std::size_t b = 0; b < per_basis.size(); ++b) {
                    const Json& mj = per_basis[b];
                    const auto sz = static_cast<Eigen::Index>(real.block_sizes[b]);
                    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sz, sz);
                    for (Eigen::Index r = 0; r < sz; ++r)
                        for (Eigen::Index c = 0; c < sz; ++c)
                            m(r, c) = scalar_from(mj[r][c]).to_complex();
                    mats.push_back(std::move(m));
                }
                real.images.push_back(std::move(mats));
            }
            out.realization = std::move(real);
        }

        if (doc.contains("action")) {
            const Json& a = doc["action"];
            const std::size_t d = out.algebra->dim();
            if (a.contains("domains")) {
                if (a["domains"].size() != n || a["maps"].size() != n)
                    throw DocumentError("action needs one domain and one map per group element");
                std::vector<Subspace> domains;
                for (const Json& rows : a["domains"]) {
                    std::vector<Vec> vs;
                    for (const Json& r : rows) vs.push_back(vec_from(r));
                    domains.push_back(Subspace::span(d, vs));
                }
                std::vector<DenseMatrix> maps;
                for (const Json& mj : a["maps"]) maps.push_back(matrix_from(mj));
                PartialAction pa{*out.group, *out.algebra, std::move(domains), std::move(maps)};
                pa.require_shapes();
                out.action = std::move(pa);
            } else {
                const Json& res = a["restrict"];
                if (res["maps"].size() != n)
                    throw DocumentError("restriction needs one map per group element");
                std::vector<DenseMatrix> maps;
                for (const Json& mj : res["maps"]) maps.push_back(matrix_from(mj));
                GlobalAction ga = GlobalAction::from_maps(*out.group, *out.algebra, std::move(maps));
                std::vector<Vec> rows;
                for (const Json& r : res["ideal"]) rows.push_back(vec_from(r));
                out.action = restrict_action(ga, Subspace::span(d, rows)).action;
                out.action_restricted = true;
            }
        }

        if (doc.contains("family")) {
            const Json& ft = doc["family"]["tensors"];
            if (ft.size() != n) throw DocumentError("family needs one tensor per group element");
            EnvelopingFamily fam;
            const std::size_t d = out.algebra->dim();
            fam.tensors.assign(n, std::vector<std::vector<Vec>>(d, std::vector<Vec>(d)));
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) fam.tensors[t][i][j] = vec_from(ft[t][i][j]);
            out.family = std::move(fam);
        }

        if (doc.contains("candidate")) {
            const Json& c = doc["candidate"];
            if (c["maps"].size() != n)
                throw DocumentError("candidate needs one map per group element");
            StarAlgebra calg = algebra_from(c["algebra"]);
            std::vector<DenseMatrix> maps;
            for (const Json& mj : c["maps"]) maps.push_back(matrix_from(mj));
            out.candidate = EnvelopeCandidate{
                GlobalAction::from_maps(*out.group, std::move(calg), std::move(maps)),
                matrix_from(c["embedding"])};
        }

        if (doc.contains("set_action")) {
            const Json& s = doc["set_action"];
            SetPAction spa;
            spa.group = *out.group;
            spa.points = s["points"].get<std::size_t>();
            spa.subsets = s["subsets"].get<std::vector<std::vector<std::size_t>>>();
            spa.maps = s["maps"].get<std::vector<std::vector<std::size_t>>>();
            spa.require_shapes();
            out.set_action = std::move(spa);
        }

        if (doc.contains("params")) {
            const Json& p = doc["params"];
            if (p.contains("seed")) out.seed = p["seed"].get<std::uint64_t>();
            if (p.contains("samples")) out.samples = p["samples"].get<std::size_t>();
        }
    } catch (const DocumentError&) {
        throw;
    } catch (const std::exception& e) {
        throw DocumentError(e.what());
    }
    return out;
}

}  // namespace pact
