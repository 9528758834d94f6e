#include <l2hodge/io_json.hpp>

#include <l2hodge/error.hpp>

#include <fstream>
#include <sstream>

namespace l2hodge {

namespace {

long long_field(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = j.at(key);
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) return to_long(rational_from_string(v.get<std::string>()));
    throw Error(errc::malformed_input, where + ": '" + key + "' must be an integer");
}

std::optional<long> opt_long_field(const Json& j, const std::string& key,
                                   const std::string& where) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return long_field(j, key, where);
}

} // namespace

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"n", m.n()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
    require(j.is_object(), errc::malformed_input, "matrix: expected a JSON object");
    require(j.contains("n") && j.at("n").is_number_integer(), errc::malformed_input,
            "matrix: missing integer field 'n'");
    const long n = j.at("n").get<long>();
    require(n >= 1 && n <= 16, errc::malformed_input, "matrix: n must be in 1..16");
    require(j.contains("entries") && j.at("entries").is_array(), errc::malformed_input,
            "matrix: missing 'entries' array");
    const Json& entries = j.at("entries");
    require(static_cast<long>(entries.size()) == n, errc::malformed_input,
            "matrix: entries are not square (row count != n)");

    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : entries) {
        require(row.is_array() && static_cast<long>(row.size()) == n, errc::malformed_input,
                "matrix: entries are not square (row length != n)");
        for (const auto& cell : row) {
            require(cell.is_string(), errc::malformed_input,
                    "matrix: entries must be rational literal strings like \"3\" or \"-1/2\"");
            values.push_back(rational_from_string(cell.get<std::string>()));
        }
    }
    return Matrix(static_cast<int>(n), std::move(values));
}

Json family_to_json(const FamilyDescriptor& f) {
    Json j{{"weight", f.weight}, {"genus", f.genus}, {"decomposed", f.decomposed}};
    if (f.a) j["a"] = std::to_string(*f.a);
    if (f.b) j["b"] = std::to_string(*f.b);
    if (f.a_prime) j["a_prime"] = std::to_string(*f.a_prime);
    if (f.b_prime) j["b_prime"] = std::to_string(*f.b_prime);
    if (!f.theta_nonzero.empty()) {
        Json theta = Json::array();
        for (bool t : f.theta_nonzero) theta.push_back(t);
        j["theta_nonzero"] = std::move(theta);
    }
    Json points = Json::array();
    for (const auto& p : f.points) {
        Json pj{{"label", p.label}};
        if (p.monodromy) pj["matrix"] = matrix_to_json(*p.monodromy);
        if (p.declared) pj["type"] = kind_name(*p.declared);
        if (p.ramified) pj["ramified"] = true;
        points.push_back(std::move(pj));
    }
    j["points"] = std::move(points);
    return j;
}

FamilyDescriptor family_from_json(const Json& j) {
    require(j.is_object(), errc::malformed_input, "family: expected a JSON object");
    require(j.contains("weight"), errc::malformed_input, "family: missing 'weight'");
    FamilyDescriptor f;
    f.weight = static_cast<int>(long_field(j, "weight", "family"));
    require(f.weight >= 1 && f.weight <= 3, errc::malformed_input,
            "family: weight must be 1, 2 or 3");
    f.genus = j.contains("genus") ? long_field(j, "genus", "family") : 0;
    f.a = opt_long_field(j, "a", "family");
    f.b = opt_long_field(j, "b", "family");
    f.a_prime = opt_long_field(j, "a_prime", "family");
    f.b_prime = opt_long_field(j, "b_prime", "family");
    if (j.contains("decomposed")) {
        require(j.at("decomposed").is_boolean(), errc::malformed_input,
                "family: 'decomposed' must be a boolean");
        f.decomposed = j.at("decomposed").get<bool>();
    }
    if (j.contains("theta_nonzero")) {
        const Json& theta = j.at("theta_nonzero");
        require(theta.is_array() && static_cast<int>(theta.size()) == f.weight,
                errc::malformed_input,
                "family: 'theta_nonzero' must list one flag per Higgs arrow");
        for (const auto& t : theta) {
            require(t.is_boolean(), errc::malformed_input, "family: theta flags must be booleans");
            f.theta_nonzero.push_back(t.get<bool>());
        }
    }
    require(j.contains("points") && j.at("points").is_array(), errc::malformed_input,
            "family: missing 'points' array");
    for (const auto& pj : j.at("points")) {
        require(pj.is_object() && pj.contains("label") && pj.at("label").is_string(),
                errc::malformed_input, "family: each point needs a string 'label'");
        MarkedPoint p;
        p.label = pj.at("label").get<std::string>();
        const bool has_matrix = pj.contains("matrix");
        const bool has_type = pj.contains("type");
        require(has_matrix != has_type, errc::malformed_input,
                "point '" + p.label + "': exactly one of 'matrix' or 'type' is required");
        if (has_matrix) p.monodromy = matrix_from_json(pj.at("matrix"));
        if (has_type) {
            require(pj.at("type").is_string(), errc::malformed_input,
                    "point '" + p.label + "': 'type' must be a string");
            p.declared = kind_from_name(pj.at("type").get<std::string>());
        }
        if (pj.contains("ramified")) {
            require(pj.at("ramified").is_boolean(), errc::malformed_input,
                    "point '" + p.label + "': 'ramified' must be a boolean");
            p.ramified = pj.at("ramified").get<bool>();
        }
        f.points.push_back(std::move(p));
    }
    return f;
}

HodgeInput hodge_input_from_json(const Json& j, int weight) {
    require(j.is_object(), errc::malformed_input, "hodge input: expected a JSON object");
    HodgeInput in;
    in.weight = weight;
    in.genus = j.contains("g") ? long_field(j, "g", "hodge input")
                               : long_field(j, "genus", "hodge input");
    in.a = long_field(j, "a", "hodge input");
    in.b = opt_long_field(j, "b", "hodge input");
    in.counts.weight = weight;
    require(j.contains("counts") && j.at("counts").is_object(), errc::malformed_input,
            "hodge input: missing 'counts' object");
    const Json& counts = j.at("counts");
    in.counts.n_i = counts.contains("I") ? long_field(counts, "I", "counts") : 0;
    in.counts.n_ii = counts.contains("II") ? long_field(counts, "II", "counts") : 0;
    in.counts.n_iii = counts.contains("III") ? long_field(counts, "III", "counts") : 0;
    in.counts.n_iv = counts.contains("IV") ? long_field(counts, "IV", "counts") : 0;
    if (j.contains("theta_nonzero")) {
        const Json& theta = j.at("theta_nonzero");
        require(theta.is_array() && static_cast<int>(theta.size()) == weight,
                errc::malformed_input, "hodge input: expected one theta flag per arrow");
        for (const auto& t : theta) in.theta_nonzero.push_back(t.get<bool>());
    } else {
        in.theta_nonzero.assign(static_cast<std::size_t>(weight), true);
    }
    if (j.contains("irreducible")) in.irreducible = j.at("irreducible").get<bool>();
    return in;
}

DecomposedInput decomposed_input_from_json(const Json& j) {
    require(j.is_object(), errc::malformed_input, "decomposed input: expected a JSON object");
    DecomposedInput in;
    in.g = j.contains("g") ? long_field(j, "g", "decomposed input")
                           : long_field(j, "genus", "decomposed input");
    in.a = long_field(j, "a", "decomposed input");
    in.b = long_field(j, "b", "decomposed input");
    if (j.contains("counts")) {
        const Json& counts = j.at("counts");
        in.n_ii = counts.contains("II") ? long_field(counts, "II", "counts") : 0;
        in.n_iv = counts.contains("IV") ? long_field(counts, "IV", "counts") : 0;
    } else {
        in.n_ii = long_field(j, "nII", "decomposed input");
        in.n_iv = long_field(j, "nIV", "decomposed input");
    }
    in.num_d = j.contains("num_d") ? long_field(j, "num_d", "decomposed input")
                                   : in.n_ii + in.n_iv;
    return in;
}

Json hodge_numbers_to_json(const HodgeNumbers& h) {
    Json j{{"weight", h.weight}, {"total", h.total}};
    for (int p = h.weight; p >= 0; --p) {
        const std::string key = "h" + std::to_string(p) + std::to_string(h.weight - p);
        j[key] = h.hpq(p);
    }
    return j;
}

Json monodromy_class_to_json(const MonodromyClass& c) {
    Json j{{"kind", kind_name(c.kind)}, {"semisimple_order", c.semisimple_order}};
    Json blocks = Json::array();
    for (int b : c.unipotent_blocks) blocks.push_back(b);
    j["blocks"] = std::move(blocks);
    return j;
}

Json classify_result_to_json(const ClassifyResult& r) {
    if (const auto* cls = std::get_if<MonodromyClass>(&r)) return monodromy_class_to_json(*cls);
    const auto& err = std::get<ClassificationError>(r);
    return Json{{"error", reason_name(err.reason)}, {"detail", err.detail}};
}

Json filtration_to_json(const WeightFiltration& w) {
    Json j{{"m", w.m}, {"dim", w.dim}};
    Json dims = Json::array();
    const auto gr = w.graded_dims();
    for (int k = -w.m; k <= w.m; ++k) {
        dims.push_back(Json{{"k", k}, {"dim", gr[static_cast<std::size_t>(k + w.m)]}});
    }
    j["graded_dims"] = std::move(dims);
    Json levels = Json::array();
    for (int k = -w.m; k <= w.m; ++k) {
        Json basis = Json::array();
        for (const auto& v : w.level(k)) {
            Json vec = Json::array();
            for (const auto& x : v) vec.push_back(to_string(x));
            basis.push_back(std::move(vec));
        }
        levels.push_back(Json{{"k", k}, {"basis", std::move(basis)}});
    }
    j["levels"] = std::move(levels);
    return j;
}

Json twist_ledger_to_json(const TwistLedger& t) {
    Json lines = Json::array();
    for (int p = t.weight; p >= 0; --p) {
        lines.push_back(Json{{"p", p},
                             {"q", t.weight - p},
                             {"twist0", t.twist0[static_cast<std::size_t>(p)]},
                             {"twist1", t.twist1[static_cast<std::size_t>(p)]}});
    }
    return Json{{"weight", t.weight}, {"lines", std::move(lines)}};
}

Json degree_ledger_to_json(const DegreeLedger& d) {
    Json lines = Json::array();
    for (int p = d.weight; p >= 0; --p) {
        lines.push_back(Json{{"p", p},
                             {"q", d.weight - p},
                             {"deg0", d.deg0[static_cast<std::size_t>(p)]},
                             {"deg1", d.deg1[static_cast<std::size_t>(p)]}});
    }
    Json j{{"weight", d.weight}, {"lines", std::move(lines)}};
    Json notes = Json::array();
    for (const auto& n : d.notes) notes.push_back(n);
    j["notes"] = std::move(notes);
    return j;
}

Json resolve_to_json(const ResolveResult& r) {
    Json j{{"weight", r.counts.weight},
           {"counts",
            Json{{"I", r.counts.n_i},
                 {"II", r.counts.n_ii},
                 {"III", r.counts.n_iii},
                 {"IV", r.counts.n_iv}}}};
    Json points = Json::array();
    for (const auto& p : r.points) {
        Json pj{{"label", p.label}, {"kind", kind_name(p.kind)}, {"dropped", p.dropped}};
        if (p.details) {
            pj["semisimple_order"] = p.details->semisimple_order;
            Json blocks = Json::array();
            for (int b : p.details->unipotent_blocks) blocks.push_back(b);
            pj["blocks"] = std::move(blocks);
        }
        points.push_back(std::move(pj));
    }
    j["points"] = std::move(points);
    return j;
}

Json audit_report_to_json(const AuditReport& r) {
    Json rows = Json::array();
    for (const auto& ra : r.rows) {
        Json row{{"model", ra.row.model_id},
                 {"name", ra.row.model},
                 {"t_infty", ra.row.t_infty},
                 {"e", ra.row.e},
                 {"h1", ra.row.h1},
                 {"pass", ra.pass}};
        if (ra.row.k) row["k"] = *ra.row.k;
        Json assignments = Json::array();
        for (const auto& a : ra.assignments) {
            Json aj{{"index", a.index},           {"h40", a.h40},
                    {"h31", a.h31},               {"h22", a.h22},
                    {"a", a.a},                   {"b", a.b},
                    {"component_sum", a.component_sum},
                    {"sum_ok", a.sum_ok},         {"n_iv", a.n_iv},
                    {"identity_ok", a.identity_ok},
                    {"feasible", a.feasible}};
            if (a.feasible) {
                aj["t_max"] = a.t_max;
                aj["n_i_at_t0"] = a.n_i_at(0);
                aj["n_ii_at_t0"] = a.n_ii_at(0);
            }
            assignments.push_back(std::move(aj));
        }
        row["assignments"] = std::move(assignments);
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)},
                {"pass_count", r.pass_count},
                {"flag_count", r.flag_count}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::malformed_input, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw Error(errc::malformed_input, "'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace l2hodge
