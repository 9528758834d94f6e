#include <l2hodge/table_verify.hpp>

#include <l2hodge/default_table.hpp>
#include <l2hodge/error.hpp>
#include <l2hodge/io_json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace l2hodge {

LinearExpr parse_linear(const std::string& text) {
    const auto bad = [&] {
        return Error(errc::malformed_input, "bad table cell '" + text + "'");
    };
    if (text.empty()) throw bad();
    const std::size_t kpos = text.find('k');
    const auto parse_int = [&](const std::string& s) -> long {
        if (s.empty() || s == "+" || s == "-") throw bad();
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw bad();
        return std::stol(s);
    };
    if (kpos == std::string::npos) return {0, parse_int(text)};

    LinearExpr e;
    const std::string pre = text.substr(0, kpos);
    if (pre.empty())
        e.coef = 1;
    else if (pre == "-")
        e.coef = -1;
    else
        e.coef = parse_int(pre);
    const std::string post = text.substr(kpos + 1);
    if (!post.empty()) {
        if (post[0] != '+' && post[0] != '-') throw bad();
        e.constant = parse_int(post);
    }
    return e;
}

std::string linear_to_string(const LinearExpr& e) {
    if (!e.symbolic()) return std::to_string(e.constant);
    std::string out;
    if (e.coef == -1)
        out = "-k";
    else if (e.coef == 1)
        out = "k";
    else
        out = std::to_string(e.coef) + "k";
    if (e.constant > 0) out += "+" + std::to_string(e.constant);
    if (e.constant < 0) out += std::to_string(e.constant);
    return out;
}

std::size_t TableRow::option_count() const {
    std::size_t count = 1;
    for (const auto* list : {&h40, &h31, &h22, &a, &b}) count = std::max(count, list->size());
    return count;
}

bool TableRow::symbolic() const {
    if (e.symbolic() || h1.symbolic()) return true;
    for (const auto* list : {&h40, &h31, &h22, &a, &b})
        for (const auto& v : *list)
            if (v.symbolic()) return true;
    return false;
}

namespace {

std::vector<LinearExpr> parse_cell(const Json& j, const std::string& where) {
    const auto one = [&](const Json& v) -> LinearExpr {
        if (v.is_number_integer()) return {0, v.get<long>()};
        if (v.is_string()) return parse_linear(v.get<std::string>());
        throw Error(errc::malformed_input, where + ": cell must be an integer or a string");
    };
    if (j.is_array()) {
        require(!j.empty(), errc::malformed_input, where + ": empty option list");
        std::vector<LinearExpr> out;
        for (const auto& v : j) out.push_back(one(v));
        return out;
    }
    return {one(j)};
}

LinearExpr parse_scalar_cell(const Json& j, const std::string& where) {
    const auto list = parse_cell(j, where);
    require(list.size() == 1, errc::malformed_input, where + ": expected a single value");
    return list[0];
}

} // namespace

std::vector<TableRow> parse_table(const std::string& json_text) {
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw Error(errc::malformed_input, std::string("table is not valid JSON: ") + e.what());
    }
    require(root.is_object() && root.contains("models") && root["models"].is_array(),
            errc::malformed_input, "table file must be an object with a 'models' array");

    std::vector<TableRow> rows;
    for (const auto& model : root["models"]) {
        require(model.is_object(), errc::malformed_input, "each model must be an object");
        for (const char* key : {"id", "model", "t_infty", "rows"})
            require(model.contains(key), errc::malformed_input,
                    std::string("model is missing '") + key + "'");
        const long id = model["id"].get<long>();
        const std::string name = model["model"].get<std::string>();
        const std::string t_infty = model["t_infty"].get<std::string>();
        require(model["rows"].is_array() && !model["rows"].empty(), errc::malformed_input,
                "model " + std::to_string(id) + ": 'rows' must be a non-empty array");
        for (const auto& rj : model["rows"]) {
            const std::string where = "model " + std::to_string(id);
            for (const char* key : {"e", "h1", "h40", "h31", "h22", "a", "b"})
                require(rj.contains(key), errc::malformed_input,
                        where + ": row is missing '" + key + "'");
            TableRow row;
            row.model_id = id;
            row.model = name;
            row.t_infty = t_infty;
            row.e = parse_scalar_cell(rj["e"], where + "/e");
            row.h1 = parse_scalar_cell(rj["h1"], where + "/h1");
            row.h40 = parse_cell(rj["h40"], where + "/h40");
            row.h31 = parse_cell(rj["h31"], where + "/h31");
            row.h22 = parse_cell(rj["h22"], where + "/h22");
            row.a = parse_cell(rj["a"], where + "/a");
            row.b = parse_cell(rj["b"], where + "/b");
            const std::size_t count = row.option_count();
            for (const auto* list : {&row.h40, &row.h31, &row.h22, &row.a, &row.b})
                require(list->size() == count || list->size() == 1, errc::malformed_input,
                        where + " e=" + linear_to_string(row.e) +
                            ": option lists are positionally correlated and must have equal "
                            "length");
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<TableRow> load_table(const std::string& path) {
    auto j = load_json_file(path);
    return parse_table(j.dump());
}

const std::string& default_table_json() {
    static const std::string text = detail::default_table_raw;
    return text;
}

namespace {

std::vector<long> instantiate(const std::vector<LinearExpr>& cell, std::size_t count, long k) {
    std::vector<long> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& e = cell.size() == 1 ? cell[0] : cell[i];
        out.push_back(e.eval(k));
    }
    return out;
}

RowInstance instantiate_row(const TableRow& row, long k, bool symbolic) {
    RowInstance inst;
    inst.model_id = row.model_id;
    inst.model = row.model;
    inst.t_infty = row.t_infty;
    inst.e = row.e.eval(k);
    if (symbolic) inst.k = k;
    inst.h1 = row.h1.eval(k);
    const std::size_t count = row.option_count();
    inst.h40 = instantiate(row.h40, count, k);
    inst.h31 = instantiate(row.h31, count, k);
    inst.h22 = instantiate(row.h22, count, k);
    inst.a = instantiate(row.a, count, k);
    inst.b = instantiate(row.b, count, k);
    return inst;
}

} // namespace

std::vector<RowInstance> expand_rows(const std::vector<TableRow>& rows, long k_max) {
    require(k_max >= 1, errc::precondition_failed, "k_max must be >= 1");
    std::vector<RowInstance> out;
    for (const auto& row : rows) {
        if (row.symbolic())
            for (long k = 1; k <= k_max; ++k) out.push_back(instantiate_row(row, k, true));
        else
            out.push_back(instantiate_row(row, 0, false));
    }
    return out;
}

AssignmentAudit audit_row(const RowInstance& row, std::size_t assignment) {
    require(assignment < row.h40.size(), errc::malformed_input,
            "assignment index out of range");
    AssignmentAudit a;
    a.index = assignment;
    a.h40 = row.h40[assignment];
    a.h31 = row.h31[assignment];
    a.h22 = row.h22[assignment];
    a.a = row.a[assignment];
    a.b = row.b[assignment];

    a.component_sum = 2 * a.h40 + 2 * a.h31 + a.h22;
    a.sum_ok = row.h1 == a.component_sum;

    a.n_iv = a.h40 + 1 - a.a;
    a.identity_ok = a.h22 + 2 * a.h31 + 2 * a.a + 2 * a.n_iv == row.h1 + 2;
    a.t_max = std::min(a.n_i_at(0), a.n_ii_at(0));
    a.feasible = a.identity_ok && a.n_iv >= 0 && a.t_max >= 0;
    return a;
}

AuditReport audit_all(const std::vector<RowInstance>& rows) {
    AuditReport report;
    for (const auto& row : rows) {
        RowAudit ra;
        ra.row = row;
        for (std::size_t i = 0; i < row.h40.size(); ++i) {
            ra.assignments.push_back(audit_row(row, i));
            if (ra.assignments.back().pass()) ra.pass = true;
        }
        if (ra.pass)
            ++report.pass_count;
        else
            ++report.flag_count;
        report.rows.push_back(std::move(ra));
    }
    return report;
}

AuditReport audit_all(const std::vector<TableRow>& rows, long k_max) {
    return audit_all(expand_rows(rows, k_max));
}

void render_text(const AuditReport& report, std::ostream& out) {
    for (const auto& ra : report.rows) {
        std::ostringstream head;
        head << "#" << ra.row.model_id << " " << ra.row.model << " e=" << ra.row.e;
        if (ra.row.k) head << " (k=" << *ra.row.k << ")";
        out << head.str() << ": " << (ra.pass ? "PASS" : "FLAG") << "\n";
        for (const auto& a : ra.assignments) {
            out << "    option " << a.index + 1 << "/" << ra.assignments.size() << ": ";
            if (a.sum_ok)
                out << "sum ok (h1 = " << ra.row.h1 << ")";
            else
                out << "sum FAIL: 2*" << a.h40 << " + 2*" << a.h31 << " + " << a.h22 << " = "
                    << a.component_sum << " != h1 = " << ra.row.h1;
            out << "; ";
            if (a.feasible) {
                out << "counts feasible: (|I|,|II|,|III|,|IV|) = (" << a.n_i_at(0) << "-t, "
                    << a.n_ii_at(0) << "-t, t, " << a.n_iv << "), t in [0," << a.t_max << "]";
            } else if (!a.identity_ok) {
                out << "counts infeasible: identity " << a.h22 + 2 * a.h31 + 2 * a.a + 2 * a.n_iv
                    << " != h1 + 2 = " << ra.row.h1 + 2;
            } else if (a.n_iv < 0) {
                out << "counts infeasible: |IV| = " << a.n_iv << " < 0";
            } else {
                out << "counts infeasible: no t >= 0 keeps |I|, |II| nonnegative";
            }
            out << "\n";
        }
    }
    out << report.rows.size() << " row instances audited: " << report.pass_count << " pass, "
        << report.flag_count << " flagged\n";
}

} // namespace l2hodge
