#ifndef L2HODGE_TABLE_VERIFY_HPP
#define L2HODGE_TABLE_VERIFY_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace l2hodge {

/// Value of a table cell: coef*k + constant. Plain integers have coef 0.
struct LinearExpr {
    long coef = 0;
    long constant = 0;

    bool symbolic() const { return coef != 0; }
    long eval(long k) const { return coef * k + constant; }
    bool operator==(const LinearExpr&) const = default;
};

LinearExpr parse_linear(const std::string& text);  // "7", "2k", "2k-2", "k-1"
std::string linear_to_string(const LinearExpr& e);

/// One printed row of the model table. h40/h31/h22/a/b may be option lists;
/// options are positionally correlated, and scalar cells broadcast to the
/// row's option length.
struct TableRow {
    long model_id = 0;
    std::string model;
    std::string t_infty;  // opaque printed label; never interpreted
    LinearExpr e;
    LinearExpr h1;
    std::vector<LinearExpr> h40, h31, h22, a, b;

    std::size_t option_count() const;
    bool symbolic() const;
};

std::vector<TableRow> load_table(const std::string& path);
std::vector<TableRow> parse_table(const std::string& json_text);

/// Compiled-in copy of data/cy_table.json.
const std::string& default_table_json();

/// A concrete (row, k) instance: scalar h1, option lists of equal length.
struct RowInstance {
    long model_id = 0;
    std::string model;
    std::string t_infty;
    long e = 0;
    std::optional<long> k;  // set when expanded from a symbolic row
    long h1 = 0;
    std::vector<long> h40, h31, h22, a, b;
};

/// Symbolic rows expand to k = 1..k_max; plain rows pass through.
std::vector<RowInstance> expand_rows(const std::vector<TableRow>& rows, long k_max);

struct AssignmentAudit {
    std::size_t index = 0;
    long h40 = 0, h31 = 0, h22 = 0, a = 0, b = 0;
    long component_sum = 0;    // 2*h40 + 2*h31 + h22 (duality)
    bool sum_ok = false;       // h1 == component_sum
    long n_iv = 0;             // h40 + 1 - a, from h40 = g-1+a+|IV| at g=0
    bool identity_ok = false;  // h22 + 2*h31 + 2*a + 2*n_iv == h1 + 2
    long t_max = -1;           // feasible t = |III| range is [0, t_max]; empty if < 0
    bool feasible = false;

    bool pass() const { return sum_ok && feasible; }
    // the one-parameter count family: (|I|,|II|,|III|,|IV|) =
    // (h22+2+2b - t, h31+2+a-b-n_iv - t, t, n_iv)
    long n_i_at(long t) const { return h22 + 2 + 2 * b - t; }
    long n_ii_at(long t) const { return h31 + 2 + a - b - n_iv - t; }
};

struct RowAudit {
    RowInstance row;
    std::vector<AssignmentAudit> assignments;
    bool pass = false;  // some correlated assignment passes both checks
};

struct AuditReport {
    std::vector<RowAudit> rows;
    long pass_count = 0;
    long flag_count = 0;

    bool all_pass() const { return flag_count == 0; }
};

/// Sum check and count feasibility for one correlated assignment. Verdicts,
/// never exceptions.
AssignmentAudit audit_row(const RowInstance& row, std::size_t assignment);

AuditReport audit_all(const std::vector<RowInstance>& rows);
AuditReport audit_all(const std::vector<TableRow>& rows, long k_max);

void render_text(const AuditReport& report, std::ostream& out);

} // namespace l2hodge

#endif
