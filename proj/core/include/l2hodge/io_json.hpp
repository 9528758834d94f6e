#ifndef L2HODGE_IO_JSON_HPP
#define L2HODGE_IO_JSON_HPP

#include <l2hodge/family.hpp>
#include <l2hodge/hodge_formulas.hpp>
#include <l2hodge/matrix.hpp>
#include <l2hodge/monodromy.hpp>
#include <l2hodge/table_verify.hpp>
#include <l2hodge/weight_filtration.hpp>

#include <json.hpp>

#include <string>

namespace l2hodge {

using Json = nlohmann::json;

// Matrix wire format, used system-wide:
//   {"n": 2, "entries": [["1", "1/2"], ["0", "1"]]}
// with every entry a rational literal string "p/q" or integer string "p".
// Rejects non-square data and zero denominators.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Family wire format:
//   {"weight": 3, "genus": 0, "a": "0", "b": "0", "decomposed": false,
//    "theta_nonzero": [true, true, true],
//    "points": [{"label": "0", "matrix": {...}, "ramified": true},
//               {"label": "1", "type": "I"}]}
Json family_to_json(const FamilyDescriptor& f);
FamilyDescriptor family_from_json(const Json& j);

HodgeInput hodge_input_from_json(const Json& j, int weight);

struct DecomposedInput {
    long g = 0, a = 0, b = 0, n_ii = 0, n_iv = 0, num_d = 0;
};
DecomposedInput decomposed_input_from_json(const Json& j);

Json hodge_numbers_to_json(const HodgeNumbers& h);
Json classify_result_to_json(const ClassifyResult& r);
Json monodromy_class_to_json(const MonodromyClass& c);
Json filtration_to_json(const WeightFiltration& w);
Json twist_ledger_to_json(const TwistLedger& t);
Json degree_ledger_to_json(const DegreeLedger& d);
Json resolve_to_json(const ResolveResult& r);
Json audit_report_to_json(const AuditReport& r);

Json load_json_file(const std::string& path);

} // namespace l2hodge

#endif
