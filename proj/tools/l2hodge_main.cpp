// l2hodge: exact-arithmetic classification of local monodromies and
// evaluation of L2 Hodge numbers for rank-2/3/4 local systems over
// punctured curves. JSON in, JSON out; exit 0 on a verdict, 1 on malformed
// input or a failed precondition, 2 when table-check finds flagged rows.

#include <CLI11.hpp>

#include <l2hodge/error.hpp>
#include <l2hodge/family.hpp>
#include <l2hodge/hodge_formulas.hpp>
#include <l2hodge/io_json.hpp>
#include <l2hodge/monodromy.hpp>
#include <l2hodge/spectral.hpp>
#include <l2hodge/table_verify.hpp>
#include <l2hodge/weight_filtration.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using l2hodge::Json;

int run_classify(int weight, const std::string& matrix_path, long power) {
    const auto matrix = l2hodge::matrix_from_json(l2hodge::load_json_file(matrix_path));
    const auto verdict = l2hodge::power_and_classify(matrix, power, weight);
    std::cout << l2hodge::classify_result_to_json(verdict).dump(2) << "\n";
    return 0;
}

int run_filtration(const std::string& matrix_path) {
    const auto matrix = l2hodge::matrix_from_json(l2hodge::load_json_file(matrix_path));
    l2hodge::Matrix nilpotent = matrix;
    if (!l2hodge::is_nilpotent(matrix)) {
        l2hodge::require(l2hodge::is_unipotent(matrix), l2hodge::errc::malformed_input,
                         "matrix is neither nilpotent nor unipotent");
        nilpotent = l2hodge::nilpotent_log(matrix);
    }
    const auto filtration = l2hodge::weight_filtration(nilpotent);
    std::cout << l2hodge::filtration_to_json(filtration).dump(2) << "\n";
    return 0;
}

int run_ledger(int weight, const std::string& type) {
    const auto kind = l2hodge::kind_from_name(type);
    const auto ledger = l2hodge::twist_ledger_for(weight, kind);
    std::cout << l2hodge::twist_ledger_to_json(ledger).dump(2) << "\n";
    return 0;
}

int run_hodge(int weight, const std::string& input_path, bool decomposed) {
    const auto j = l2hodge::load_json_file(input_path);
    l2hodge::HodgeNumbers numbers;
    Json extra;
    if (decomposed) {
        l2hodge::require(weight == 3, l2hodge::errc::malformed_input,
                         "the decomposed case has weight 3");
        const auto in = l2hodge::decomposed_input_from_json(j);
        numbers = l2hodge::hodge_decomposed(in.g, in.a, in.b, in.n_ii, in.n_iv, in.num_d);
    } else {
        const auto in = l2hodge::hodge_input_from_json(j, weight);
        switch (weight) {
            case 1: numbers = l2hodge::hodge_weight1(in); break;
            case 2:
                numbers = l2hodge::hodge_weight2(in);
                extra["deg_e11"] = l2hodge::weight2_middle_degree(in.counts);
                break;
            default:
                numbers = l2hodge::hodge_weight3(in);
                extra["b_prime"] = l2hodge::weight3_b_prime(*in.b, in.counts);
                break;
        }
    }
    Json out = l2hodge::hodge_numbers_to_json(numbers);
    for (auto& [key, value] : extra.items()) out[key] = value;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_hodge_family(const std::string& family_path) {
    const auto family = l2hodge::family_from_json(l2hodge::load_json_file(family_path));
    const auto res = l2hodge::resolve(family);

    Json out;
    out["resolve"] = l2hodge::resolve_to_json(res);
    out["degrees"] = l2hodge::degree_ledger_to_json(l2hodge::degree_ledger(family));
    if (family.genus == 0)
        out["hodge"] = l2hodge::hodge_numbers_to_json(l2hodge::hodge_from_ledger(family));

    const auto& c = res.counts;
    if (family.decomposed) {
        out["hodge_formula"] = l2hodge::hodge_numbers_to_json(l2hodge::hodge_decomposed(
            family.genus, family.a.value(), family.b.value(), c.n_ii, c.n_iv, c.n_ii + c.n_iv));
    } else {
        bool all_nonzero = true;
        for (std::size_t i = 0; i < family.theta_nonzero.size(); ++i)
            all_nonzero = all_nonzero && family.theta_nonzero[i];
        if (all_nonzero) {
            l2hodge::HodgeInput in;
            in.weight = family.weight;
            in.genus = family.genus;
            in.a = family.a.value();
            in.b = family.b;
            in.counts = c;
            in.theta_nonzero.assign(static_cast<std::size_t>(family.weight), true);
            switch (family.weight) {
                case 1: out["hodge_formula"] = l2hodge::hodge_numbers_to_json(l2hodge::hodge_weight1(in)); break;
                case 2: out["hodge_formula"] = l2hodge::hodge_numbers_to_json(l2hodge::hodge_weight2(in)); break;
                default: out["hodge_formula"] = l2hodge::hodge_numbers_to_json(l2hodge::hodge_weight3(in)); break;
            }
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_base_change(const std::string& family_path, long e) {
    const auto family = l2hodge::family_from_json(l2hodge::load_json_file(family_path));
    const auto changed = l2hodge::base_change(family, e);
    std::cout << l2hodge::family_to_json(changed).dump(2) << "\n";
    return 0;
}

int run_table_check(const std::string& path, long k_max, const std::string& format) {
    std::vector<l2hodge::TableRow> rows;
    if (path.empty())
        rows = l2hodge::parse_table(l2hodge::default_table_json());
    else
        rows = l2hodge::load_table(path);
    const auto report = l2hodge::audit_all(rows, k_max);
    if (format == "json")
        std::cout << l2hodge::audit_report_to_json(report).dump(2) << "\n";
    else
        l2hodge::render_text(report, std::cout);
    return report.all_pass() ? 0 : 2;
}

int run_arakelov(long k, long g, long num_d, const std::vector<long>& ranks,
                 const std::vector<long>& kernels, const std::optional<long>& a) {
    const auto bound = l2hodge::arakelov_bound(k, g, num_d, ranks, kernels);
    Json out{{"k", k}, {"bound", l2hodge::to_string(bound)}};
    if (a) {
        out["a"] = *a;
        out["a_le_bound"] = l2hodge::Rational(*a) <= bound;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_parabolic_degree(const std::string& input_path) {
    const auto j = l2hodge::load_json_file(input_path);
    l2hodge::require(j.is_object() && j.contains("deg"), l2hodge::errc::malformed_input,
                     "parabolic-degree input needs a 'deg' field");
    long deg;
    if (j.at("deg").is_number_integer())
        deg = j.at("deg").get<long>();
    else
        deg = l2hodge::to_long(l2hodge::rational_from_string(j.at("deg").get<std::string>()));

    std::vector<std::vector<l2hodge::ResidueExponent>> points;
    if (j.contains("points")) {
        l2hodge::require(j.at("points").is_array(), l2hodge::errc::malformed_input,
                         "'points' must be an array");
        for (const auto& pj : j.at("points")) {
            l2hodge::require(pj.is_object() && pj.contains("exponents") &&
                                 pj.at("exponents").is_array(),
                             l2hodge::errc::malformed_input,
                             "each point needs an 'exponents' array");
            std::vector<l2hodge::ResidueExponent> exps;
            for (const auto& ej : pj.at("exponents")) {
                l2hodge::require(ej.is_object() && ej.contains("alpha"),
                                 l2hodge::errc::malformed_input,
                                 "each exponent needs an 'alpha'");
                l2hodge::ResidueExponent r;
                if (ej.at("alpha").is_string())
                    r.alpha = l2hodge::rational_from_string(ej.at("alpha").get<std::string>());
                else if (ej.at("alpha").is_number_integer())
                    r.alpha = l2hodge::Rational(ej.at("alpha").get<long>());
                else
                    throw l2hodge::Error(l2hodge::errc::malformed_input,
                                         "'alpha' must be a rational string");
                r.multiplicity =
                    ej.contains("multiplicity") ? ej.at("multiplicity").get<long>() : 1;
                exps.push_back(std::move(r));
            }
            points.push_back(std::move(exps));
        }
    }
    const auto result = l2hodge::parabolic_degree(deg, points);
    std::cout << Json{{"parabolic_degree", l2hodge::to_string(result)}}.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact monodromy classification and L2 Hodge numbers for local systems over curves"};
    app.require_subcommand(1);

    int weight = 3;
    std::string matrix_path, input_path, family_path, table_path;
    std::string type, format = "text";
    long power = 1, e = 1, k_max = 5, k = 3, genus = 0, num_d = 0;
    std::optional<long> a_value;
    std::vector<long> ranks, kernels;
    bool decomposed = false;

    auto* classify = app.add_subcommand("classify", "classify a local monodromy matrix");
    classify->add_option("--weight", weight, "weight m of the variation (1, 2 or 3)")->required();
    classify->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    classify->add_option("--power", power, "classify T^e instead of T");

    auto* filtration = app.add_subcommand(
        "filtration", "monodromy weight filtration of a nilpotent (or unipotent) matrix");
    filtration->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* ledger = app.add_subcommand("ledger", "local L2 twists for a degeneration type");
    ledger->add_option("--weight", weight, "weight m (1, 2 or 3)")->required();
    ledger->add_option("--type", type, "degeneration type: I, II, III, IV or trivial")->required();

    auto* hodge = app.add_subcommand("hodge", "Hodge numbers of H^1 from the closed formulas");
    hodge->add_option("--weight", weight, "weight m (1, 2 or 3)");
    hodge->add_option("--input", input_path, "input JSON file")->required();
    hodge->add_flag("--decomposed", decomposed, "use the decomposed (weight 3) formulas");

    auto* hodge_family = app.add_subcommand(
        "hodge-family", "resolve a family, aggregate degrees, compute Hodge numbers");
    hodge_family->add_option("--family", family_path, "family JSON file")->required();

    auto* base_change = app.add_subcommand("base-change", "pull a family back along z -> z^e");
    base_change->add_option("--family", family_path, "family JSON file")->required();
    base_change->add_option("--e", e, "covering degree")->required();

    auto* table_check =
        app.add_subcommand("table-check", "audit the bundled (or a given) model table");
    table_check->add_option("--file", table_path, "table JSON file (default: bundled table)");
    table_check->add_option("--kmax", k_max, "expansion range for symbolic rows (default 5)");
    table_check->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* arakelov = app.add_subcommand("arakelov", "upper bound on deg E^{k,0}");
    arakelov->add_option("--k", k, "odd weight k (default 3)");
    arakelov->add_option("--g", genus, "genus of the base curve")->required();
    arakelov->add_option("--num-d", num_d, "number of punctures")->required();
    arakelov->add_option("--ranks", ranks, "h^{k-j,j} for j = 0..(k-1)/2")
        ->required()
        ->delimiter(',');
    arakelov->add_option("--kernels", kernels, "theta-kernel ranks, same length")
        ->required()
        ->delimiter(',');
    arakelov->add_option("--a", a_value, "check deg E^{k,0} = a against the bound");

    auto* parabolic =
        app.add_subcommand("parabolic-degree", "degree corrected by residue exponents");
    parabolic->add_option("--input", input_path, "input JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::cerr << Json{{"error", "MalformedInput"}, {"detail", err.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(weight, matrix_path, power);
        if (app.got_subcommand(filtration)) return run_filtration(matrix_path);
        if (app.got_subcommand(ledger)) return run_ledger(weight, type);
        if (app.got_subcommand(hodge)) return run_hodge(weight, input_path, decomposed);
        if (app.got_subcommand(hodge_family)) return run_hodge_family(family_path);
        if (app.got_subcommand(base_change)) return run_base_change(family_path, e);
        if (app.got_subcommand(table_check)) return run_table_check(table_path, k_max, format);
        if (app.got_subcommand(arakelov))
            return run_arakelov(k, genus, num_d, ranks, kernels, a_value);
        if (app.got_subcommand(parabolic)) return run_parabolic_degree(input_path);
    } catch (const l2hodge::Error& err) {
        std::cerr << Json{{"error", l2hodge::errc_name(err.code())}, {"detail", err.what()}}.dump()
                  << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << Json{{"error", "MalformedInput"}, {"detail", err.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
