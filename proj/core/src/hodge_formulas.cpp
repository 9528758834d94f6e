#include <l2hodge/hodge_formulas.hpp>

#include <l2hodge/error.hpp>

#include <algorithm>
#include <string>

namespace l2hodge {

namespace {

void validate_counts(const DegenerationCounts& c, int weight) {
    require(c.weight == weight, errc::malformed_input, "counts are tagged with a different weight");
    require(c.n_i >= 0 && c.n_ii >= 0 && c.n_iii >= 0 && c.n_iv >= 0, errc::malformed_input,
            "negative degeneration counts");
    if (weight != 3)
        require(c.n_iii == 0 && c.n_iv == 0, errc::malformed_input,
                "types III/IV exist in weight 3 only");
}

void validate_theta(const HodgeInput& in, int arrows) {
    require(static_cast<int>(in.theta_nonzero.size()) == arrows, errc::malformed_input,
            "expected " + std::to_string(arrows) + " theta flags");
    for (int i = 0; i < arrows; ++i)
        require(in.theta_nonzero[static_cast<std::size_t>(i)], errc::precondition_failed,
                "theorem requires theta arrow " + std::to_string(i) + " to be nonzero");
}

/// comps[p] = h^{p, (m+1)-p}; verifies nonnegativity, duality and the
/// check-sum total before handing the numbers out.
HodgeNumbers assemble(int m, std::vector<long> comps, std::optional<long> expected_total) {
    HodgeNumbers out;
    out.weight = m + 1;
    for (long v : comps)
        require(v >= 0, errc::inconsistent_input,
                "a Hodge component came out negative: the input violates the theorem's "
                "preconditions");
    for (std::size_t p = 0; p < comps.size(); ++p)
        require(comps[p] == comps[comps.size() - 1 - p], errc::inconsistent_input,
                "Hodge duality h^{p,q} = h^{q,p} failed");
    out.h = std::move(comps);
    out.total = 0;
    for (long v : out.h) out.total += v;
    if (expected_total)
        require(out.total == *expected_total, errc::inconsistent_input,
                "component sum disagrees with the check-sum total");
    return out;
}

} // namespace

HodgeNumbers hodge_weight1(const HodgeInput& in) {
    require(in.weight == 1, errc::malformed_input, "hodge_weight1 needs weight 1");
    validate_counts(in.counts, 1);
    require(in.irreducible, errc::precondition_failed, "theorem requires an irreducible system");
    validate_theta(in, 1);
    const long g = in.genus, a = in.a, ni = in.counts.n_i, nii = in.counts.n_ii;
    require(g >= 0, errc::malformed_input, "genus must be >= 0");
    require(a + nii > 0, errc::precondition_failed, "a + |II| > 0 fails");

    const long h20 = g - 1 + a + nii;
    const long h11 = 2 * g - 2 - 2 * a + ni;
    return assemble(1, {h20, h11, h20}, check_sum(1, g, in.counts));
}

HodgeNumbers hodge_weight2(const HodgeInput& in) {
    require(in.weight == 2, errc::malformed_input, "hodge_weight2 needs weight 2");
    validate_counts(in.counts, 2);
    require(in.irreducible, errc::precondition_failed, "theorem requires an irreducible system");
    validate_theta(in, 2);
    const long g = in.genus, a = in.a, ni = in.counts.n_i, nii = in.counts.n_ii;
    require(g >= 0, errc::malformed_input, "genus must be >= 0");
    require(a + nii > 0, errc::precondition_failed, "a + |II| > 0 fails");
    weight2_middle_degree(in.counts);  // |II| must be even

    const long h30 = g - 1 + a + nii;
    const long h21 = 2 * g - 2 - a + ni + nii / 2;
    return assemble(2, {h30, h21, h21, h30}, check_sum(2, g, in.counts));
}

HodgeNumbers hodge_weight3(const HodgeInput& in) {
    require(in.weight == 3, errc::malformed_input, "hodge_weight3 needs weight 3");
    validate_counts(in.counts, 3);
    require(in.irreducible, errc::precondition_failed, "theorem requires an irreducible system");
    validate_theta(in, 3);
    require(in.b.has_value(), errc::unknown_degree, "weight 3 needs b = deg E^{2,1}");
    const long g = in.genus, a = in.a, b = *in.b;
    const long ni = in.counts.n_i, nii = in.counts.n_ii, niii = in.counts.n_iii,
               niv = in.counts.n_iv;
    require(g >= 0, errc::malformed_input, "genus must be >= 0");
    require(a + niv > 0, errc::precondition_failed, "a + |IV| > 0 fails");

    const long h40 = g - 1 + a + niv;
    const long h31 = 2 * g - 2 + b - a + nii + niii + niv;
    const long h22 = ni + niii - 2 * b + 2 * g - 2;
    return assemble(3, {h40, h31, h22, h31, h40}, check_sum(3, g, in.counts));
}

long weight2_middle_degree(const DegenerationCounts& counts) {
    require(counts.n_ii % 2 == 0, errc::inconsistent_input,
            "deg E^{1,1} = -|II|/2 must be an integer, but |II| is odd");
    return -counts.n_ii / 2;
}

long weight3_b_prime(long b, const DegenerationCounts& counts) {
    return b + counts.n_iv;
}

HodgeNumbers hodge_decomposed(long g, long a, long b, long n_ii, long n_iv, long num_d) {
    require(g >= 0, errc::malformed_input, "genus must be >= 0");
    require(n_ii >= 0 && n_iv >= 0 && num_d >= 0, errc::malformed_input, "negative counts");
    require(num_d == n_ii + n_iv, errc::precondition_failed, "#D must equal |II| + |IV|");
    require(a + n_iv > 0, errc::precondition_failed, "a + |IV| > 0 fails");
    require(a == b + 2 * g - 2 + num_d, errc::precondition_failed,
            "decomposed constraint a = b + 2g - 2 + #D fails");

    const long h40 = g - 1 + a + n_iv;
    const long h22 = 2 * h0_from_degree(g, 2 * g - 2 - b);
    // no check-sum here: a decomposed system splits, so the irreducibility
    // behind the total formula is not available
    return assemble(3, {h40, 0, h22, 0, h40}, std::nullopt);
}

long check_sum(int weight, long g, const DegenerationCounts& counts) {
    validate_counts(counts, weight);
    switch (weight) {
        case 1: return 4 * g - 4 + counts.n_i + 2 * counts.n_ii;
        case 2: return 6 * g - 6 + 2 * counts.n_i + 3 * counts.n_ii;
        case 3:
            return 8 * g - 8 + counts.n_i + 2 * counts.n_ii + 3 * counts.n_iii + 4 * counts.n_iv;
        default: throw Error(errc::malformed_input, "weight must be 1, 2 or 3");
    }
}

long h0_from_degree(long g, long deg) {
    require(g >= 0, errc::malformed_input, "genus must be >= 0");
    if (g == 0) return std::max(deg + 1, 0L);
    if (deg < 0) return 0;
    if (deg > 2 * g - 2) return deg + 1 - g;
    throw Error(errc::indeterminate_from_degree,
                "h^0 of a degree-" + std::to_string(deg) + " line bundle on a genus-" +
                    std::to_string(g) + " curve is not determined by the degree");
}

long h1_from_degree(long g, long deg) {
    require(g >= 0, errc::malformed_input, "genus must be >= 0");
    if (g == 0) return std::max(-deg - 1, 0L);
    if (deg > 2 * g - 2) return 0;
    if (deg < 0) return g - 1 - deg;
    throw Error(errc::indeterminate_from_degree,
                "h^1 of a degree-" + std::to_string(deg) + " line bundle on a genus-" +
                    std::to_string(g) + " curve is not determined by the degree");
}

Rational arakelov_bound(long k, long g, long num_d, const std::vector<long>& ranks,
                        const std::vector<long>& kernels) {
    require(k >= 1 && k % 2 == 1, errc::precondition_failed, "the bound applies to odd weight k");
    require(g >= 0 && num_d >= 0, errc::malformed_input, "negative genus or puncture count");
    const std::size_t l = static_cast<std::size_t>((k - 1) / 2);
    require(ranks.size() == l + 1 && kernels.size() == l + 1, errc::malformed_input,
            "expected " + std::to_string(l + 1) + " rank/kernel entries for k = " +
                std::to_string(k));
    for (std::size_t j = 0; j <= l; ++j)
        require(ranks[j] >= kernels[j] && kernels[j] >= 0, errc::precondition_failed,
                "need ranks >= kernel ranks >= 0");

    Rational sum = Rational(ranks[l] - kernels[l]) / 2;
    for (std::size_t j = 0; j < l; ++j) sum += ranks[j] - kernels[j];
    return sum * Rational(2 * g - 2 + num_d);
}

bool arakelov_check(long a, long k, long g, long num_d, const std::vector<long>& ranks,
                    const std::vector<long>& kernels) {
    return Rational(a) <= arakelov_bound(k, g, num_d, ranks, kernels);
}

Rational parabolic_degree(long deg, const std::vector<std::vector<ResidueExponent>>& points) {
    Rational total(deg);
    for (const auto& point : points)
        for (const auto& r : point) {
            require(r.alpha >= 0 && r.alpha < 1, errc::precondition_failed,
                    "residue exponent alpha must lie in [0, 1)");
            require(r.multiplicity > 0, errc::malformed_input, "multiplicity must be positive");
            total += r.alpha * Rational(r.multiplicity);
        }
    return total;
}

} // namespace l2hodge
