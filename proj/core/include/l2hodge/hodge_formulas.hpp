#ifndef L2HODGE_HODGE_FORMULAS_HPP
#define L2HODGE_HODGE_FORMULAS_HPP

#include <l2hodge/rational.hpp>

#include <optional>
#include <vector>

namespace l2hodge {

/// Cardinalities of the sets of punctures by degeneration type.
/// n_iii and n_iv are meaningful for weight 3 only and must be 0 otherwise.
struct DegenerationCounts {
    int weight = 3;
    long n_i = 0;
    long n_ii = 0;
    long n_iii = 0;
    long n_iv = 0;

    long total() const { return n_i + n_ii + n_iii + n_iv; }
};

struct HodgeInput {
    int weight = 3;
    long genus = 0;
    long a = 0;             // deg E^{m,0}
    std::optional<long> b;  // deg E^{2,1}, weight 3 only
    DegenerationCounts counts;
    std::vector<bool> theta_nonzero;  // one flag per Higgs arrow, top line first
    bool irreducible = true;
};

/// Components of the weight-(m+1) pure Hodge structure on H^1.
struct HodgeNumbers {
    int weight = 0;       // = m+1
    std::vector<long> h;  // h[p] = h^{p, weight-p}, p = 0..weight
    long total = 0;

    long hpq(int p) const { return h.at(static_cast<std::size_t>(p)); }
};

HodgeNumbers hodge_weight1(const HodgeInput& in);
HodgeNumbers hodge_weight2(const HodgeInput& in);
HodgeNumbers hodge_weight3(const HodgeInput& in);

/// deg E^{1,1} forced by the weight-2 count bookkeeping: -|II|/2.
/// Throws Error(inconsistent_input) when |II| is odd.
long weight2_middle_degree(const DegenerationCounts& counts);

/// b' = -deg E^{1,2} forced by duality in weight 3: b + |IV|.
long weight3_b_prime(long b, const DegenerationCounts& counts);

/// Weight-3 decomposed case: outer Higgs arrows isomorphisms, middle arrow
/// zero. Requires |I| = |III| = 0 by construction, num_d = n_ii + n_iv, and
/// the degree constraint a = b + 2g - 2 + num_d.
HodgeNumbers hodge_decomposed(long g, long a, long b, long n_ii, long n_iv, long num_d);

/// Total h^1 from genus and counts alone; defined even when the theorems'
/// other preconditions fail (used as an independent oracle by the auditor).
long check_sum(int weight, long g, const DegenerationCounts& counts);

/// h^0 / h^1 of a line bundle of the given degree, where the degree alone
/// determines them (always on genus 0; outside [0, 2g-2] otherwise).
/// Throws Error(indeterminate_from_degree) in the ambiguous range.
long h0_from_degree(long g, long deg);
long h1_from_degree(long g, long deg);

/// Upper bound on deg E^{k,0} for a real VHS of odd weight k = 2l+1:
/// (1/2 (h^{k-l,l} - h0^{k-l,l}) + sum_{j<l} (h^{k-j,j} - h0^{k-j,j})) * (2g-2+#D).
/// ranks[j] = h^{k-j,j}, kernels[j] = rank of the theta-kernel, j = 0..l.
Rational arakelov_bound(long k, long g, long num_d, const std::vector<long>& ranks,
                        const std::vector<long>& kernels);
bool arakelov_check(long a, long k, long g, long num_d, const std::vector<long>& ranks,
                    const std::vector<long>& kernels);

struct ResidueExponent {
    Rational alpha;          // in [0, 1)
    long multiplicity = 1;   // > 0
};

/// deg + sum over points of sum of alpha * multiplicity.
Rational parabolic_degree(long deg, const std::vector<std::vector<ResidueExponent>>& points);

} // namespace l2hodge

#endif
