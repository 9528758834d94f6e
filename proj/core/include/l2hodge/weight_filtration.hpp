#ifndef L2HODGE_WEIGHT_FILTRATION_HPP
#define L2HODGE_WEIGHT_FILTRATION_HPP

#include <l2hodge/matrix.hpp>
#include <l2hodge/monodromy.hpp>

#include <vector>

namespace l2hodge {

/// Monodromy weight filtration of a nilpotent operator N with N^{m+1} = 0,
/// N^m != 0, centered at 0:
///   0 = W_{-m-1} <= W_{-m} <= ... <= W_m = V,
/// the unique filtration with N(W_k) <= W_{k-2} and
/// N^k : Gr_k -> Gr_{-k} an isomorphism for every k >= 0.
struct WeightFiltration {
    int m = 0;
    int dim = 0;
    std::vector<std::vector<Vec>> levels;  // levels[k + m] = RREF basis of W_k

    const std::vector<Vec>& level(int k) const;  // clamped outside [-m, m]
    long level_dim(int k) const;
    std::vector<long> graded_dims() const;  // dim Gr_k for k = -m..m
};

/// log(T) of a unipotent matrix; the series ends at (T-I)^{n-1}, so the
/// result is exact.
Matrix nilpotent_log(const Matrix& t);

/// Truncated exponential of a nilpotent matrix (exact inverse of nilpotent_log).
Matrix nilpotent_exp(const Matrix& n);

/// Seeded with W_{m-1} = Ker N^m and W_{-m} = Im N^m, then recursing on the
/// nilpotent operator induced on Ker N^m / Im N^m.
WeightFiltration weight_filtration(const Matrix& n);

/// Local twists of the two rows of the L2 complex at one puncture, one entry
/// per Hodge line p (index p = 0..m for the line (p, m-p)):
///   twist0[p] in {-1, 0}: twist of the degree-0 piece;
///   twist1[p] in {0, +1}: twist of the degree-1 piece relative to Omega^1,
///   +1 meaning the log pole survives.
struct TwistLedger {
    int weight = 0;
    std::vector<int> twist0;
    std::vector<int> twist1;
};

/// With all Hodge numbers equal to one, every Jordan chain runs down
/// consecutive Hodge lines and the chain top carries the highest weight;
/// the graded weight of each line is therefore forced by the type.
enum class ChainAlignment { standard };

TwistLedger twist_ledger(const MonodromyClass& cls,
                         ChainAlignment alignment = ChainAlignment::standard);
TwistLedger twist_ledger_for(int weight, MonodromyKind kind,
                             ChainAlignment alignment = ChainAlignment::standard);

} // namespace l2hodge

#endif
