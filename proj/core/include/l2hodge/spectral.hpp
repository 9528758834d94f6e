#ifndef L2HODGE_SPECTRAL_HPP
#define L2HODGE_SPECTRAL_HPP

#include <l2hodge/matrix.hpp>

#include <optional>
#include <vector>

namespace l2hodge {

// Any quasi-unipotent rational matrix of rank <= 6 has semisimple order
// dividing 2520 = lcm{d : phi(d) <= 6} = 2^3 * 3^2 * 5 * 7. The monodromy
// ranks 2..4 would admit the sharper bound lcm{d : phi(d) <= 4} = 120; one
// uniform constant keeps the order scan simple and also covers the 5x5/6x6
// test fixtures.
inline constexpr long quasi_unipotent_order_bound = 2520;

bool is_nilpotent(const Matrix& m);
bool is_unipotent(const Matrix& m);

/// Minimal k >= 1 such that M^k is unipotent, or nullopt when no such k
/// exists. M must be invertible and of rank <= 6.
std::optional<long> quasi_unipotency_order(const Matrix& m);

struct JordanEntry {
    long cyclotomic_order = 1;  // eigenvalue is a primitive d-th root of unity
    int block_size = 1;
    auto operator<=>(const JordanEntry&) const = default;
};

/// Jordan block data of a quasi-unipotent matrix, pooled over all primitive
/// d-th-root eigenvalues of each cyclotomic factor Phi_d of the
/// characteristic polynomial: one entry per complex Jordan block, recovered
/// from the rank sequences r_k = rank(Phi_d(M)^k) as
/// #(blocks of size >= k) = r_{k-1} - r_k. Eigenvalues inside one cyclotomic
/// orbit are not separated; block sizes sum to n and the multiplicity of
/// each (d, s) pair is divisible by phi(d). Sorted ascending.
/// Throws Error(not_quasi_unipotent) when M is not quasi-unipotent.
std::vector<JordanEntry> jordan_structure(const Matrix& m);

/// Jordan block sizes of a unipotent matrix, descending.
std::vector<int> unipotent_block_sizes(const Matrix& m);

} // namespace l2hodge

#endif
