#include <l2hodge/spectral.hpp>

#include <l2hodge/error.hpp>

#include <algorithm>

namespace l2hodge {

bool is_nilpotent(const Matrix& m) {
    return m.pow(m.n()).is_zero();
}

bool is_unipotent(const Matrix& m) {
    return is_nilpotent(m - Matrix::identity(m.n()));
}

std::optional<long> quasi_unipotency_order(const Matrix& m) {
    require(m.n() <= 6, errc::precondition_failed,
            "quasi-unipotency scan is implemented for rank <= 6");
    require(m.det() != 0, errc::precondition_failed,
            "quasi-unipotency is a question about invertible matrices");
    if (!is_unipotent(m.pow(quasi_unipotent_order_bound))) return std::nullopt;
    for (long k : divisors_of(quasi_unipotent_order_bound))
        if (is_unipotent(m.pow(k))) return k;
    return std::nullopt;  // unreachable: the bound itself is a divisor
}

namespace {

// #(blocks of size >= k) = r_{k-1} - r_k for the rank sequence r_k = rank(A^k)
std::vector<int> block_sizes_from_ranks(const Matrix& a, int n) {
    std::vector<long> ranks{n};
    Matrix p = Matrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        p = p * a;
        ranks.push_back(matrix_rank(p));
    }
    std::vector<int> sizes;
    for (int s = 1; s <= n; ++s) {
        const long at_least_s = ranks[static_cast<std::size_t>(s - 1)] - ranks[static_cast<std::size_t>(s)];
        const long at_least_s1 = s < n ? ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s + 1)] : 0;
        for (long i = 0; i < at_least_s - at_least_s1; ++i) sizes.push_back(s);
    }
    return sizes;
}

} // namespace

std::vector<JordanEntry> jordan_structure(const Matrix& m) {
    const auto order = quasi_unipotency_order(m);
    if (!order)
        throw Error(errc::not_quasi_unipotent,
                    "matrix^" + std::to_string(quasi_unipotent_order_bound) + " - I is not nilpotent");
    const int n = m.n();
    const Polynomial cp = char_poly(m);

    std::vector<JordanEntry> out;
    for (long d : divisors_of(*order)) {
        if (euler_phi(d) > n) continue;
        const Polynomial phi = cyclotomic(d);
        auto [quot, rem] = Polynomial::divmod(cp, phi);
        if (!rem.is_zero()) continue;
        const Matrix pd = eval_poly(phi, m);
        for (int s : block_sizes_from_ranks(pd, n)) out.push_back({d, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> unipotent_block_sizes(const Matrix& m) {
    require(is_unipotent(m), errc::not_unipotent, "matrix is not unipotent");
    auto sizes = block_sizes_from_ranks(m - Matrix::identity(m.n()), m.n());
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

} // namespace l2hodge
