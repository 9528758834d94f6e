#include <l2hodge/weight_filtration.hpp>

#include <l2hodge/error.hpp>
#include <l2hodge/spectral.hpp>

#include <algorithm>

namespace l2hodge {

const std::vector<Vec>& WeightFiltration::level(int k) const {
    static const std::vector<Vec> empty;
    if (k < -m) return empty;
    if (k > m) k = m;
    return levels[static_cast<std::size_t>(k + m)];
}

long WeightFiltration::level_dim(int k) const {
    return static_cast<long>(level(k).size());
}

std::vector<long> WeightFiltration::graded_dims() const {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(2 * m + 1));
    for (int k = -m; k <= m; ++k) out.push_back(level_dim(k) - level_dim(k - 1));
    return out;
}

Matrix nilpotent_log(const Matrix& t) {
    require(is_unipotent(t), errc::not_unipotent, "log is defined for unipotent matrices only");
    const int n = t.n();
    const Matrix nmat = t - Matrix::identity(n);
    Matrix acc(n);
    Matrix power = Matrix::identity(n);
    for (int k = 1; k <= n - 1; ++k) {
        power = power * nmat;
        if (power.is_zero()) break;
        acc = acc + power * (Rational(k % 2 == 1 ? 1 : -1) / k);
    }
    return acc;
}

Matrix nilpotent_exp(const Matrix& nmat) {
    require(is_nilpotent(nmat), errc::not_nilpotent, "exp truncation needs a nilpotent matrix");
    const int n = nmat.n();
    Matrix acc = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    Rational factorial(1);
    for (int k = 1; k <= n - 1; ++k) {
        power = power * nmat;
        if (power.is_zero()) break;
        factorial *= k;
        acc = acc + power * (1 / factorial);
    }
    return acc;
}

namespace {

std::vector<Vec> full_space_basis(int n) {
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        Vec v(static_cast<std::size_t>(n), Rational(0));
        v[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

WeightFiltration weight_filtration(const Matrix& nmat) {
    require(is_nilpotent(nmat), errc::not_nilpotent,
            "weight filtrations are attached to nilpotent operators");
    const int n = nmat.n();

    int nu = 1;
    {
        Matrix p = nmat;
        while (!p.is_zero()) {
            p = p * nmat;
            ++nu;
        }
    }
    const int m = nu - 1;

    WeightFiltration w;
    w.m = m;
    w.dim = n;
    if (m == 0) {
        w.levels = {full_space_basis(n)};
        return w;
    }

    const Matrix nm = nmat.pow(m);
    const auto ker = kernel_basis(nm);  // W_{m-1}
    const auto img = image_basis(nm);   // W_{-m}

    // complement of Im N^m inside Ker N^m; N descends to the quotient
    std::vector<Vec> complement;
    {
        auto work = img;
        for (const auto& v : ker) {
            if (in_span(work, v)) continue;
            complement.push_back(v);
            work = span_union(work, {v});
        }
    }
    const int q = static_cast<int>(complement.size());

    std::vector<Vec> quotient_basis = img;
    quotient_basis.insert(quotient_basis.end(), complement.begin(), complement.end());

    WeightFiltration inner;
    if (q > 0) {
        Matrix induced(q);
        for (int j = 0; j < q; ++j) {
            const Vec image = nmat.apply(complement[static_cast<std::size_t>(j)]);
            const auto coords = coordinates(quotient_basis, image);
            require(coords.has_value(), errc::inconsistent_input,
                    "N does not stabilize Ker N^m (cannot happen for nilpotent N)");
            for (int i = 0; i < q; ++i)
                induced.at(i, j) = (*coords)[img.size() + static_cast<std::size_t>(i)];
        }
        inner = weight_filtration(induced);
    }

    w.levels.assign(static_cast<std::size_t>(2 * m + 1), {});
    w.levels[static_cast<std::size_t>(2 * m)] = rref(full_space_basis(n));  // W_m
    w.levels[static_cast<std::size_t>(2 * m - 1)] = ker;                    // W_{m-1}
    for (int k = -m; k <= m - 2; ++k) {
        std::vector<Vec> rows = img;
        if (q > 0) {
            for (const auto& u : inner.level(k)) {
                Vec lift(static_cast<std::size_t>(n), Rational(0));
                for (int j = 0; j < q; ++j)
                    for (std::size_t c = 0; c < lift.size(); ++c)
                        lift[c] += u[static_cast<std::size_t>(j)] * complement[static_cast<std::size_t>(j)][c];
                rows.push_back(std::move(lift));
            }
        }
        w.levels[static_cast<std::size_t>(k + m)] = rref(std::move(rows));
    }
    return w;
}

namespace {

// Graded weights of the Hodge lines, index p = 0..m. Forced by the type when
// all Hodge numbers are 1: each Jordan chain occupies consecutive lines and
// the top line of a chain carries the chain's highest weight.
std::vector<int> graded_weights(int weight, MonodromyKind kind) {
    if (weight == 1) return {-1, 1};                         // I: single 2-chain
    if (weight == 2) return {-2, 0, 2};                      // I: single 3-chain
    switch (kind) {
        case MonodromyKind::type_i: return {0, -1, 1, 0};    // 2-chain on (2,1),(1,2)
        case MonodromyKind::type_ii: return {-1, 1, -1, 1};  // 2-chains on (3,0),(2,1) and (1,2),(0,3)
        default: return {-3, -1, 1, 3};                      // III: single 4-chain
    }
}

} // namespace

TwistLedger twist_ledger_for(int weight, MonodromyKind kind, ChainAlignment) {
    require(weight >= 1 && weight <= 3, errc::precondition_failed, "weight must be 1, 2 or 3");
    const std::size_t lines = static_cast<std::size_t>(weight) + 1;
    TwistLedger out{weight, std::vector<int>(lines, 0), std::vector<int>(lines, 0)};

    if (kind == MonodromyKind::trivial) return out;

    const bool strict =
        weight == 3 ? kind == MonodromyKind::type_iv : kind == MonodromyKind::type_ii;
    if (strict) {
        // no weight filtration in play: degree-0 piece untwisted, every log
        // pole survives in degree 1
        std::fill(out.twist1.begin(), out.twist1.end(), 1);
        return out;
    }

    const bool unipotent_kind =
        kind == MonodromyKind::type_i ||
        (weight == 3 && (kind == MonodromyKind::type_ii || kind == MonodromyKind::type_iii));
    require(unipotent_kind, errc::precondition_failed,
            "type " + kind_name(kind) + " is not an allowed weight-" + std::to_string(weight) +
                " degeneration");

    const auto weights = graded_weights(weight, kind);
    for (std::size_t p = 0; p < lines; ++p) {
        if (weights[p] > 0) out.twist0[p] = -1;
        if (weights[p] <= -2) out.twist1[p] = 1;
    }
    return out;
}

TwistLedger twist_ledger(const MonodromyClass& cls, ChainAlignment alignment) {
    return twist_ledger_for(cls.weight, cls.kind, alignment);
}

} // namespace l2hodge
