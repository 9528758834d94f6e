#include <l2hodge/monodromy.hpp>

#include <l2hodge/error.hpp>
#include <l2hodge/spectral.hpp>

namespace l2hodge {

std::string kind_name(MonodromyKind k) {
    switch (k) {
        case MonodromyKind::trivial: return "trivial";
        case MonodromyKind::type_i: return "I";
        case MonodromyKind::type_ii: return "II";
        case MonodromyKind::type_iii: return "III";
        case MonodromyKind::type_iv: return "IV";
    }
    return "?";
}

MonodromyKind kind_from_name(const std::string& name) {
    if (name == "trivial") return MonodromyKind::trivial;
    if (name == "I") return MonodromyKind::type_i;
    if (name == "II") return MonodromyKind::type_ii;
    if (name == "III") return MonodromyKind::type_iii;
    if (name == "IV") return MonodromyKind::type_iv;
    throw Error(errc::malformed_input, "unknown monodromy type '" + name + "'");
}

bool MonodromyClass::strictly_quasi_unipotent() const {
    return weight == 3 ? kind == MonodromyKind::type_iv
                       : kind == MonodromyKind::type_ii && weight <= 2;
}

std::string reason_name(ClassificationError::Reason r) {
    switch (r) {
        case ClassificationError::Reason::not_quasi_unipotent: return "NotQuasiUnipotent";
        case ClassificationError::Reason::mixed_case: return "MixedCase";
        case ClassificationError::Reason::excluded_by_polarization: return "ExcludedByPolarization";
    }
    return "?";
}

namespace {

int nilpotency_degree(const Matrix& n) {
    Matrix p = n;
    int nu = 1;
    while (!p.is_zero()) {
        p = p * n;
        ++nu;
    }
    return nu;
}

} // namespace

ClassifyResult classify(const Matrix& t, int weight) {
    require(weight >= 1 && weight <= 3, errc::malformed_input, "weight must be 1, 2 or 3");
    const int n = weight + 1;
    require(t.n() == n, errc::malformed_input,
            "matrix size " + std::to_string(t.n()) + " does not match weight " + std::to_string(weight));
    require(t.det() != 0, errc::malformed_input, "monodromy matrix must be invertible");

    const auto order = quasi_unipotency_order(t);
    if (!order)
        return ClassificationError{ClassificationError::Reason::not_quasi_unipotent,
                                   "no power up to " + std::to_string(quasi_unipotent_order_bound) +
                                       " is unipotent"};

    const Matrix nmat = t - Matrix::identity(n);
    const long mult1 = n - matrix_rank(nmat.pow(n));

    if (mult1 == n) {
        // unipotent; N = T - I is nilpotent
        if (t.is_identity()) return MonodromyClass{weight, MonodromyKind::trivial, 1, {}};
        const int nu = nilpotency_degree(nmat);
        const long rank_n = matrix_rank(nmat);
        const auto blocks = unipotent_block_sizes(t);
        switch (weight) {
            case 1:
                return MonodromyClass{weight, MonodromyKind::type_i, 1, blocks};
            case 2:
                if (nu == 3) return MonodromyClass{weight, MonodromyKind::type_i, 1, blocks};
                return ClassificationError{
                    ClassificationError::Reason::excluded_by_polarization,
                    "unipotent with N != 0 and N^2 = 0 (2-block + 1): the dual pair of theta "
                    "arrows forces N = 0"};
            default:
                if (nu == 2 && rank_n == 1)
                    return MonodromyClass{weight, MonodromyKind::type_i, 1, blocks};
                if (nu == 2 && rank_n == 2)
                    return MonodromyClass{weight, MonodromyKind::type_ii, 1, blocks};
                if (nu == 4) return MonodromyClass{weight, MonodromyKind::type_iii, 1, blocks};
                return ClassificationError{
                    ClassificationError::Reason::excluded_by_polarization,
                    "unipotent 3-block + 1 form is not an allowed weight-3 degeneration"};
        }
    }
    if (mult1 == 0) {
        const auto kind = weight == 3 ? MonodromyKind::type_iv : MonodromyKind::type_ii;
        return MonodromyClass{weight, kind, *order, {}};
    }
    return ClassificationError{ClassificationError::Reason::mixed_case,
                               "eigenvalue 1 has multiplicity " + std::to_string(mult1) +
                                   " with 0 < " + std::to_string(mult1) + " < " + std::to_string(n)};
}

ClassifyResult power_and_classify(const Matrix& t, long e, int weight) {
    require(e >= 1, errc::precondition_failed, "power must be >= 1");
    return classify(t.pow(e), weight);
}

} // namespace l2hodge
