#ifndef L2HODGE_MONODROMY_HPP
#define L2HODGE_MONODROMY_HPP

#include <l2hodge/matrix.hpp>

#include <string>
#include <variant>
#include <vector>

namespace l2hodge {

/// Degeneration type of a local monodromy, per weight.
///
/// Weights 1 and 2 use {trivial, I, II}, where II is the strictly
/// quasi-unipotent kind. Weight 3 uses {trivial, I, II, III, IV}: I/II/III
/// are unipotent with growing nilpotency (N rank 1, two 2-blocks, one
/// 4-block) and IV is strictly quasi-unipotent.
enum class MonodromyKind { trivial, type_i, type_ii, type_iii, type_iv };

std::string kind_name(MonodromyKind k);
MonodromyKind kind_from_name(const std::string& name);

struct MonodromyClass {
    int weight = 0;
    MonodromyKind kind = MonodromyKind::trivial;
    long semisimple_order = 1;          // minimal k with T^k unipotent
    std::vector<int> unipotent_blocks;  // Jordan sizes of T when unipotent, descending

    bool strictly_quasi_unipotent() const;
};

struct ClassificationError {
    enum class Reason { not_quasi_unipotent, mixed_case, excluded_by_polarization };
    Reason reason;
    std::string detail;
};

std::string reason_name(ClassificationError::Reason r);

using ClassifyResult = std::variant<MonodromyClass, ClassificationError>;

/// Classifies the local monodromy T of a weight-m variation (rank m+1,
/// m in {1,2,3}). Classification errors are verdicts, returned by value;
/// a wrongly-sized or singular matrix throws Error(malformed_input).
ClassifyResult classify(const Matrix& t, int weight);

/// classify(T^e, weight); base change along z -> z^e turns the matrix at a
/// ramified point into its e-th power.
ClassifyResult power_and_classify(const Matrix& t, long e, int weight);

} // namespace l2hodge

#endif
