#ifndef L2HODGE_FAMILY_HPP
#define L2HODGE_FAMILY_HPP

#include <l2hodge/hodge_formulas.hpp>
#include <l2hodge/matrix.hpp>
#include <l2hodge/monodromy.hpp>

#include <optional>
#include <string>
#include <vector>

namespace l2hodge {

/// A puncture carrying either an explicit monodromy matrix or a declared
/// type tag. `ramified` marks the two points fixed by z -> z^e (genus 0).
struct MarkedPoint {
    std::string label;
    std::optional<Matrix> monodromy;
    std::optional<MonodromyKind> declared;
    bool ramified = false;
};

struct FamilyDescriptor {
    int weight = 3;
    long genus = 0;
    std::optional<long> a;        // deg E^{m,0}
    std::optional<long> b;        // deg E^{2,1} (weight 3 only)
    std::optional<long> a_prime;  // -deg E^{0,m}; defaults to a + |IV| (a + |II| for m = 1,2)
    std::optional<long> b_prime;  // -deg E^{1,2}; defaults to b + |IV|
    std::vector<bool> theta_nonzero;  // defaults to all-nonzero when empty
    bool decomposed = false;
    std::vector<MarkedPoint> points;
};

struct ResolvedPoint {
    std::string label;
    MonodromyKind kind = MonodromyKind::trivial;
    std::optional<MonodromyClass> details;  // present for matrix points
    bool dropped = false;                   // trivial monodromy: the point leaves D
};

struct ResolveResult {
    DegenerationCounts counts;
    std::vector<ResolvedPoint> points;
};

/// Classifies every point and aggregates counts by type; trivial points are
/// dropped from D. The first classification error aborts with
/// Error(precondition_failed) naming the offending point.
ResolveResult resolve(const FamilyDescriptor& family);

/// Pulls the family back along z -> z^e: the two ramified points keep one
/// preimage each with monodromy T^e, every other point is replaced by e
/// copies with unchanged monodromy. Degrees do NOT transform and are
/// cleared; callers must re-supply them.
FamilyDescriptor base_change(const FamilyDescriptor& family, long e);

/// Line-bundle degrees of both rows of the L2 complex, per Hodge line p.
struct DegreeLedger {
    int weight = 0;
    std::vector<long> deg0;          // deg of the degree-0 piece on line p
    std::vector<long> deg1;          // deg of the degree-1 piece (Omega^1 included)
    std::vector<std::string> notes;  // defaults and derived degrees that were applied
};

DegreeLedger degree_ledger(const FamilyDescriptor& family);

/// H^1 of the split two-term complex from degrees alone (genus 0): each
/// nonzero theta arrow contributes the cokernel degree, the theta-free ends
/// contribute h^0/h^1 of their line.
HodgeNumbers hodge_from_ledger(const FamilyDescriptor& family);

} // namespace l2hodge

#endif
