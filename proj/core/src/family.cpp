#include <l2hodge/family.hpp>

#include <l2hodge/error.hpp>
#include <l2hodge/weight_filtration.hpp>

#include <string>

namespace l2hodge {

namespace {

void bump(DegenerationCounts& counts, MonodromyKind kind) {
    switch (kind) {
        case MonodromyKind::trivial: break;
        case MonodromyKind::type_i: ++counts.n_i; break;
        case MonodromyKind::type_ii: ++counts.n_ii; break;
        case MonodromyKind::type_iii: ++counts.n_iii; break;
        case MonodromyKind::type_iv: ++counts.n_iv; break;
    }
}

void validate_declared(MonodromyKind kind, int weight, const std::string& label) {
    if (weight == 3) return;
    require(kind == MonodromyKind::trivial || kind == MonodromyKind::type_i ||
                kind == MonodromyKind::type_ii,
            errc::malformed_input,
            "point '" + label + "': type " + kind_name(kind) + " is invalid for weight " +
                std::to_string(weight));
}

std::vector<bool> effective_theta(const FamilyDescriptor& f) {
    if (f.theta_nonzero.empty())
        return std::vector<bool>(static_cast<std::size_t>(f.weight), true);
    require(static_cast<int>(f.theta_nonzero.size()) == f.weight, errc::malformed_input,
            "expected " + std::to_string(f.weight) + " theta flags");
    return f.theta_nonzero;
}

} // namespace

ResolveResult resolve(const FamilyDescriptor& family) {
    require(family.weight >= 1 && family.weight <= 3, errc::malformed_input,
            "weight must be 1, 2 or 3");
    require(family.genus >= 0, errc::malformed_input, "genus must be >= 0");

    ResolveResult out;
    out.counts.weight = family.weight;
    for (const auto& point : family.points) {
        ResolvedPoint rp;
        rp.label = point.label;
        if (point.monodromy) {
            const auto verdict = classify(*point.monodromy, family.weight);
            if (const auto* err = std::get_if<ClassificationError>(&verdict))
                throw Error(errc::precondition_failed, "point '" + point.label + "': " +
                                                           reason_name(err->reason) + ": " +
                                                           err->detail);
            rp.details = std::get<MonodromyClass>(verdict);
            rp.kind = rp.details->kind;
        } else if (point.declared) {
            validate_declared(*point.declared, family.weight, point.label);
            rp.kind = *point.declared;
        } else {
            throw Error(errc::malformed_input,
                        "point '" + point.label + "' carries neither a matrix nor a type");
        }
        rp.dropped = rp.kind == MonodromyKind::trivial;
        if (!rp.dropped) bump(out.counts, rp.kind);
        out.points.push_back(std::move(rp));
    }

    if (family.decomposed) {
        require(family.weight == 3, errc::precondition_failed, "decomposed families have weight 3");
        require(out.counts.n_i == 0 && out.counts.n_iii == 0, errc::precondition_failed,
                "a decomposed family admits no type I or III points");
    }
    return out;
}

FamilyDescriptor base_change(const FamilyDescriptor& family, long e) {
    require(e >= 1, errc::precondition_failed, "covering degree must be >= 1");
    require(family.genus == 0, errc::precondition_failed,
            "base change z -> z^e is a genus-0 operation");
    long ramified = 0;
    for (const auto& p : family.points) {
        require(p.monodromy.has_value(), errc::precondition_failed,
                "point '" + p.label + "': base change needs explicit matrices at every point");
        if (p.ramified) ++ramified;
    }
    require(ramified == 2, errc::precondition_failed,
            "exactly two points must be marked ramified (the fibres of 0 and infinity)");

    FamilyDescriptor out = family;
    // degrees do not transform under base change; callers re-supply them
    out.a.reset();
    out.b.reset();
    out.a_prime.reset();
    out.b_prime.reset();
    out.points.clear();
    for (const auto& p : family.points) {
        if (p.ramified) {
            out.points.push_back({p.label, p.monodromy->pow(e), std::nullopt, true});
        } else {
            for (long i = 1; i <= e; ++i) {
                const std::string label = e == 1 ? p.label : p.label + "#" + std::to_string(i);
                out.points.push_back({label, p.monodromy, std::nullopt, false});
            }
        }
    }
    return out;
}

DegreeLedger degree_ledger(const FamilyDescriptor& family) {
    const auto res = resolve(family);
    const int m = family.weight;
    require(family.a.has_value(), errc::unknown_degree,
            "degree a is unknown (base change clears it; re-supply)");
    const long a = *family.a;
    const auto& counts = res.counts;

    DegreeLedger out;
    out.weight = m;

    const long strict_count = m == 3 ? counts.n_iv : counts.n_ii;
    long a_prime;
    if (family.a_prime) {
        a_prime = *family.a_prime;
    } else {
        a_prime = a + strict_count;
        out.notes.push_back("a' defaulted to a + " + std::to_string(strict_count) + " = " +
                            std::to_string(a_prime));
    }

    std::vector<long> line_degree(static_cast<std::size_t>(m) + 1, 0);
    line_degree[static_cast<std::size_t>(m)] = a;
    line_degree[0] = -a_prime;
    if (m == 2) {
        const long mid = weight2_middle_degree(counts);
        line_degree[1] = mid;
        out.notes.push_back("deg E^{1,1} derived from counts: " + std::to_string(mid));
    } else if (m == 3) {
        require(family.b.has_value(), errc::unknown_degree,
                "degree b is unknown (base change clears it; re-supply)");
        line_degree[2] = *family.b;
        long b_prime;
        if (family.b_prime) {
            b_prime = *family.b_prime;
        } else {
            b_prime = weight3_b_prime(*family.b, counts);
            out.notes.push_back("b' defaulted to b + |IV| = " + std::to_string(b_prime));
        }
        line_degree[1] = -b_prime;
    }

    std::vector<long> twist0(static_cast<std::size_t>(m) + 1, 0);
    std::vector<long> twist1(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& point : res.points) {
        if (point.dropped) continue;
        const auto ledger = twist_ledger_for(m, point.kind);
        for (std::size_t p = 0; p <= static_cast<std::size_t>(m); ++p) {
            twist0[p] += ledger.twist0[p];
            twist1[p] += ledger.twist1[p];
        }
    }

    out.deg0.resize(static_cast<std::size_t>(m) + 1);
    out.deg1.resize(static_cast<std::size_t>(m) + 1);
    for (std::size_t p = 0; p <= static_cast<std::size_t>(m); ++p) {
        out.deg0[p] = line_degree[p] + twist0[p];
        out.deg1[p] = line_degree[p] + (2 * family.genus - 2) + twist1[p];
    }
    return out;
}

HodgeNumbers hodge_from_ledger(const FamilyDescriptor& family) {
    require(family.genus == 0, errc::precondition_failed,
            "the ledger evaluation of H^1 is genus-0 only");
    const int m = family.weight;
    const auto theta = effective_theta(family);
    if (family.decomposed) {
        require(m == 3 && theta[0] && !theta[1] && theta[2], errc::precondition_failed,
                "a decomposed family has theta pattern (iso, 0, iso)");
    } else {
        for (int i = 0; i < m; ++i)
            require(theta[static_cast<std::size_t>(i)], errc::precondition_failed,
                    "the closed formulas assume every theta arrow is nonzero");
    }

    const auto led = degree_ledger(family);

    // component p collects: the cokernel of theta out of line p (type (p, m+1-p)),
    // plus h^0/h^1 of theta-free pieces landing in the same Hodge type
    std::vector<long> comps(static_cast<std::size_t>(m) + 2, 0);
    comps[static_cast<std::size_t>(m) + 1] = h0_from_degree(0, led.deg1[static_cast<std::size_t>(m)]);
    comps[0] = h1_from_degree(0, led.deg0[0]);
    for (int p = 1; p <= m; ++p) {
        const long d0 = led.deg0[static_cast<std::size_t>(p)];
        const long d1 = led.deg1[static_cast<std::size_t>(p - 1)];
        if (theta[static_cast<std::size_t>(m - p)]) {
            const long coker = d1 - d0;
            require(coker >= 0, errc::inconsistent_input,
                    "theta out of line p=" + std::to_string(p) +
                        " is asserted nonzero but the target degree is smaller than the source");
            if (family.decomposed)
                require(coker == 0, errc::inconsistent_input,
                        "decomposed outer arrows are isomorphisms, so source and target degrees "
                        "must agree");
            comps[static_cast<std::size_t>(p)] += coker;
        } else {
            comps[static_cast<std::size_t>(p)] += h1_from_degree(0, d0);
            comps[static_cast<std::size_t>(p)] += h0_from_degree(0, d1);
        }
    }

    HodgeNumbers out;
    out.weight = m + 1;
    for (std::size_t p = 0; p < comps.size(); ++p)
        require(comps[p] == comps[comps.size() - 1 - p], errc::inconsistent_input,
                "the supplied degrees break Hodge duality h^{p,q} = h^{q,p}");
    out.h = std::move(comps);
    out.total = 0;
    for (long v : out.h) out.total += v;
    return out;
}

} // namespace l2hodge
