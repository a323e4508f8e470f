#include "arimat/verify.hpp"

#include <bit>
#include <map>
#include <set>

#include "arimat/error.hpp"
#include "arimat/facering.hpp"
#include "arimat/torsion_poset.hpp"

namespace arimat {

namespace {

// runs the body trapping math failures so one broken check cannot stop
// the report
template <typename F>
CheckResult guarded(const std::string& name, F body) {
    CheckResult res;
    res.name = name;
    try {
        res.pass = body(res.detail);
    } catch (const std::runtime_error& e) {
        res.pass = false;
        res.detail = e.what();
    }
    return res;
}

} // namespace

std::vector<CheckResult> run_verification(const Realization& r, const VerifyOptions& opts) {
    TorsionPoset p = build_poset(r);
    if (opts.corrupt_cover) {
        std::vector<std::pair<int, int>> covers = p.covers();
        if (covers.empty()) throw input_error("no cover to corrupt");
        covers.pop_back();
        p = TorsionPoset(p.nodes(), std::move(covers));
    }
    const std::vector<std::vector<int>> comps = components(p);
    std::vector<CheckResult> out;

    out.push_back(guarded("simplicial-components", [&](std::string& detail) {
        for (const auto& comp : comps) {
            SimplicialCheck chk = is_simplicial(p, comp);
            if (!chk.simplicial) {
                detail = "interval [" + std::to_string(chk.bad_bottom) + ", " +
                         std::to_string(chk.bad_top) + "] is not boolean";
                return false;
            }
        }
        return true;
    }));

    out.push_back(guarded("component-count", [&](std::string& detail) {
        if (Int(comps.size()) == r.empty_structure().multiplicity()) return true;
        detail = "got " + std::to_string(comps.size());
        return false;
    }));

    out.push_back(guarded("component-isomorphism", [&](std::string&) {
        TorsionPoset first = induced(p, comps[0]);
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (!poset_isomorphic(first, induced(p, comps[i]))) return false;
        return true;
    }));

    out.push_back(guarded("rank-counts", [&](std::string&) {
        std::map<int, Int> per_rank, expected;
        for (const PosetNode& nd : p.nodes()) per_rank[nd.rank] += 1;
        for (Subset a : all_subsets(r.size())) {
            SubsetProfile pr = profile(r, a);
            if (pr.independent) expected[std::popcount(a)] += pr.multiplicity;
        }
        return per_rank == expected;
    }));

    out.push_back(guarded("cover-counts", [&](std::string&) {
        for (int id = 0; id < p.size(); ++id) {
            if (static_cast<int>(p.children(id).size()) != p.node(id).rank) return false;
            std::set<Subset> child_subsets;
            for (int c : p.children(id)) child_subsets.insert(p.node(c).subset);
            if (static_cast<int>(child_subsets.size()) != p.node(id).rank) return false;
        }
        return true;
    }));

    out.push_back(guarded("boolean-intervals", [&](std::string&) {
        for (int id = 0; id < p.size(); ++id)
            if (lower_set(p, id).size() != (std::size_t(1) << p.node(id).rank)) return false;
        return true;
    }));

    out.push_back(guarded("chain-oracle", [&](std::string&) {
        for (const auto& comp : comps)
            if (hilbert_via_chains(p, comp) != hilbert_from_h(h_from_f(f_vector(p, comp))))
                return false;
        return true;
    }));

    MainTheoremCheck mt = verify_main_theorem(r);
    out.push_back(guarded("main-theorem", [&](std::string& detail) {
        if (mt.matches) return true;
        detail = mt.lhs.to_string() + " vs " + mt.rhs.to_string();
        return false;
    }));

    out.push_back(guarded("main-theorem-dual-route", [&](std::string& detail) {
        if (!mt.dual_route_checked) {
            detail = "vacuous: torsion in M(empty)";
            return true;
        }
        return mt.dual_route_matches;
    }));

    out.push_back(guarded("duality-involution", [&](std::string& detail) {
        Realization base = modulo_initial_torsion(r);
        if (profile(base, (Subset(1) << r.size()) - 1).multiplicity != 1) {
            detail = "vacuous: dual has initial torsion";
            return true;
        }
        Realization dd =
            dual_realization(modulo_initial_torsion(dual_realization(base)));
        return arithmetic_tutte(dd) == arithmetic_tutte(base);
    }));

    out.push_back(guarded("point-decomposition", [&](std::string& detail) {
        PointDecomposition pd = verify_point_decomposition(r);
        if (pd.matches) return true;
        detail = pd.tutte_at_one.to_string("y") + " vs " + pd.point_sum.to_string("y");
        return false;
    }));

    out.push_back(guarded("gt-evaluation", [&](std::string& detail) {
        if (!r.empty_structure().torsion.empty()) {
            detail = "vacuous: torsion in M(empty)";
            return true;
        }
        BivariatePoly expected =
            BivariatePoly::shifted_power(profile(r, (Subset(1) << r.size()) - 1).d, 0) *
            arithmetic_tutte(r);
        return evaluate_gt(grothendieck_class(r)) == expected;
    }));

    return out;
}

} // namespace arimat
