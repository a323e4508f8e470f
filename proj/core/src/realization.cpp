#include "arimat/realization.hpp"

#include <algorithm>
#include <bit>

#include "arimat/error.hpp"

namespace arimat {

std::vector<Subset> all_subsets(int n) {
    if (n < 0 || n > 62) throw input_error("ground set too large for subset masks");
    std::vector<Subset> out;
    out.reserve(std::size_t(1) << n);
    for (Subset a = 0; a < (Subset(1) << n); ++a) out.push_back(a);
    std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<int> subset_members(Subset a) {
    std::vector<int> out;
    for (int i = 0; a >> i; ++i)
        if ((a >> i) & 1) out.push_back(i);
    return out;
}

Realization::Realization(std::size_t ambient_rank, Lattice relations,
                         std::vector<std::vector<Int>> generators)
    : ambient_(ambient_rank), relations_(std::move(relations)), gens_(std::move(generators)) {
    if (relations_.ambient_dim() != ambient_)
        throw input_error("relations lattice lives in a different ambient rank");
    if (gens_.size() > 62) throw input_error("ground set too large for subset masks");
    for (const auto& g : gens_)
        if (g.size() != ambient_)
            throw input_error("generator length differs from the ambient rank");
    empty_ = cokernel_structure(IntMatrix(ambient_, 0), relations_);
}

Realization::Realization(std::size_t ambient_rank, std::vector<std::vector<Int>> generators)
    : Realization(ambient_rank, Lattice(ambient_rank), std::move(generators)) {}

IntMatrix Realization::generator_columns(Subset a) const {
    auto members = subset_members(a);
    IntMatrix m(ambient_, members.size());
    for (std::size_t k = 0; k < members.size(); ++k)
        for (std::size_t j = 0; j < ambient_; ++j) m.at(j, k) = gens_[members[k]][j];
    return m;
}

SubsetProfile profile(const Realization& r, Subset a) {
    if ((a >> r.size()) != 0) throw input_error("subset outside the ground set");
    SubsetProfile p;
    p.subset = a;
    p.structure = cokernel_structure(r.generator_columns(a), r.relations());
    p.d = p.structure.free_rank;
    p.cork = r.d_empty() - p.d;
    p.multiplicity = p.structure.multiplicity();
    p.independent = p.cork == std::popcount(a);
    return p;
}

int matroid_rank(const Realization& r) {
    return profile(r, (Subset(1) << r.size()) - 1).cork;
}

bool is_essential(const Realization& r) {
    return profile(r, (Subset(1) << r.size()) - 1).d == 0;
}

BivariatePoly arithmetic_tutte(const Realization& r) {
    const int rk = matroid_rank(r);
    BivariatePoly t;
    for (Subset a : all_subsets(r.size())) {
        SubsetProfile p = profile(r, a);
        t = t + BivariatePoly::shifted_power(rk - p.cork, std::popcount(a) - p.cork)
                    .scaled(p.multiplicity);
    }
    return t;
}

Realization dual_realization(const Realization& r) {
    if (r.relations().rank() != 0)
        throw input_error(
            "dual realization needs a trivial relations lattice; "
            "apply modulo_initial_torsion first");
    const std::size_t n = r.size();
    std::vector<std::vector<Int>> rows(r.ambient_rank(), std::vector<Int>(n));
    for (std::size_t j = 0; j < r.ambient_rank(); ++j)
        for (std::size_t i = 0; i < n; ++i) rows[j][i] = r.generators()[i][j];
    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    return Realization(n, Lattice(n, rows), std::move(basis));
}

Realization modulo_initial_torsion(const Realization& r) {
    if (r.relations().rank() == 0) return r;
    const std::size_t big = r.ambient_rank();
    SmithDecomposition s = smith_normal_form(r.relations().basis().transposed());
    const std::size_t drop = s.invariants.size();
    const std::size_t small = big - drop;
    std::vector<std::vector<Int>> gens(r.size(), std::vector<Int>(small));
    for (int i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < small; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < big; ++k)
                acc += s.u.at(drop + j, k) * r.generators()[i][k];
            gens[i][j] = acc;
        }
    return Realization(small, Lattice(small), std::move(gens));
}

namespace {

std::vector<Int> coords_on(const Lattice& l, const std::vector<Int>& v) {
    auto res = express_in_basis(v, l);
    if (!res || !res->integral)
        throw verification_error("vector expected inside the spanned sublattice");
    std::vector<Int> out(res->coords.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = numerator(res->coords[i]);
    return out;
}

} // namespace

Realization essentialize(const Realization& r) {
    Lattice span = lattice_sum(r.relations(), Lattice(r.ambient_rank(), r.generators()));
    Lattice sat = saturate(span);
    std::vector<std::vector<Int>> rel_rows;
    for (std::size_t i = 0; i < r.relations().rank(); ++i)
        rel_rows.push_back(coords_on(sat, r.relations().basis().row(i)));
    std::vector<std::vector<Int>> gens;
    for (const auto& g : r.generators()) gens.push_back(coords_on(sat, g));
    return Realization(sat.rank(), Lattice(sat.rank(), rel_rows), std::move(gens));
}

GrothendieckClass grothendieck_class(const Realization& r) {
    if (!r.empty_structure().torsion.empty())
        throw input_error(
            "grothendieck class needs a free ambient group; "
            "apply modulo_initial_torsion first");
    Realization base = r.relations().rank() == 0 ? r : modulo_initial_torsion(r);
    Realization dual = dual_realization(base);
    const Subset full = (Subset(1) << base.size()) - 1;
    GrothendieckClass c;
    for (Subset a : all_subsets(base.size()))
        c.pairs.emplace_back(profile(base, a).structure, profile(dual, full ^ a).structure);
    return c;
}

BivariatePoly evaluate_gt(const GrothendieckClass& c) {
    BivariatePoly t;
    for (const auto& [g, gd] : c.pairs)
        t = t + BivariatePoly::shifted_power(g.free_rank, gd.free_rank).scaled(g.multiplicity());
    return t;
}

} // namespace arimat
