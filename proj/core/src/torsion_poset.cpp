#include "arimat/torsion_poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "arimat/error.hpp"

namespace arimat {

namespace {

// relations + L_A
Lattice subset_lattice(const Realization& r, Subset a) {
    std::vector<std::vector<Int>> rows;
    for (int b : subset_members(a)) rows.push_back(r.generators()[b]);
    return lattice_sum(r.relations(), Lattice(r.ambient_rank(), rows));
}

std::vector<Int> basis_row(const Lattice& l, std::size_t i) {
    std::vector<Int> v(l.ambient_dim());
    for (std::size_t j = 0; j < l.ambient_dim(); ++j) v[j] = l.basis().at(i, j);
    return v;
}

// reachability bitsets; bit x of row y set iff x <= y
std::vector<std::vector<std::uint64_t>> below_table(const TorsionPoset& p) {
    const int n = p.size();
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> below(n, std::vector<std::uint64_t>(words, 0));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.node(a).rank < p.node(b).rank; });
    for (int i : order) {
        below[i][i >> 6] |= std::uint64_t(1) << (i & 63);
        for (int c : p.children(i))
            for (int w = 0; w < words; ++w) below[i][w] |= below[c][w];
    }
    return below;
}

bool bit_set(const std::vector<std::uint64_t>& row, int x) {
    return (row[x >> 6] >> (x & 63)) & 1;
}

std::vector<int> closure(const TorsionPoset& p, int id, bool upward) {
    p.node(id);
    std::vector<char> seen(p.size(), 0);
    std::vector<int> stack{id};
    seen[id] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : upward ? p.parents(x) : p.children(x))
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

// maximal (toward == below) or minimal (toward == above) elements of the
// intersection of the two closures
std::vector<int> extremal_common(const TorsionPoset& p, int a, int b, bool toward_bottom) {
    p.node(a);
    p.node(b);
    auto table = below_table(p);
    auto le = [&](int x, int y) { return bit_set(table[y], x); };
    std::vector<int> common;
    for (int x = 0; x < p.size(); ++x) {
        bool in = toward_bottom ? (le(x, a) && le(x, b)) : (le(a, x) && le(b, x));
        if (in) common.push_back(x);
    }
    std::vector<int> out;
    for (int x : common) {
        bool extremal = true;
        for (int y : common) {
            if (y == x) continue;
            if (toward_bottom ? le(x, y) : le(y, x)) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back(x);
    }
    return out;
}

UnivariatePoly upow(const UnivariatePoly& base, int e) {
    UnivariatePoly out = UnivariatePoly::constant(Int(1));
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

} // namespace

std::string Character::to_string() const {
    bool trivial = true;
    for (const Rat& v : values)
        if (v != 0) trivial = false;
    if (trivial) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        os << values[i];
    }
    return os.str();
}

TorsionPoset::TorsionPoset(std::vector<PosetNode> nodes, std::vector<std::pair<int, int>> covers)
    : nodes_(std::move(nodes)), covers_(std::move(covers)) {
    const int n = size();
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
        throw input_error("duplicate cover");
    parents_.assign(n, {});
    children_.assign(n, {});
    for (const auto& [c, p] : covers_) {
        if (c < 0 || c >= n || p < 0 || p >= n)
            throw input_error("cover endpoint out of range");
        if (nodes_[p].rank != nodes_[c].rank + 1)
            throw input_error("cover must raise rank by exactly one");
        parents_[c].push_back(p);
        children_[p].push_back(c);
    }
}

const PosetNode& TorsionPoset::node(int id) const {
    if (id < 0 || id >= size()) throw input_error("poset id out of range");
    return nodes_[static_cast<std::size_t>(id)];
}

const std::vector<int>& TorsionPoset::parents(int id) const {
    node(id);
    return parents_[static_cast<std::size_t>(id)];
}

const std::vector<int>& TorsionPoset::children(int id) const {
    node(id);
    return children_[static_cast<std::size_t>(id)];
}

std::vector<Character> enumerate_characters(const Realization& r, Subset a) {
    SubsetProfile pr = profile(r, a);
    if (!pr.independent) throw input_error("characters require an independent subset");
    Lattice sub = subset_lattice(r, a);
    Lattice dom = saturate(sub);
    const std::size_t k = dom.rank();
    if (k == 0) return {Character{dom, {}}};

    // rows: coordinates of the sublattice basis on the saturated basis
    IntMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        auto e = express_in_basis(basis_row(sub, i), dom);
        if (!e || !e->integral)
            throw verification_error("saturation does not contain the sublattice");
        for (std::size_t j = 0; j < k; ++j) c.at(i, j) = numerator(e->coords[j]);
    }
    SmithDecomposition s = smith_normal_form(c);
    if (s.invariants.size() != k)
        throw verification_error("inclusion matrix of a saturation must be nonsingular");

    // solutions of c v = 0 mod 1: v = V u with u_i in (1/d_i) Z, taken mod 1
    Int total = 1;
    for (const Int& d : s.invariants) total *= d;
    std::vector<Character> out;
    for (Int t = 0; t < total; ++t) {
        std::vector<Rat> u(k);
        Int rem = t;
        for (std::size_t i = k; i-- > 0;) {
            const Int& di = s.invariants[i];
            u[i] = Rat(rem % di) / Rat(di);
            rem /= di;
        }
        std::vector<Rat> vals(k);
        for (std::size_t i = 0; i < k; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += Rat(s.v.at(i, j)) * u[j];
            vals[i] = mod1(acc);
        }
        out.push_back(Character{dom, std::move(vals)});
    }
    return out;
}

Character restrict_character(const Realization& r, const PosetNode& from, int drop) {
    if (drop < 0 || drop >= r.size() || ((from.subset >> drop) & 1) == 0)
        throw input_error("dropped element not in the subset");
    Subset child = from.subset ^ (Subset(1) << drop);
    Lattice dom = saturate(subset_lattice(r, child));
    std::vector<Rat> vals(dom.rank());
    for (std::size_t i = 0; i < dom.rank(); ++i) {
        auto e = express_in_basis(basis_row(dom, i), from.character.domain);
        if (!e || !e->integral)
            throw verification_error("child saturation must lie inside the parent domain");
        Rat acc = 0;
        for (std::size_t j = 0; j < from.character.values.size(); ++j)
            acc += e->coords[j] * from.character.values[j];
        vals[i] = mod1(acc);
    }
    return Character{dom, std::move(vals)};
}

TorsionPoset build_poset(const Realization& r) {
    std::vector<PosetNode> nodes;
    std::map<std::pair<Subset, std::vector<Rat>>, int> index;
    for (Subset a : all_subsets(r.size())) {
        if (!profile(r, a).independent) continue;
        for (Character& c : enumerate_characters(r, a)) {
            index.emplace(std::make_pair(a, c.values), static_cast<int>(nodes.size()));
            nodes.push_back(PosetNode{a, std::move(c), std::popcount(a)});
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
        for (int b : subset_members(nodes[id].subset)) {
            Character rc = restrict_character(r, nodes[id], b);
            auto it = index.find({nodes[id].subset ^ (Subset(1) << b), rc.values});
            if (it == index.end())
                throw verification_error("restricted character missing from the enumeration");
            covers.emplace_back(it->second, id);
        }
    }
    return TorsionPoset(std::move(nodes), std::move(covers));
}

std::vector<int> lower_set(const TorsionPoset& p, int id) { return closure(p, id, false); }
std::vector<int> upper_set(const TorsionPoset& p, int id) { return closure(p, id, true); }

std::vector<std::vector<int>> components(const TorsionPoset& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp, stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (const auto& adj : {p.parents(x), p.children(x)})
                for (int y : adj)
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> meet_set(const TorsionPoset& p, int a, int b) {
    return extremal_common(p, a, b, true);
}

std::vector<int> join_set(const TorsionPoset& p, int a, int b) {
    return extremal_common(p, a, b, false);
}

int meet(const TorsionPoset& p, int a, int b) {
    std::vector<int> ms = meet_set(p, a, b);
    if (ms.empty()) throw input_error("no common lower bound");
    if (ms.size() > 1) throw input_error("meet is not unique");
    return ms[0];
}

TorsionPoset induced(const TorsionPoset& p, const std::vector<int>& ids) {
    std::vector<int> keep = ids;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::map<int, int> remap;
    std::vector<PosetNode> nodes;
    for (int id : keep) {
        remap.emplace(id, static_cast<int>(nodes.size()));
        nodes.push_back(p.node(id));
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& [c, par] : p.covers()) {
        auto ic = remap.find(c), ip = remap.find(par);
        if (ic != remap.end() && ip != remap.end()) covers.emplace_back(ic->second, ip->second);
    }
    return TorsionPoset(std::move(nodes), std::move(covers));
}

SimplicialCheck is_simplicial(const TorsionPoset& p, const std::vector<int>& component) {
    SimplicialCheck res;
    if (component.empty()) return res;
    std::set<int> comp(component.begin(), component.end());
    auto table = below_table(p);
    auto le = [&](int x, int y) { return bit_set(table[y], x); };

    std::vector<int> bottoms;
    for (int x : component) {
        bool has_child = false;
        for (int c : p.children(x))
            if (comp.count(c)) has_child = true;
        if (!has_child) bottoms.push_back(x);
    }
    if (bottoms.size() != 1) {
        res.simplicial = false;
        res.bad_bottom = bottoms.front();
        res.bad_top = bottoms.size() > 1 ? bottoms[1] : bottoms.front();
        return res;
    }
    const int bottom = bottoms[0];
    const int base_rank = p.node(bottom).rank;

    for (int top : component) {
        auto fail = [&] {
            res.simplicial = false;
            res.bad_bottom = bottom;
            res.bad_top = top;
        };
        const int k = p.node(top).rank - base_rank;
        std::vector<int> interval;
        for (int x : component)
            if (le(x, top)) interval.push_back(x);
        if (k < 0 || k > 62 || !le(bottom, top) ||
            interval.size() != (std::uint64_t(1) << k)) {
            fail();
            return res;
        }
        std::vector<int> atoms;
        for (int x : interval)
            if (p.node(x).rank == base_rank + 1) atoms.push_back(x);
        if (static_cast<int>(atoms.size()) != k) {
            fail();
            return res;
        }
        // the interval must be the boolean lattice on its atom supports
        std::vector<std::uint64_t> support(interval.size(), 0);
        std::set<std::uint64_t> distinct;
        for (std::size_t i = 0; i < interval.size(); ++i) {
            for (std::size_t j = 0; j < atoms.size(); ++j)
                if (le(atoms[j], interval[i])) support[i] |= std::uint64_t(1) << j;
            if (std::popcount(support[i]) != p.node(interval[i]).rank - base_rank) {
                fail();
                return res;
            }
            distinct.insert(support[i]);
        }
        if (distinct.size() != interval.size()) {
            fail();
            return res;
        }
        for (std::size_t i = 0; i < interval.size(); ++i)
            for (std::size_t j = 0; j < interval.size(); ++j) {
                bool sub = (support[i] & ~support[j]) == 0;
                if (le(interval[i], interval[j]) != sub) {
                    fail();
                    return res;
                }
            }
    }
    return res;
}

FVector f_vector(const TorsionPoset& p, const std::vector<int>& component) {
    if (component.empty()) return {};
    int base = p.node(component.front()).rank, top = base;
    for (int x : component) {
        base = std::min(base, p.node(x).rank);
        top = std::max(top, p.node(x).rank);
    }
    std::vector<Int> counts(static_cast<std::size_t>(top - base + 1), Int(0));
    for (int x : component) counts[static_cast<std::size_t>(p.node(x).rank - base)] += 1;
    return FVector{std::move(counts)};
}

bool poset_isomorphic(const TorsionPoset& a, const TorsionPoset& b) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
    using Sig = std::tuple<int, int, int>;
    auto sig = [](const TorsionPoset& p, int i) {
        return Sig{p.node(i).rank, static_cast<int>(p.children(i).size()),
                   static_cast<int>(p.parents(i).size())};
    };
    std::multiset<Sig> sa, sb;
    std::map<Sig, std::vector<int>> pool;
    for (int i = 0; i < a.size(); ++i) sa.insert(sig(a, i));
    for (int i = 0; i < b.size(); ++i) {
        sb.insert(sig(b, i));
        pool[sig(b, i)].push_back(i);
    }
    if (sa != sb) return false;

    std::set<std::pair<int, int>> bcov(b.covers().begin(), b.covers().end());
    std::vector<int> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    // most constrained first: rare signatures, then high degree
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return std::pair(pool[sig(a, x)].size(), x) < std::pair(pool[sig(a, y)].size(), y);
    });
    std::vector<int> img(a.size(), -1);
    std::vector<char> used(b.size(), 0);

    auto consistent = [&](int x, int y) {
        for (int c : a.children(x))
            if (img[c] >= 0 && !bcov.count({img[c], y})) return false;
        for (int par : a.parents(x))
            if (img[par] >= 0 && !bcov.count({y, img[par]})) return false;
        return true;
    };
    std::function<bool(std::size_t)> place = [&](std::size_t pos) {
        if (pos == order.size()) return true;
        int x = order[pos];
        for (int y : pool[sig(a, x)]) {
            if (used[y] || !consistent(x, y)) continue;
            img[x] = y;
            used[y] = 1;
            if (place(pos + 1)) return true;
            img[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    return place(0);
}

std::vector<std::vector<Rat>> rank_zero_points(const Realization& r) {
    std::set<std::vector<Rat>> pts;
    for (Subset a : all_subsets(r.size())) {
        SubsetProfile pr = profile(r, a);
        if (!pr.independent || pr.d != 0) continue;
        // the domain saturates to the full ambient lattice, so the values
        // are ambient coordinates
        for (const Character& c : enumerate_characters(r, a)) pts.insert(c.values);
    }
    return {pts.begin(), pts.end()};
}

PointDecomposition verify_point_decomposition(const Realization& r) {
    Realization re = essentialize(r);
    PointDecomposition out;
    out.tutte_at_one = arithmetic_tutte(re).at_x1();
    const UnivariatePoly ym1(std::vector<Int>{-1, 1});
    for (const auto& phi : rank_zero_points(re)) {
        Subset mask = 0;
        for (int j = 0; j < re.size(); ++j) {
            Rat v = 0;
            for (std::size_t t = 0; t < re.ambient_rank(); ++t)
                v += phi[t] * Rat(re.generators()[j][t]);
            if (mod1(v) == 0) mask |= Subset(1) << j;
        }
        // ordinary Tutte of the vanishing sublist at x = 1: only subsets
        // of full rank within the sublist survive
        const int rloc = profile(re, mask).cork;
        for (Subset s = mask;; s = (s - 1) & mask) {
            if (profile(re, s).cork == rloc)
                out.point_sum = out.point_sum + upow(ym1, std::popcount(s) - rloc);
            if (s == 0) break;
        }
    }
    out.matches = out.tutte_at_one == out.point_sum;
    return out;
}

} // namespace arimat
