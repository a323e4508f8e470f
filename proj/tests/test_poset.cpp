#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "arimat/error.hpp"
#include "arimat/torsion_poset.hpp"
#include "test_support.hpp"

using namespace arimat;

namespace {

std::vector<Int> vec(std::vector<int> vals) { return {vals.begin(), vals.end()}; }

Realization make(std::size_t d, std::vector<std::vector<int>> gens,
                 std::vector<std::vector<int>> rel = {}) {
    std::vector<std::vector<Int>> gs;
    for (auto& g : gens) gs.push_back(vec(g));
    std::vector<std::vector<Int>> rs;
    for (auto& r : rel) rs.push_back(vec(r));
    return Realization(d, Lattice(d, rs), gs);
}

Realization m1() { return make(2, {{2, 0}, {0, 1}}); }
Realization m2() { return make(2, {{1, 1}, {1, -1}}); }
Realization m3() { return make(2, {{1, 1}, {1, -1}, {1, 0}}); }

Rat half() { return Rat(1) / 2; }
Rat quarter() { return Rat(1) / 4; }

// value of the character at an ambient vector of its domain
Rat char_value(const Character& c, const std::vector<Int>& v) {
    auto e = express_in_basis(v, c.domain);
    REQUIRE(e.has_value());
    REQUIRE(e->integral);
    Rat s = 0;
    for (std::size_t i = 0; i < c.values.size(); ++i) s += e->coords[i] * c.values[i];
    return mod1(s);
}

std::vector<Int> lattice_combo(const Lattice& l, const std::vector<int>& u) {
    std::vector<Int> v(l.ambient_dim(), Int(0));
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.ambient_dim(); ++j)
            v[j] += Int(u[i]) * l.basis().at(i, j);
    return v;
}

Realization random_realization(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(1, 3), count(0, 4), entry(-2, 2), pct(0, 9);
    const std::size_t d = static_cast<std::size_t>(dim(rng));
    const int n = count(rng);
    std::vector<std::vector<Int>> gens(static_cast<std::size_t>(n), std::vector<Int>(d));
    for (auto& g : gens)
        for (auto& x : g) x = entry(rng);
    std::vector<std::vector<Int>> rel_rows;
    if (pct(rng) < 4) {
        std::uniform_int_distribution<std::size_t> rows(1, d);
        rel_rows.resize(rows(rng), std::vector<Int>(d));
        for (auto& row : rel_rows)
            for (auto& x : row) x = entry(rng);
    }
    return Realization(d, Lattice(d, rel_rows), gens);
}

// bottom, three atoms, one top covering all of them; no rank-2 boolean
// interval can hold three atoms
TorsionPoset pinwheel() {
    std::vector<PosetNode> nodes(5);
    for (int i = 1; i <= 3; ++i) nodes[static_cast<std::size_t>(i)].rank = 1;
    nodes[4].rank = 2;
    return TorsionPoset(std::move(nodes), {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Int independent_count(const Realization& r, int card) {
    Int total = 0;
    for (Subset a : all_subsets(r.size())) {
        SubsetProfile p = profile(r, a);
        if (p.independent && std::popcount(a) == card) total += p.multiplicity;
    }
    return total;
}

} // namespace

TEST_CASE("character rendering") {
    Lattice id2(2, {vec({1, 0}), vec({0, 1})});
    CHECK(Character{Lattice(0), {}}.to_string() == "e");
    CHECK(Character{id2, {Rat(0), Rat(0)}}.to_string() == "e");
    CHECK(Character{id2, {half(), Rat(0)}}.to_string() == "1/2,0");
    CHECK(Character{id2, {Rat(0), quarter()}}.to_string() == "0,1/4");
}

TEST_CASE("character enumeration on pinned groups") {
    auto cs = enumerate_characters(m1(), 0b01);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].domain.basis().rows() == 1);
    CHECK(cs[0].domain.basis().at(0, 0) == 1);
    CHECK(cs[0].domain.basis().at(0, 1) == 0);
    CHECK(cs[0].values == std::vector<Rat>{Rat(0)});
    CHECK(cs[1].values == std::vector<Rat>{half()});

    cs = enumerate_characters(m1(), 0b11);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].values == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(cs[1].values == std::vector<Rat>{half(), Rat(0)});

    cs = enumerate_characters(m2(), 0b11);
    REQUIRE(cs.size() == 2);
    CHECK(cs[1].values == std::vector<Rat>{half(), half()});

    cs = enumerate_characters(make(1, {{4}}), 0b1);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0].values == std::vector<Rat>{Rat(0)});
    CHECK(cs[1].values == std::vector<Rat>{quarter()});
    CHECK(cs[2].values == std::vector<Rat>{half()});
    CHECK(cs[3].values == std::vector<Rat>{3 * quarter()});

    cs = enumerate_characters(make(2, {{2, 0}, {0, 2}}), 0b11);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0].values == std::vector<Rat>{Rat(0), Rat(0)});
    std::set<std::vector<Rat>> seen;
    for (auto& c : cs) seen.insert(c.values);
    CHECK(seen.size() == 4);
    CHECK(seen.count({half(), half()}) == 1);

    cs = enumerate_characters(m2(), 0);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].values.empty());
    CHECK(cs[0].domain.rank() == 0);

    CHECK_THROWS_AS(enumerate_characters(m3(), 0b111), input_error);
    CHECK_THROWS_AS(enumerate_characters(make(1, {{0}}), 0b1), input_error);
}

TEST_CASE("characters are exactly the homomorphisms killing the sublattice") {
    std::mt19937 rng(41001);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 50; ++iter) {
        Realization r = random_realization(rng);
        for (Subset a : all_subsets(r.size())) {
            SubsetProfile p = profile(r, a);
            if (!p.independent) continue;
            auto cs = enumerate_characters(r, a);
            CHECK(Int(cs.size()) == p.multiplicity);
            std::set<std::vector<Rat>> distinct;
            for (auto& c : cs) distinct.insert(c.values);
            CHECK(Int(distinct.size()) == p.multiplicity);
            for (const Rat& v : cs[0].values) CHECK(v == 0);

            std::vector<std::vector<Int>> rows;
            for (int b : subset_members(a)) rows.push_back(r.generators()[b]);
            Lattice sub = lattice_sum(r.relations(), Lattice(r.ambient_rank(), rows));
            CHECK(cs[0].domain == saturate(sub));
            for (auto& c : cs) {
                for (const Rat& v : c.values) {
                    CHECK(v >= 0);
                    CHECK(v < 1);
                }
                for (std::size_t i = 0; i < sub.rank(); ++i) {
                    std::vector<Int> row(sub.ambient_dim());
                    for (std::size_t j = 0; j < sub.ambient_dim(); ++j)
                        row[j] = sub.basis().at(i, j);
                    CHECK(char_value(c, row) == 0);
                }
                std::vector<int> u(c.domain.rank());
                for (auto& x : u) x = coeff(rng);
                Rat direct = 0;
                for (std::size_t i = 0; i < u.size(); ++i) direct += Rat(u[i]) * c.values[i];
                CHECK(char_value(c, lattice_combo(c.domain, u)) == mod1(direct));
            }
        }
    }
}

TEST_CASE("restriction to a dropped element") {
    TorsionPoset p = build_poset(m1());
    const PosetNode& zeta = p.node(5);
    REQUIRE(zeta.subset == 0b11);
    REQUIRE(zeta.character.values == std::vector<Rat>{half(), Rat(0)});

    Character c = restrict_character(m1(), zeta, 1);
    CHECK(c.values == std::vector<Rat>{half()});
    CHECK(c.domain.basis().at(0, 0) == 1);
    CHECK(c.domain.basis().at(0, 1) == 0);

    c = restrict_character(m1(), zeta, 0);
    CHECK(c.values == std::vector<Rat>{Rat(0)});
    CHECK(c.domain.basis().at(0, 0) == 0);
    CHECK(c.domain.basis().at(0, 1) == 1);

    CHECK_THROWS_AS(restrict_character(m1(), p.node(1), 1), input_error);
    CHECK_THROWS_AS(restrict_character(m1(), zeta, 7), input_error);
}

TEST_CASE("poset of the flagship examples") {
    struct NodeData {
        Subset s;
        std::vector<Rat> v;
        int rank;
    };

    TorsionPoset p = build_poset(m1());
    REQUIRE(p.size() == 6);
    std::vector<NodeData> exp = {
        {0, {}, 0},          {1, {Rat(0)}, 1},         {1, {half()}, 1},
        {2, {Rat(0)}, 1},    {3, {Rat(0), Rat(0)}, 2}, {3, {half(), Rat(0)}, 2},
    };
    for (int i = 0; i < 6; ++i) {
        CHECK(p.node(i).subset == exp[static_cast<std::size_t>(i)].s);
        CHECK(p.node(i).character.values == exp[static_cast<std::size_t>(i)].v);
        CHECK(p.node(i).rank == exp[static_cast<std::size_t>(i)].rank);
    }
    std::vector<std::pair<int, int>> covers_m1 = {{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                                  {2, 5}, {3, 4}, {3, 5}};
    CHECK(p.covers() == covers_m1);
    // the full-set element carrying a character covers the singleton
    // carrying its restriction, never the other singleton
    auto has = [&](int c, int par) {
        return std::find(p.covers().begin(), p.covers().end(), std::pair{c, par}) !=
               p.covers().end();
    };
    CHECK(has(1, 4));
    CHECK(has(2, 5));
    CHECK(!has(2, 4));
    CHECK(!has(1, 5));

    p = build_poset(m2());
    REQUIRE(p.size() == 5);
    CHECK(p.node(3).character.values == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(p.node(4).character.values == std::vector<Rat>{half(), half()});
    std::vector<std::pair<int, int>> covers_m2 = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK(p.covers() == covers_m2);

    p = build_poset(m3());
    REQUIRE(p.size() == 8);
    CHECK(p.node(4).subset == 0b011);
    CHECK(p.node(5).subset == 0b011);
    CHECK(p.node(5).character.values == std::vector<Rat>{half(), half()});
    CHECK(p.node(6).subset == 0b101);
    CHECK(p.node(7).subset == 0b110);
    std::vector<std::pair<int, int>> covers_m3 = {{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                                  {1, 5}, {1, 6}, {2, 4}, {2, 5},
                                                  {2, 7}, {3, 6}, {3, 7}};
    CHECK(p.covers() == covers_m3);
}

TEST_CASE("poset over an ambient with torsion") {
    Realization r = make(2, {{0, 1}}, {{2, 0}});
    REQUIRE(r.empty_structure().multiplicity() == 2);
    TorsionPoset p = build_poset(r);
    REQUIRE(p.size() == 4);
    CHECK(p.node(0).subset == 0);
    CHECK(p.node(0).character.values == std::vector<Rat>{Rat(0)});
    CHECK(p.node(1).character.values == std::vector<Rat>{half()});
    CHECK(p.node(2).character.values == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(p.node(3).character.values == std::vector<Rat>{half(), Rat(0)});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

    auto comps = components(p);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1, 3});
    CHECK(poset_isomorphic(induced(p, comps[0]), induced(p, comps[1])));
    CHECK(f_vector(p, comps[0]) == FVector{{1, 1}});
    CHECK(f_vector(p, comps[1]) == FVector{{1, 1}});
}

TEST_CASE("synthetic poset validation") {
    std::vector<PosetNode> nodes(3);
    nodes[1].rank = 1;
    nodes[2].rank = 2;
    CHECK_THROWS_AS(TorsionPoset(nodes, {{0, 2}}), input_error);
    CHECK_THROWS_AS(TorsionPoset(nodes, {{1, 0}}), input_error);
    CHECK_THROWS_AS(TorsionPoset(nodes, {{0, 5}}), input_error);
    CHECK_THROWS_AS(TorsionPoset(nodes, {{0, 1}, {0, 1}}), input_error);

    TorsionPoset p(nodes, {{1, 2}, {0, 1}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.parents(0) == std::vector<int>{1});
    CHECK(p.children(2) == std::vector<int>{1});
    CHECK_THROWS_AS(p.node(3), input_error);
}

TEST_CASE("lower and upper sets") {
    TorsionPoset p = build_poset(m2());
    CHECK(lower_set(p, 0) == std::vector<int>{0});
    CHECK(lower_set(p, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(lower_set(p, 4) == std::vector<int>{0, 1, 2, 4});
    CHECK(upper_set(p, 4) == std::vector<int>{4});
    CHECK(upper_set(p, 1) == std::vector<int>{1, 3, 4});
    CHECK(upper_set(p, 0) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("meets and joins") {
    TorsionPoset p = build_poset(m2());
    CHECK(meet(p, 1, 3) == 1);
    CHECK(meet(p, 3, 1) == 1);
    CHECK(meet(p, 0, 4) == 0);
    CHECK(meet(p, 4, 4) == 4);
    CHECK(meet(p, 1, 2) == 0);
    CHECK(meet_set(p, 3, 4) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(meet(p, 3, 4), input_error);
    CHECK(join_set(p, 1, 2) == std::vector<int>{3, 4});
    CHECK(join_set(p, 3, 4).empty());
    CHECK(join_set(p, 0, 1) == std::vector<int>{1});

    TorsionPoset q = build_poset(make(2, {{0, 1}}, {{2, 0}}));
    CHECK_THROWS_AS(meet(q, 0, 1), input_error);
    CHECK(meet_set(q, 0, 1).empty());
    CHECK(meet_set(q, 2, 3).empty());
    CHECK(join_set(q, 0, 1).empty());
}

TEST_CASE("simplicial components") {
    for (Realization r : {m1(), m2(), m3()}) {
        TorsionPoset p = build_poset(r);
        for (const auto& comp : components(p)) {
            SimplicialCheck chk = is_simplicial(p, comp);
            CHECK(chk.simplicial);
        }
    }

    TorsionPoset bad = pinwheel();
    SimplicialCheck chk = is_simplicial(bad, components(bad)[0]);
    CHECK(!chk.simplicial);
    CHECK(chk.bad_bottom == 0);
    CHECK(chk.bad_top == 4);

    CHECK(is_simplicial(bad, {0}).simplicial);
    CHECK(is_simplicial(bad, {0, 1}).simplicial);
}

TEST_CASE("f vectors of the flagship examples") {
    TorsionPoset p = build_poset(m1());
    FVector f = f_vector(p, components(p)[0]);
    CHECK(f == FVector{{1, 3, 2}});
    CHECK(f.to_string() == "(1, 3, 2)");

    p = build_poset(m2());
    CHECK(f_vector(p, components(p)[0]) == FVector{{1, 2, 2}});

    p = build_poset(m3());
    CHECK(f_vector(p, components(p)[0]) == FVector{{1, 3, 4}});

    CHECK(HVector{{1, 0, 1}}.to_string() == "(1, 0, 1)");
}

TEST_CASE("component count and isomorphism type") {
    std::mt19937 rng(41002);
    for (int iter = 0; iter < 35; ++iter) {
        Realization r = random_realization(rng);
        TorsionPoset p = build_poset(r);
        auto comps = components(p);
        CHECK(Int(comps.size()) == r.empty_structure().multiplicity());
        TorsionPoset first = induced(p, comps[0]);
        for (std::size_t i = 1; i < comps.size(); ++i)
            CHECK(poset_isomorphic(first, induced(p, comps[i])));
    }
}

TEST_CASE("rank level counts match the independent multiplicities") {
    TorsionPoset p = build_poset(m3());
    CHECK(f_vector(p, {0, 1, 2, 3, 4, 5, 6, 7}) == FVector{{1, 3, 4}});
    CHECK(independent_count(m3(), 1) == 3);
    CHECK(independent_count(m3(), 2) == 4);

    std::mt19937 rng(41003);
    for (int iter = 0; iter < 35; ++iter) {
        Realization r = random_realization(rng);
        TorsionPoset tp = build_poset(r);
        std::map<int, Int> per_rank;
        for (const PosetNode& nd : tp.nodes()) per_rank[nd.rank] += 1;
        for (int card = 0; card <= r.size(); ++card) {
            Int want = independent_count(r, card);
            Int got = per_rank.count(card) ? per_rank[card] : Int(0);
            CHECK(got == want);
        }
    }
}

TEST_CASE("every element covers one child per dropped index") {
    std::mt19937 rng(41004);
    for (int iter = 0; iter < 35; ++iter) {
        Realization r = random_realization(rng);
        TorsionPoset p = build_poset(r);
        for (int id = 0; id < p.size(); ++id) {
            const PosetNode& nd = p.node(id);
            CHECK(Int(p.children(id).size()) == nd.rank);
            std::set<Subset> child_subsets, expected;
            for (int c : p.children(id)) child_subsets.insert(p.node(c).subset);
            for (int b : subset_members(nd.subset)) expected.insert(nd.subset ^ (Subset(1) << b));
            CHECK(child_subsets == expected);
        }
    }
}

TEST_CASE("covering characters agree on the child lattice") {
    std::mt19937 rng(41005);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 25; ++iter) {
        Realization r = random_realization(rng);
        TorsionPoset p = build_poset(r);
        for (const auto& [c, par] : p.covers()) {
            const Character& child = p.node(c).character;
            const Character& parent = p.node(par).character;
            for (int rep = 0; rep < 3; ++rep) {
                std::vector<int> u(child.domain.rank());
                for (auto& x : u) x = coeff(rng);
                std::vector<Int> v = lattice_combo(child.domain, u);
                CHECK(char_value(child, v) == char_value(parent, v));
            }
        }
    }
}

TEST_CASE("lower intervals are boolean") {
    std::mt19937 rng(41006);
    for (int iter = 0; iter < 25; ++iter) {
        Realization r = random_realization(rng);
        TorsionPoset p = build_poset(r);
        for (int id = 0; id < p.size(); ++id)
            CHECK(lower_set(p, id).size() == (std::size_t(1) << p.node(id).rank));
        for (const auto& comp : components(p)) CHECK(is_simplicial(p, comp).simplicial);
    }
}

TEST_CASE("poset isomorphism test") {
    TorsionPoset p1 = build_poset(m2());

    // relabeled copy: 0 and 4 are the tops, 1 the bottom, 2 and 3 the atoms
    std::vector<PosetNode> nodes(5);
    nodes[0].rank = 2;
    nodes[2].rank = 1;
    nodes[3].rank = 1;
    nodes[4].rank = 2;
    TorsionPoset relabeled(nodes, {{1, 2}, {1, 3}, {2, 0}, {2, 4}, {3, 0}, {3, 4}});
    CHECK(poset_isomorphic(p1, relabeled));
    CHECK(poset_isomorphic(relabeled, p1));

    CHECK(!poset_isomorphic(p1, pinwheel()));
    CHECK(poset_isomorphic(build_poset(m1()), build_poset(m1())));
    CHECK(!poset_isomorphic(build_poset(m1()), build_poset(m3())));

    // same ranks as p1 but one top hangs on a single atom
    std::vector<PosetNode> qn(5);
    qn[1].rank = 1;
    qn[2].rank = 1;
    qn[3].rank = 2;
    qn[4].rank = 2;
    TorsionPoset q(qn, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}});
    CHECK(!poset_isomorphic(p1, q));
}

TEST_CASE("rank zero points") {
    auto pts = rank_zero_points(m1());
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(pts[1] == std::vector<Rat>{half(), Rat(0)});

    pts = rank_zero_points(m2());
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == std::vector<Rat>{half(), half()});

    pts = rank_zero_points(m3());
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(pts[1] == std::vector<Rat>{half(), half()});

    CHECK(rank_zero_points(make(2, {{1, 0}})).empty());

    pts = rank_zero_points(make(1, {{2}}));
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == std::vector<Rat>{half()});
}

TEST_CASE("point decomposition of the polynomial at x = 1") {
    PointDecomposition pd = verify_point_decomposition(m1());
    CHECK(pd.matches);
    CHECK(pd.tutte_at_one == UnivariatePoly::constant(Int(2)));
    CHECK(pd.point_sum == UnivariatePoly::constant(Int(2)));

    pd = verify_point_decomposition(m2());
    CHECK(pd.matches);
    CHECK(pd.tutte_at_one == UnivariatePoly::constant(Int(2)));

    pd = verify_point_decomposition(m3());
    CHECK(pd.matches);
    CHECK(pd.tutte_at_one.to_string("y") == "3 + y");
    CHECK(pd.point_sum.to_string("y") == "3 + y");

    pd = verify_point_decomposition(make(2, {}));
    CHECK(pd.matches);
    CHECK(pd.point_sum == UnivariatePoly::constant(Int(1)));

    pd = verify_point_decomposition(make(2, {{1, 0}}));
    CHECK(pd.matches);
    CHECK(pd.point_sum == UnivariatePoly::constant(Int(1)));

    pd = verify_point_decomposition(make(2, {{0, 1}}, {{2, 0}}));
    CHECK(pd.matches);
    CHECK(pd.point_sum == UnivariatePoly::constant(Int(2)));

    std::mt19937 rng(41007);
    for (int iter = 0; iter < 40; ++iter) {
        Realization r = random_realization(rng);
        PointDecomposition got = verify_point_decomposition(r);
        CHECK(got.matches);
        CHECK(got.tutte_at_one == arithmetic_tutte(r).at_x1());
    }
}

TEST_CASE("induced subposet") {
    TorsionPoset p = build_poset(m2());
    TorsionPoset sub = induced(p, {2, 0, 1, 1});
    REQUIRE(sub.size() == 3);
    CHECK(sub.node(1).subset == 1);
    CHECK(sub.covers() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    TorsionPoset whole = induced(p, {0, 1, 2, 3, 4});
    CHECK(poset_isomorphic(p, whole));
    CHECK(whole.covers() == p.covers());
}
