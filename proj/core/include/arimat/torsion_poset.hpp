#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arimat/fh_vector.hpp"
#include "arimat/realization.hpp"

namespace arimat {

// Character of the finite group attached to an independent subset A,
// stored as a homomorphism S_A -> Q/Z where S_A is the saturation of
// relations + L_A. One value in [0,1) per canonical basis row of the
// domain; the values are integral on relations + L_A itself.
struct Character {
    Lattice domain;
    std::vector<Rat> values;

    friend bool operator==(const Character&, const Character&) = default;

    // "e" for the trivial character, else comma-joined reduced fractions
    std::string to_string() const;
};

struct PosetNode {
    Subset subset = 0;
    Character character;
    int rank = 0;
};

// Finite graded poset presented by its Hasse diagram. Covers are
// (child, parent) pairs kept sorted; every cover raises rank by one.
class TorsionPoset {
public:
    TorsionPoset() = default;
    TorsionPoset(std::vector<PosetNode> nodes,
                 std::vector<std::pair<int, int>> covers);

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<PosetNode>& nodes() const { return nodes_; }
    const PosetNode& node(int id) const;
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& parents(int id) const;
    const std::vector<int>& children(int id) const;

private:
    std::vector<PosetNode> nodes_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
};

// All characters of the group attached to the independent subset a,
// trivial character first; throws input_error on dependent subsets.
std::vector<Character> enumerate_characters(const Realization& r, Subset a);

// Character induced on the subset with element `drop` removed, by
// restricting along the inclusion of saturated lattices.
Character restrict_character(const Realization& r, const PosetNode& from,
                             int drop);

TorsionPoset build_poset(const Realization& r);

// ids weakly below / above the given element, ascending
std::vector<int> lower_set(const TorsionPoset& p, int id);
std::vector<int> upper_set(const TorsionPoset& p, int id);

// connected components as sorted id lists, ordered by least member
std::vector<std::vector<int>> components(const TorsionPoset& p);

// maximal common lower bounds / minimal common upper bounds
std::vector<int> meet_set(const TorsionPoset& p, int a, int b);
std::vector<int> join_set(const TorsionPoset& p, int a, int b);

// unique greatest lower bound; input_error when none exists or when the
// common lower bounds have more than one maximal element
int meet(const TorsionPoset& p, int a, int b);

// sub-poset on the given ids (sorted, deduplicated), covers restricted
TorsionPoset induced(const TorsionPoset& p, const std::vector<int>& ids);

struct SimplicialCheck {
    bool simplicial = true;
    // witness interval [bad_bottom, bad_top] that is not boolean
    int bad_bottom = -1;
    int bad_top = -1;
};

// checks that every lower interval of the component is boolean
SimplicialCheck is_simplicial(const TorsionPoset& p,
                              const std::vector<int>& component);

FVector f_vector(const TorsionPoset& p, const std::vector<int>& component);

// graded-poset isomorphism on (rank, covers) data
bool poset_isomorphic(const TorsionPoset& a, const TorsionPoset& b);

// distinct ambient characters attached to the subsets of free rank zero,
// as sorted coordinate vectors on the standard basis
std::vector<std::vector<Rat>> rank_zero_points(const Realization& r);

struct PointDecomposition {
    bool matches = false;
    UnivariatePoly tutte_at_one; // arithmetic Tutte at x = 1
    UnivariatePoly point_sum;    // sum of ordinary Tutte evaluations
};

// decomposes T(1,y) as a sum over rank-zero points of the ordinary
// Tutte polynomial of the sublist vanishing at each point; the input is
// essentialized first
PointDecomposition verify_point_decomposition(const Realization& r);

} // namespace arimat
