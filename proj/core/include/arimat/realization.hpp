#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arimat/lattice.hpp"
#include "arimat/poly.hpp"

namespace arimat {

// Subsets of the ground set [n] as bitmasks; bit i = element i+1.
using Subset = std::uint64_t;

// All 2^n subsets, increasing popcount, ties in numeric order.
std::vector<Subset> all_subsets(int n);
std::vector<int> subset_members(Subset a);

// Marked vectors z_1..z_n in the group Z^D / relations. Everything below
// derives from the quotients M(A) = Z^D / (relations + <z_i : i in A>).
class Realization {
public:
    Realization(std::size_t ambient_rank, Lattice relations,
                std::vector<std::vector<Int>> generators);
    Realization(std::size_t ambient_rank, std::vector<std::vector<Int>> generators);

    std::size_t ambient_rank() const { return ambient_; }
    const Lattice& relations() const { return relations_; }
    const std::vector<std::vector<Int>>& generators() const { return gens_; }
    int size() const { return static_cast<int>(gens_.size()); }

    const QuotientStructure& empty_structure() const { return empty_; }
    int d_empty() const { return empty_.free_rank; }

    // D x #a matrix, columns in ascending index order
    IntMatrix generator_columns(Subset a) const;

private:
    std::size_t ambient_;
    Lattice relations_;
    std::vector<std::vector<Int>> gens_;
    QuotientStructure empty_;
};

struct SubsetProfile {
    Subset subset = 0;
    QuotientStructure structure; // M(A)
    int d = 0;                   // free rank of M(A)
    int cork = 0;                // d(empty) - d(A)
    Int multiplicity{1};         // order of the torsion of M(A)
    bool independent = false;    // cork == #A
};

SubsetProfile profile(const Realization& r, Subset a);

// cork of the full ground set
int matroid_rank(const Realization& r);

// true iff M([n]) is finite
bool is_essential(const Realization& r);

// sum over A of m(A) (x-1)^(r - cork A) (y-1)^(#A - cork A)
BivariatePoly arithmetic_tutte(const Realization& r);

// Gale dual: ambient Z^n modulo the row space of the generator matrix,
// marked with the images of the standard basis. Requires a trivial
// relations lattice; reduce with modulo_initial_torsion first.
Realization dual_realization(const Realization& r);

// Quotient by the torsion of M(empty): ambient becomes Z^{d(empty)} via
// the Smith splitting of the relations. m(A) = m(empty) * m'(A) holds for
// independent A, not in general.
Realization modulo_initial_torsion(const Realization& r);

// Restrict the ambient to the saturation of relations + <all generators>.
// Preserves every multiplicity and cork; the result is essential.
Realization essentialize(const Realization& r);

struct GrothendieckClass {
    // one entry per subset A in all_subsets order:
    // (structure of M(A), structure of M*([n] minus A))
    std::vector<std::pair<QuotientStructure, QuotientStructure>> pairs;
};

// Requires M(empty) free.
GrothendieckClass grothendieck_class(const Realization& r);

// Sum over pairs of m(first) (x-1)^(rank of first) (y-1)^(rank of second).
// Torsion is counted once: the dual carries the same finite groups in
// mirrored positions, so reading #G_t off both factors would square every
// multiplicity. Equals (x-1)^{d([n])} times arithmetic_tutte, so exactly
// arithmetic_tutte on essential input.
BivariatePoly evaluate_gt(const GrothendieckClass& c);

} // namespace arimat
