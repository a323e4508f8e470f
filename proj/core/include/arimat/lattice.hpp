#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arimat/int_matrix.hpp"
#include "arimat/normal_form.hpp"

namespace arimat {

// Full sublattice of Z^ambient, stored by its canonical basis: the Hermite
// normal form of any generating set, zero rows removed. Two lattices are
// equal iff their canonical bases are identical.
class Lattice {
public:
    explicit Lattice(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
    Lattice(std::size_t ambient_dim, const std::vector<std::vector<Int>>& generators);
    static Lattice from_matrix_rows(const IntMatrix& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; } // rank x ambient, HNF

    friend bool operator==(const Lattice& a, const Lattice& b) = default;
    std::string to_string() const;

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);

// Finitely generated abelian group Z^free_rank x prod Z/torsion_i,
// torsion entries > 1 with t_i | t_{i+1}.
struct QuotientStructure {
    int free_rank = 0;
    std::vector<Int> torsion;

    Int multiplicity() const; // product of torsion orders (1 if free)
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const QuotientStructure&, const QuotientStructure&) = default;
    std::string to_string() const;
};

// Structure of Z^D / (column lattice of `columns` + `relations`).
// columns must have D rows and relations ambient dimension D.
QuotientStructure cokernel_structure(const IntMatrix& columns, const Lattice& relations);

// Smallest sublattice S >= l of the same rank with Z^ambient / S torsion-free.
Lattice saturate(const Lattice& l);

struct ExpressResult {
    std::vector<Rat> coords; // coordinates on the canonical basis of the lattice
    bool integral = false;
};

// Coordinates of v in the Q-span of l's basis, or nullopt if v lies outside
// the span. integral == true iff v is in the lattice itself.
std::optional<ExpressResult> express_in_basis(const std::vector<Int>& v, const Lattice& l);

struct LatticeIndex {
    bool finite = false;
    Int index; // defined only when finite
};

// [super : sub]; requires sub <= super (else input_error). Infinite when
// rank(sub) < rank(super).
LatticeIndex lattice_index(const Lattice& sub, const Lattice& super);

} // namespace arimat
