#pragma once

#include <vector>

#include "arimat/int_matrix.hpp"

namespace arimat {

// Row-style Hermite normal form: row echelon over Z, pivots positive,
// entries above each pivot reduced into [0, pivot). Zero rows sink to the
// bottom. Deterministic.
IntMatrix hermite_normal_form(const IntMatrix& a);

// u * a * v = d with u, v unimodular and d diagonal, diagonal entries
// nonnegative with ascending divisibility. u_inv/v_inv are the exact
// inverses, maintained alongside (needed for saturation and quotient maps).
struct SmithDecomposition {
    IntMatrix u, v, d;
    IntMatrix u_inv, v_inv;
    std::vector<Int> invariants; // nonzero diagonal entries, d_i | d_{i+1}
};

// Pivot rule: smallest absolute nonzero entry of the trailing submatrix,
// ties broken by row-major position.
SmithDecomposition smith_normal_form(const IntMatrix& a);

} // namespace arimat
