#include "arimat/normal_form.hpp"

#include <stdexcept>

#include "arimat/numbers.hpp"

namespace arimat {

IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce column c on rows >= r until one nonzero remains
        for (;;) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                if (p == rows || abs(h.at(i, c)) < abs(h.at(p, c))) p = i;
            }
            if (p == rows) break; // column is zero below r
            h.swap_rows(r, p);
            if (h.at(r, c) < 0) h.negate_row(r);
            bool residue = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                h.row_addmul(i, r, -floor_div(h.at(i, c), h.at(r, c)));
                if (h.at(i, c) != 0) residue = true;
            }
            if (!residue) {
                // pivot settled; reduce the entries above into [0, pivot)
                for (std::size_t i = 0; i < r; ++i)
                    h.row_addmul(i, r, -floor_div(h.at(i, c), h.at(r, c)));
                ++r;
                break;
            }
        }
    }
    return h;
}

namespace {

// elementary operations applied to d with u/v (and their inverses) kept in sync
struct SmithWork {
    IntMatrix d, u, v, u_inv, v_inv;

    void swap_rows(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    void negate_row(std::size_t i) {
        d.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
    // row i += q * row j  <=>  left-multiply by I + q E_ij
    void row_addmul(std::size_t i, std::size_t j, const Int& q) {
        d.row_addmul(i, j, q);
        u.row_addmul(i, j, q);
        u_inv.col_addmul(j, i, -q);
    }
    // col i += q * col j  <=>  right-multiply by I + q E_ji
    void col_addmul(std::size_t i, std::size_t j, const Int& q) {
        d.col_addmul(i, j, q);
        v.col_addmul(i, j, q);
        v_inv.row_addmul(j, i, -q);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    SmithWork w{a, IntMatrix::identity(rows), IntMatrix::identity(cols),
                IntMatrix::identity(rows), IntMatrix::identity(cols)};

    const std::size_t steps = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // pivot: smallest |entry| of the trailing submatrix, row-major ties
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (w.d.at(i, j) == 0) continue;
                if (pi == rows || abs(w.d.at(i, j)) < abs(w.d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break; // submatrix is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            if (w.d.at(t, t) < 0) w.negate_row(t);
            bool swapped = false;
            // clear column t below the pivot
            for (std::size_t i = t + 1; i < rows && !swapped; ++i) {
                if (w.d.at(i, t) == 0) continue;
                w.row_addmul(i, t, -floor_div(w.d.at(i, t), w.d.at(t, t)));
                if (w.d.at(i, t) != 0) {
                    w.swap_rows(t, i); // remainder is strictly smaller
                    swapped = true;
                }
            }
            if (swapped) continue;
            // clear row t right of the pivot
            for (std::size_t j = t + 1; j < cols && !swapped; ++j) {
                if (w.d.at(t, j) == 0) continue;
                w.col_addmul(j, t, -floor_div(w.d.at(t, j), w.d.at(t, t)));
                if (w.d.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    swapped = true;
                }
            }
            if (swapped) continue;

            // pivot must divide the trailing submatrix to keep the chain
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_addmul(t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    SmithDecomposition out;
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    out.u_inv = std::move(w.u_inv);
    out.v_inv = std::move(w.v_inv);
    out.d = std::move(w.d);
    for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        if (out.d.at(i, i) != 0) out.invariants.push_back(out.d.at(i, i));
    return out;
}

} // namespace arimat
