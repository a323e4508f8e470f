#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arimat/numbers.hpp"

namespace arimat {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

    static IntMatrix identity(std::size_t n);
    // vectors become the columns of a rows x vecs.size() matrix
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& vecs);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& vecs, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    IntMatrix transposed() const;
    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i += q * row j
    void row_addmul(std::size_t i, std::size_t j, const Int& q);
    // col i += q * col j
    void col_addmul(std::size_t i, std::size_t j, const Int& q);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

} // namespace arimat
