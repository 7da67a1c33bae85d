#pragma once

#include <cstddef>
#include <vector>

#include "homnov/graded.hpp"

namespace homnov {

// Dense exact-rational matrix.  Column j holds the coordinates of the image
// of basis vector e_j (column-action convention: y = M·x).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<Rat>& d);
    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static Matrix from_columns(const std::vector<Vec>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    Vec apply(const Vec& x) const; // M·x; InputError on size mismatch
    Vec column(std::size_t j) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rat& c) const;
    Matrix transposed() const;

    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_; // row-major
};

} // namespace homnov
