#include "homnov/matrix.hpp"

#include "homnov/errors.hpp"

namespace homnov {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rat>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw InputError("matrix rows have inconsistent lengths");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns) {
    std::size_t c = columns.size();
    std::size_t r = c == 0 ? 0 : columns[0].size();
    Matrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (columns[j].size() != r)
            throw InputError("matrix columns have inconsistent lengths");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_)
        throw InputError("matrix-vector size mismatch: matrix has " +
                         std::to_string(cols_) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
    Vec y(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

Vec Matrix::column(std::size_t j) const {
    Vec c(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw InputError("matrix product size mismatch: " +
                         std::to_string(cols_) + " columns vs " +
                         std::to_string(rhs.rows_) + " rows");
    Matrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs.at(k, j) != 0) r.at(i, j) += a * rhs.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InputError("matrix sum size mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InputError("matrix difference size mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= rhs.data_[i];
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

} // namespace homnov
