#include "homnov/linalg.hpp"

#include <algorithm>

#include "homnov/errors.hpp"

namespace homnov {

Rref rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(p, j), a.at(r, j));
        Rat inv_pivot = Rat(1) / a.at(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv_pivot;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat factor = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) -= factor * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::size_t image_dim(const Matrix& m) { return rank(m); }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw InputError("solve: right-hand side has " +
                         std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(m.rows()) + " rows");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Rref red = rref(aug);
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols())
        return std::nullopt; // pivot in the augmented column: inconsistent
    Vec x(m.cols(), Rat(0));
    for (std::size_t t = 0; t < red.pivot_cols.size(); ++t)
        x[red.pivot_cols[t]] = red.mat.at(t, m.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Rref red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rat(0));
        v[f] = Rat(1);
        for (std::size_t t = 0; t < red.pivot_cols.size(); ++t)
            v[red.pivot_cols[t]] = -red.mat.at(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("invert: matrix is not square");
    std::size_t n = m.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    Rref red = rref(aug);
    if (red.pivot_cols.size() < n || red.pivot_cols[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.mat.at(i, n + j);
    return inv;
}

bool is_even_map(const GradedSpace& space, const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() != space.dim())
        throw InputError("is_even_map: expected a square matrix of size " +
                         std::to_string(space.dim()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (space.parity(i) != space.parity(j) && m.at(i, j) != 0)
                return false;
    return true;
}

bool Subspace::contains(const Vec& v) const {
    if (basis.empty()) return is_zero(v);
    return solve(Matrix::from_columns(basis), v).has_value();
}

namespace {

// Canonical echelon basis of the span of homogeneous generators supported
// on one parity block.
void append_block_basis(const std::vector<Vec>& generators,
                        std::vector<Vec>& out) {
    if (generators.empty()) return;
    Rref red = rref(Matrix::from_rows(generators));
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
        Vec row(red.mat.cols(), Rat(0));
        for (std::size_t j = 0; j < red.mat.cols(); ++j)
            row[j] = red.mat.at(i, j);
        out.push_back(std::move(row));
    }
}

} // namespace

Subspace span_of(const GradedSpace& ambient, const std::vector<Vec>& vectors) {
    std::vector<Vec> even_gen, odd_gen;
    for (const auto& v : vectors) {
        if (v.size() != ambient.dim())
            throw InputError("span_of: vector length does not match the "
                             "ambient dimension");
        if (is_zero(v)) continue;
        auto p = homogeneous_parity(ambient, v);
        if (!p.has_value())
            throw InputError("span_of: generator is not parity-homogeneous");
        (*p == 0 ? even_gen : odd_gen).push_back(v);
    }
    Subspace s{ambient, {}};
    append_block_basis(even_gen, s.basis);
    append_block_basis(odd_gen, s.basis);
    return s;
}

Subspace graded_kernel(const GradedSpace& ambient, const Matrix& m) {
    if (m.cols() != ambient.dim())
        throw InputError("graded_kernel: constraint matrix has " +
                         std::to_string(m.cols()) +
                         " columns, ambient dimension is " +
                         std::to_string(ambient.dim()));
    Subspace s{ambient, {}};
    for (Parity p : {0, 1}) {
        std::vector<std::size_t> block;
        for (std::size_t j = 0; j < ambient.dim(); ++j)
            if (ambient.parity(j) == p) block.push_back(j);
        if (block.empty()) continue;
        Matrix restricted(m.rows(), block.size());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < block.size(); ++j)
                restricted.at(i, j) = m.at(i, block[j]);
        for (const auto& v : kernel_basis(restricted)) {
            Vec full(ambient.dim(), Rat(0));
            for (std::size_t j = 0; j < block.size(); ++j) full[block[j]] = v[j];
            s.basis.push_back(std::move(full));
        }
    }
    return s;
}

} // namespace homnov
