#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homnov/matrix.hpp"

namespace homnov {

// Reduced row echelon form together with the pivot column indices.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};

Rref rref(const Matrix& m);

// Rank of m (synonyms; image_dim is the dimension of the column space).
std::size_t rank(const Matrix& m);
std::size_t image_dim(const Matrix& m);

// A solution of m·x = b, or nullopt when the system is inconsistent.  The
// returned solution is canonical: all free variables are zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Canonical basis of {x : m·x = 0} (one vector per free column, derived
// from the reduced row echelon form).
std::vector<Vec> kernel_basis(const Matrix& m);

// Exact inverse, or nullopt when m is singular.  InputError if not square.
std::optional<Matrix> invert(const Matrix& m);

// True iff m maps each parity block of the space into itself, i.e.
// m[i][j] = 0 whenever parity(i) != parity(j).
bool is_even_map(const GradedSpace& space, const Matrix& m);

// Subspace of a graded ambient space spanned by linearly independent,
// parity-homogeneous basis vectors.
struct Subspace {
    GradedSpace ambient;
    std::vector<Vec> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vec& v) const;
};

// Canonical subspace spanned by the given vectors.  Every nonzero input
// must be parity-homogeneous (all spans arising here are generated by
// homogeneous vectors); zero vectors are ignored.
Subspace span_of(const GradedSpace& ambient, const std::vector<Vec>& vectors);

// Null space of the constraint matrix m (columns indexed by the ambient
// basis), solved separately on the even and odd coordinate blocks so the
// returned basis is parity-homogeneous.  Intended for parity-preserving
// constraint systems, where this equals the full null space.
Subspace graded_kernel(const GradedSpace& ambient, const Matrix& m);

} // namespace homnov
