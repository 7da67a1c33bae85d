// Small hand-built algebras shared across test files.  Expected values in
// the tests that use them were worked out on paper from these definitions.
#pragma once

#include "homnov/superalgebra.hpp"

namespace fixtures {

using namespace homnov;

// Zero multiplication on a space with the given parities.
inline AlgebraPtr zero_algebra(std::vector<Parity> parities) {
    GradedSpace space(std::move(parities));
    std::size_t n = space.dim();
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    return make_algebra(space, mul, Matrix::identity(n));
}

// One even basis vector e with e·e = c·e.
inline AlgebraPtr dim1(const Rat& c, Matrix alpha = Matrix::identity(1)) {
    GradedSpace space({0});
    MulTensor mul(1, std::vector<Vec>(1, Vec{c}));
    return make_algebra(space, mul, std::move(alpha));
}

// Unital supercommutative algebra on basis (e0 even, e1 odd):
// e0·e0 = e0, e0·e1 = e1·e0 = e1, e1·e1 = 0.
inline AlgebraPtr e1(Matrix alpha = Matrix::identity(2)) {
    GradedSpace space({0, 1});
    MulTensor mul(2, std::vector<Vec>(2, zero_vec(2)));
    mul[0][0] = {Rat(1), Rat(0)};
    mul[0][1] = {Rat(0), Rat(1)};
    mul[1][0] = {Rat(0), Rat(1)};
    return make_algebra(space, mul, std::move(alpha));
}

// The sign-flip twisting map diag(1, -1) on the two-dimensional space.
inline Matrix e1_sign_flip() {
    return Matrix::diagonal({Rat(1), Rat(-1)});
}

// Even derivation of e1(): D(e0) = 0, D(e1) = e1.
inline EvenMap e1_derivation() {
    return EvenMap(GradedSpace({0, 1}), Matrix::diagonal({Rat(0), Rat(1)}));
}

} // namespace fixtures
