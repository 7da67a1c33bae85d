#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homnov/linalg.hpp"

namespace homnov {

// Structure-constant tensor: mul[i][j] holds the coordinates of e_i·e_j.
using MulTensor = std::vector<std::vector<Vec>>;

// Finite-dimensional Z2-graded algebra (A, ·, alpha): an ordered homogeneous
// basis, an even bilinear product given by structure constants, and an even
// linear twisting map alpha.  Values are immutable after construction.
class SuperAlgebra {
public:
    // Validates shapes, grading compatibility of the product
    // (e_i·e_j must be homogeneous of parity |i|+|j|) and evenness of alpha.
    SuperAlgebra(GradedSpace space, MulTensor mul, Matrix alpha);

    const GradedSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    Parity parity(std::size_t i) const { return space_.parity(i); }
    const MulTensor& mul() const { return mul_; }
    const Matrix& alpha() const { return alpha_; }

    const Vec& product_basis(std::size_t i, std::size_t j) const {
        return mul_[i][j];
    }
    // Bilinear extension of the structure tensor.
    Vec product(const Vec& x, const Vec& y) const;
    Vec apply_alpha(const Vec& x) const { return alpha_.apply(x); }

    bool operator==(const SuperAlgebra&) const = default;

private:
    GradedSpace space_;
    MulTensor mul_;
    Matrix alpha_;
};

// Shared immutable handle; modules that attach data to an algebra (cochains,
// deformations) hold one of these and reject mixing different handles.
using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

AlgebraPtr make_algebra(GradedSpace space, MulTensor mul, Matrix alpha);
AlgebraPtr make_algebra(GradedSpace space, MulTensor mul); // alpha = identity

// Even linear self-map of an algebra's space (derivations, Rota-Baxter
// operators, components of equivalence transforms, ...).
struct EvenMap {
    GradedSpace space;
    Matrix matrix;

    EvenMap(GradedSpace s, Matrix m); // validates squareness and evenness
    Vec apply(const Vec& x) const { return matrix.apply(x); }
};

// Bilinear form given by its Gram matrix gram[i][j] = B(e_i, e_j).
// No properties are imposed at construction; they are predicates below.
struct BilinearForm {
    GradedSpace space;
    Matrix gram;

    BilinearForm(GradedSpace s, Matrix g); // validates shape only
    Rat value(const Vec& x, const Vec& y) const;
    Rat value_basis(std::size_t i, std::size_t j) const {
        return gram.at(i, j);
    }
};

// First failing instance of an identity: which identity, at which basis
// tuple (lexicographically first), and the exact residual (LHS - RHS).
struct Violation {
    std::string identity;
    std::vector<std::size_t> tuple;
    Vec residual;
};

// Predicate outcome.  ok() == true means the identity holds everywhere.
struct CheckResult {
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
    explicit operator bool() const { return ok(); }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string identity, std::vector<std::size_t> t,
                            Vec residual) {
        return {Violation{std::move(identity), std::move(t),
                          std::move(residual)}};
    }
};

// Axiom predicates.  Each quantifies over basis tuples only; by
// multilinearity of all identities this is equivalent to quantifying over
// arbitrary (homogeneous) vectors.  Tuples are scanned in lexicographic
// order, so the reported first violation is deterministic.
CheckResult is_multiplicative(const SuperAlgebra& a);
CheckResult is_hom_left_symmetric(const SuperAlgebra& a);
CheckResult satisfies_hom_novikov_identity(const SuperAlgebra& a);
CheckResult is_hom_novikov(const SuperAlgebra& a);
CheckResult is_hom_associative(const SuperAlgebra& a);
CheckResult is_supercommutative(const SuperAlgebra& a);
// Treats the product of a as a bracket: multiplicativity, super
// skew-symmetry, and the twisted graded Jacobi identity.
CheckResult is_hom_lie(const SuperAlgebra& a);
CheckResult is_derivation(const SuperAlgebra& a, const EvenMap& d);
CheckResult commutes_with_alpha(const SuperAlgebra& a, const EvenMap& m);
CheckResult is_rota_baxter(const SuperAlgebra& a, const EvenMap& p,
                           const Rat& lambda);

CheckResult form_is_supersymmetric(const BilinearForm& b);
CheckResult form_is_even(const BilinearForm& b);
CheckResult form_is_nondegenerate(const BilinearForm& b);
// B(alpha(x), y·z) = B(x·y, alpha(z)) over basis triples.
CheckResult form_is_novikov_invariant(const SuperAlgebra& a,
                                      const BilinearForm& b);
// B([x,y], z) = B(x, [y,z]) with a's product as the bracket.
CheckResult form_is_lie_invariant(const SuperAlgebra& a,
                                  const BilinearForm& b);
// B(alpha(x), y) = B(x, alpha(y)).
CheckResult form_alpha_symmetric(const SuperAlgebra& a, const BilinearForm& b);

// Change of basis x -> s·x (s invertible and even): product, form, and maps
// transported so that every predicate's value is preserved.
AlgebraPtr conjugate_algebra(const SuperAlgebra& a, const Matrix& s);
BilinearForm conjugate_form(const BilinearForm& b, const Matrix& s);
EvenMap conjugate_map(const EvenMap& m, const Matrix& s);

} // namespace homnov
