#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homnov/superalgebra.hpp"

namespace homnov {

// A Hom-Lie superalgebra is represented as a SuperAlgebra whose structure
// tensor holds the bracket.
using HomLieAlgebra = SuperAlgebra;

// Commutator bracket [x,y] = x y - (-1)^{|x||y|} y x, with the same twisting
// map.  Requires the input to satisfy the full product axiom set
// (is_hom_novikov); throws PreconditionError naming the predicate otherwise.
AlgebraPtr sub_adjacent_hom_lie(const SuperAlgebra& a);

// New product x*y = alpha(x y) with twisting map reset to the identity.
// Requires alpha to be an involution (alpha^2 = id).
AlgebraPtr involutive_untwist(const SuperAlgebra& a);

// Bracket alpha^{-1}([x,y]) of the commutator, with twisting map reset to
// the identity.  Requires alpha to be invertible.
AlgebraPtr alpha_inverse_bracket(const SuperAlgebra& a);

// New product alpha(x y) with twisting map alpha^2.  Requires the input to
// satisfy the full product axiom set.
AlgebraPtr yau_square_twist(const SuperAlgebra& a);

// New product x*y = x D(y), same twisting map.  Requires: a associative and
// supercommutative (with its own twisting map), D a derivation, and
// D alpha = alpha D.  Throws PreconditionError naming the first failed
// predicate.
AlgebraPtr derivation_product(const SuperAlgebra& a, const EvenMap& d);

// New product x*y = alpha(x D(y)) with twisting map alpha.  Here the input's
// product is required to be associative and supercommutative in the
// untwisted sense (twisting map = id), alpha must be multiplicative for it,
// D a derivation commuting with alpha.
AlgebraPtr twisted_derivation_product(const SuperAlgebra& a, const EvenMap& d);

// One-parameter family x*y = x D(y) + xi * x y, same twisting map.
// Preconditions are those of derivation_product; the result satisfies the
// product axioms for every value of xi.
AlgebraPtr xi_family(const SuperAlgebra& a, const EvenMap& d, const Rat& xi);

// New product x o y = P(x) y + x P(y) + lambda x y, same twisting map.
// Requires: a satisfies the product axioms, P is a Rota-Baxter operator of
// weight lambda, and P alpha = alpha P.
AlgebraPtr rota_baxter_product(const SuperAlgebra& a, const EvenMap& p,
                               const Rat& lambda);

// Twisted form B_n(x,y) = B(alpha^n(x), y), i.e. gram <- (alpha^n)^T gram.
// n must be >= 1; the map and form must share their space.
BilinearForm form_twist(const BilinearForm& b, const EvenMap& alpha,
                        std::size_t n);

// Two-sided annihilator {x : x e_j = e_j x = 0 for all j}.
Subspace center(const SuperAlgebra& a);

// {x : [x, e_j] = 0 for all j} with l's product as the bracket.
Subspace lie_center(const HomLieAlgebra& l);

// Chain A^0 = A, A^i = [A, A^{i-1}].  Returns A^0 .. A^m with m <= max_i;
// stops after appending a zero subspace, or just before the first repeat
// when the chain becomes stable without reaching zero.
std::vector<Subspace> lower_central_series(const HomLieAlgebra& l,
                                           std::size_t max_i);

// A^2 = [A, [A, A]] = 0.  Abelian (and zero-dimensional) inputs count.
bool is_two_step_nilpotent(const HomLieAlgebra& l);

// Smallest i with A^i = 0, or nullopt when the chain stabilizes at a
// nonzero subspace.
std::optional<std::size_t> nilpotency_step(const HomLieAlgebra& l);

// Product x y = [x,y]/2, same twisting map.  Requires the bracket to be
// 2-step nilpotent; all double products then vanish, so the result
// satisfies the product axioms.
AlgebraPtr half_bracket_algebra(const HomLieAlgebra& l);

} // namespace homnov
