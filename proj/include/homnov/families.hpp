#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "homnov/cohomology.hpp"
#include "homnov/constructions.hpp"
#include "homnov/deformation.hpp"
#include "homnov/io.hpp"
#include "homnov/superalgebra.hpp"

// Named example algebras and seeded random generators.  Every randomized
// generator returns data that satisfies, by construction, the predicate its
// consumers assert (the product axioms, derivation laws, the Rota-Baxter
// identity, deformation validity, ...); callers are still expected to
// re-verify with the library predicates, which is cheap at these sizes.

namespace homnov::families {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int pick_int(Rng& rng, int lo, int hi);

// Rational p/q with |p| <= max_num and 1 <= q <= max_den.
Rat small_rational(Rng& rng, int max_num, int max_den);

// Nonzero variant of the above.
Rat small_nonzero_rational(Rng& rng, int max_num, int max_den);

// True when every structure constant and twisting-map entry of a has
// |numerator| <= bound and denominator <= bound.
bool entries_within(const SuperAlgebra& a, long bound);

// ---------------------------------------------------------------------------
// Named algebras.
// ---------------------------------------------------------------------------

// Zero product over the given parity list (canonical order); the twisting
// map defaults to the identity but any even matrix is admissible.
AlgebraPtr zero_product(std::vector<Parity> parities,
                        std::optional<Matrix> alpha = std::nullopt);

// One-dimensional even algebra e*e = c e, twisting map = identity.
AlgebraPtr line(const Rat& c);

// Two-dimensional algebra on one even generator u and one odd generator v
// with u u = u, u v = v u = v, v v = 0; alpha defaults to the identity.
AlgebraPtr unital_pair(std::optional<Matrix> alpha = std::nullopt);

// diag(0, c): the diagonal derivations of unital_pair.
EvenMap unital_pair_derivation(const Rat& c);

// Truncated polynomial algebra: basis 1, x, ..., x^{k-1} with x^k = 0, all
// even; commutative, associative, unital; twisting map = identity.
AlgebraPtr truncated_polynomial(std::size_t k);

// The sign automorphism x -> -x of truncated_polynomial(k): diag((-1)^i).
Matrix alternating_sign_map(std::size_t k);

// The derivation p(x) d/dx of truncated_polynomial(k), where p is given by
// its coefficient list (p[j] multiplies x^j, indices beyond k-1 ignored).
EvenMap polynomial_derivation(std::size_t k, const std::vector<Rat>& p);

// Pairing B(x^i, x^j) = scale * [i + j == k-1] on truncated_polynomial(k).
BilinearForm truncated_polynomial_form(std::size_t k, const Rat& scale);

// Group algebra of the cyclic group of order k: basis g_0, ..., g_{k-1},
// g_i g_j = g_{i+j mod k}, all even, twisting map = identity.
AlgebraPtr cyclic_group_algebra(std::size_t k);

// Basis permutation g_i -> g_{-i mod k} (an involutive algebra
// automorphism of cyclic_group_algebra(k)).
Matrix cyclic_inversion(std::size_t k);

// Pairing B(g_i, g_j) = scale * [i + j == 0 mod k].
BilinearForm cyclic_group_form(std::size_t k, const Rat& scale);

// Exterior algebra on two odd generators: basis (1, w, t1, t2) with
// parities (0, 0, 1, 1), t1 t2 = w = -t2 t1, t1 t1 = t2 t2 = 0, w odd-part
// products zero; unital, supercommutative, associative; alpha defaults to
// the identity.
AlgebraPtr exterior_pair(std::optional<Matrix> alpha = std::nullopt);

// diag(1, 1, -1, -1): negate the odd generators (involutive automorphism).
Matrix exterior_sign_map();

// The grading derivation scaled by c: diag(0, 2c, c, c).
EvenMap exterior_grading_derivation(const Rat& c);

// Top-coefficient pairing: B(1, w) = B(w, 1) = scale, B(t1, t2) = scale,
// B(t2, t1) = -scale, all other pairs zero.
BilinearForm exterior_form(const Rat& scale);

// Six-dimensional two-step-nilpotent bracket algebra on even generators
// x1, x2, x3, y1, y2, y3 with [x_i, x_j] = sum_k eps_{ijk} y_k and all
// other brackets zero; the twisting map is id + nu with nu(x_i) =
// sum_k s(k,i) y_k for the given symmetric 3x3 matrix s (nu vanishes on
// the y-block).
HomLieAlgebra cross_product_nilpotent(const Matrix& s);

// Hyperbolic pairing coupling the x- and y-blocks of the algebra above:
// B(x_i, y_j) = B(y_i, x_j) = scale * [i == j], zero on same-block pairs.
BilinearForm cross_product_form(const Rat& scale);

// ---------------------------------------------------------------------------
// Randomized generators.
// ---------------------------------------------------------------------------

// Random algebra satisfying the full product axiom set, dim <= 4, with all
// structure constants and twisting-map entries bounded by +/-5 in numerator
// and denominator.
AlgebraPtr random_hom_novikov(Rng& rng);

// Variant whose twisting map is invertible.
AlgebraPtr random_regular_hom_novikov(Rng& rng);

// Variant whose twisting map is an involution.
AlgebraPtr random_involutive_hom_novikov(Rng& rng);

// Random 1-cochain of the given parity commuting with the twisting map
// (drawn from the exact solution space; zero when that space is trivial).
Cochain random_hom_cochain1(Rng& rng, const AlgebraPtr& a, Parity parity);

// Base + derivation pairs accepted by derivation_product / xi_family.
struct DerivationInput {
    AlgebraPtr algebra;
    EvenMap map;
};
DerivationInput random_derivation_input(Rng& rng);

// Base + derivation pairs accepted by twisted_derivation_product (the
// untwisted product is associative and supercommutative, the twisting map
// is multiplicative, and the map is a derivation commuting with it).
DerivationInput random_twisted_derivation_input(Rng& rng);

// Algebra + operator + weight triples accepted by rota_baxter_product.
struct RotaBaxterInput {
    AlgebraPtr algebra;
    EvenMap op;
    Rat weight;
};
RotaBaxterInput random_rota_baxter_input(Rng& rng);

// Algebra + form pairs where the algebra satisfies the product axioms, the
// twisting map is invertible and self-adjoint for the form, and the form is
// even, supersymmetric, nondegenerate and product-invariant in the twisted
// sense B(alpha(x), yz) = B(xy, alpha(z)).
struct QuadraticInput {
    AlgebraPtr algebra;
    BilinearForm form;
};
QuadraticInput random_quadratic_input(Rng& rng);

// Random truncated deformation (with its own randomly chosen base) that
// passes check_deformation up to the given order.
TruncatedDeformation random_deformation(Rng& rng, std::size_t order);

// Random valid truncated deformation over the one-dimensional algebra
// line(1) (every coefficient sequence is admissible there).
TruncatedDeformation random_line_deformation(Rng& rng, std::size_t order);

// Random equivalence transform over the given base (identity plus random
// higher-order maps drawn from the twist-commuting solution space).
EquivalenceTransform random_transform(Rng& rng, const AlgebraPtr& base,
                                      std::size_t order);

// Random well-formed algebra document (algebra plus optionally a form,
// named maps, a weight and a parameter value) for round-trip tests.
AlgebraDocument random_algebra_document(Rng& rng);

// Random well-formed deformation document.
DeformationDocument random_deformation_document(Rng& rng);

} // namespace homnov::families
