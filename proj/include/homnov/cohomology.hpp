#pragma once

#include <cstddef>
#include <vector>

#include "homnov/superalgebra.hpp"

namespace homnov {

// Multilinear map A^arity -> A of homogeneous parity, stored as a flat
// tensor: table[i1*n + i2][k] (arity 2) is the e_k-coordinate of
// f(e_{i1}, e_{i2}), and so on.  Construction enforces parity-homogeneity
// (each value f(e_{i1},..,e_{im}) is homogeneous of parity
// |i1|+..+|im|+|f|); compatibility with the twisting map is a separate
// predicate, not an invariant, so incompatible maps can be represented and
// diagnosed.
class Cochain {
public:
    Cochain(AlgebraPtr algebra, std::size_t arity, Parity parity,
            std::vector<Vec> table);

    static Cochain zero(AlgebraPtr algebra, std::size_t arity, Parity parity);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t arity() const { return arity_; }
    Parity parity() const { return parity_; }
    const std::vector<Vec>& table() const { return table_; }

    const Vec& value_basis(std::size_t i) const;
    const Vec& value_basis(std::size_t i, std::size_t j) const;
    const Vec& value_basis(std::size_t i, std::size_t j, std::size_t k) const;

    // Multilinear extension to arbitrary coordinate vectors.
    Vec apply(const Vec& x) const;
    Vec apply(const Vec& x, const Vec& y) const;
    Vec apply(const Vec& x, const Vec& y, const Vec& z) const;

    bool is_zero() const;

    // Equality requires the same underlying algebra object (pointer
    // identity), as everywhere in this module.
    bool operator==(const Cochain& other) const;

private:
    AlgebraPtr algebra_;
    std::size_t arity_;
    Parity parity_;
    std::vector<Vec> table_;
};

// Linear combinations; operands must share algebra, arity, and parity.
Cochain add(const Cochain& f, const Cochain& g);
Cochain sub(const Cochain& f, const Cochain& g);
Cochain scale(const Rat& c, const Cochain& f);

// The algebra's product as an even arity-2 cochain.
Cochain product_cochain(const AlgebraPtr& a);

// Compatibility with the twisting map:
// alpha(f(x1,..,xm)) = f(alpha(x1),..,alpha(xm)) over all basis tuples.
CheckResult is_hom_cochain(const Cochain& f);

// Coboundary of an arity-1 cochain:
//   (d f)(x1,x2) = (-1)^{|x1||f|} x1*f(x2) + f(x1)*x2 - f(x1*x2).
// Requires is_hom_cochain(f); the output again satisfies it.
Cochain delta1(const Cochain& f);

// Coboundary of an arity-2 cochain (the eight-term alternating sum with
// full Koszul signs).  Requires is_hom_cochain(f).
Cochain delta2(const Cochain& f);

// The same eight-term formula without the membership gate.  Used where the
// formula itself is applied to arbitrary arity-2 tensors (deformation
// equations assembled from raw data).
Cochain delta2_unchecked(const Cochain& f);

// Four-term composite
//   (f o g)(x,y,z) = f(alpha(x), g(y,z)) - (-1)^{|x||y|} f(alpha(y), g(x,z))
//                  + (-1)^{|x||y|} f(g(y,x), alpha(z))
//                  - (-1)^{|y||z|} f(g(x,z), alpha(y)).
// Both inputs must be arity 2 over the same algebra and compatible with the
// twisting map.  For even f: delta2(f) = (f o G0) + (G0 o f) with G0 the
// product cochain.
Cochain circle_alpha(const Cochain& f, const Cochain& g);

// Canonical basis of the space of twist-compatible cochains of the given
// arity (1 or 2) and parity: the kernel of the compatibility constraints
// inside the parity-homogeneous tensors.
std::vector<Cochain> cochain_basis(const AlgebraPtr& a, std::size_t arity,
                                   Parity parity);

// Dimensions of the degree-2 cohomology of a's product, per parity.
struct CohomologyReport {
    Parity parity = 0;
    std::size_t dim_cochains = 0;     // dim C^2
    std::size_t dim_cocycles = 0;     // dim Z^2 = dim ker(delta2 | C^2)
    std::size_t dim_coboundaries = 0; // dim B^2 = dim delta1(C^1)
    std::size_t dim_h2 = 0;           // dim Z^2 - dim B^2
};

// Requires the algebra to satisfy the full product axiom set.
CohomologyReport h2(const AlgebraPtr& a, Parity parity);

// dim ker(delta1 | C^1) for the given parity: the twist-compatible
// derivation-like maps.
std::size_t z1_dim(const AlgebraPtr& a, Parity parity);

} // namespace homnov
