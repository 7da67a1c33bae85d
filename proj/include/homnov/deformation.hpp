#pragma once

// Truncated one-parameter formal deformations of a product with a
// twisting map: the order-by-order deformation equations, infinitesimal
// terms, equivalence transforms, and the step-by-step rigidity
// reduction that strips coboundary terms.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homnov/cohomology.hpp"
#include "homnov/superalgebra.hpp"

namespace homnov {

// g_t = G0 + G1 t + ... + GN t^N, truncated after order N >= 1.  G0 is
// the base algebra's product; the stored terms are G1..GN, each an even
// arity-2 cochain over the base that commutes with the twisting map.
class TruncatedDeformation {
public:
    TruncatedDeformation(AlgebraPtr base, std::vector<Cochain> terms);

    static TruncatedDeformation null_deformation(AlgebraPtr base,
                                                 std::size_t order);

    const AlgebraPtr& base() const { return base_; }
    std::size_t order() const { return terms_.size(); }
    const std::vector<Cochain>& terms() const { return terms_; }

    // 1-based: term(n) is G_n for 1 <= n <= order().
    const Cochain& term(std::size_t n) const;

    bool is_null() const;

    bool operator==(const TruncatedDeformation& other) const;

private:
    AlgebraPtr base_;
    std::vector<Cochain> terms_;
};

// phi_t = id + phi_1 t + ... + phi_N t^N with each phi_i an even linear
// self-map commuting with the twisting map.
class EquivalenceTransform {
public:
    EquivalenceTransform(AlgebraPtr base, std::vector<Cochain> maps);

    static EquivalenceTransform identity(AlgebraPtr base, std::size_t order);

    const AlgebraPtr& base() const { return base_; }
    std::size_t order() const { return maps_.size(); }
    const std::vector<Cochain>& maps() const { return maps_; }

    // 1-based: map(n) is phi_n for 1 <= n <= order().
    const Cochain& map(std::size_t n) const;

    bool operator==(const EquivalenceTransform& other) const;

private:
    AlgebraPtr base_;
    std::vector<Cochain> maps_;
};

struct DeformationViolation {
    std::size_t order;
    std::string identity;
    std::vector<std::size_t> tuple;
    Vec residual;
};

struct DeformationCheckResult {
    std::optional<DeformationViolation> violation;

    bool ok() const { return !violation.has_value(); }

    static DeformationCheckResult pass() { return {std::nullopt}; }
    static DeformationCheckResult fail(std::size_t order, std::string identity,
                                       std::vector<std::size_t> tuple,
                                       Vec residual) {
        return {DeformationViolation{order, std::move(identity),
                                     std::move(tuple), std::move(residual)}};
    }
};

// Verifies the deformation equations at every order n = 0..N: the
// left-symmetry combination
//   sum_{i+j=n} G_i(a(x),G_j(y,z)) - G_i(G_j(x,y),a(z))
//             - (-1)^{|x||y|} (G_i(a(y),G_j(x,z)) - G_i(G_j(y,x),a(z)))
// and the Novikov combination
//   sum_{i+j=n} G_i(G_j(x,y),a(z)) - (-1)^{|y||z|} G_i(G_j(x,z),a(y))
// must vanish on all basis triples.  Reports the first violation in
// (order, identity, lexicographic triple) order.
DeformationCheckResult check_deformation(const TruncatedDeformation& d);

// Order-1 deformation equations for a single candidate term.  The base
// axioms are not consulted.  Internally cross-checked against the
// equivalent cocycle formulation.
bool is_infinitesimal(const AlgebraPtr& base, const Cochain& g1);

// Whether the degree-2 differential of g1 vanishes.
bool is_two_cocycle(const AlgebraPtr& base, const Cochain& g1);

// g_t'(u,v) = phi_t(g_t(phi_t^{-1}(u), phi_t^{-1}(v))) truncated at the
// common order; phi_t^{-1} is computed recursively from phi_0 = id.
TruncatedDeformation apply_equivalence(const TruncatedDeformation& d,
                                       const EquivalenceTransform& phi);

// The transform psi with psi_t = phi_t^{-1} mod t^{N+1}.
EquivalenceTransform inverse_transform(const EquivalenceTransform& phi);

// If the lowest nonzero term G_n is a coboundary (delta1 f = G_n has a
// solution among even 1-cochains), returns the equivalent deformation
// with all terms through order n cleared; nullopt when G_n is not a
// coboundary.  A null deformation is returned unchanged.
std::optional<TruncatedDeformation>
trivialize_step(const TruncatedDeformation& d);

// Iterates trivialize_step; the flag reports whether the deformation was
// trivialized completely (mod t^{N+1}).
std::pair<TruncatedDeformation, bool>
rigidity_reduce(const TruncatedDeformation& d);

// For d' = apply_equivalence(d, phi), returns G_1 - G_1' and verifies it
// equals delta1(phi_1) exactly.
Cochain cohomology_class_delta(const TruncatedDeformation& d,
                               const TruncatedDeformation& dprime,
                               const EquivalenceTransform& phi);

// Copy of d truncated (or zero-extended) to the given order >= 1.
TruncatedDeformation retruncate(const TruncatedDeformation& d,
                                std::size_t order);

} // namespace homnov
