#include "homnov/constructions.hpp"

#include <sstream>
#include <utility>

#include "homnov/errors.hpp"

namespace homnov {

namespace {

[[noreturn]] void throw_precondition(const char* op,
                                     const std::string& predicate,
                                     const CheckResult& r) {
    std::ostringstream msg;
    msg << op << ": precondition " << predicate << " failed";
    if (r.violation.has_value()) {
        msg << " (identity " << r.violation->identity
            << " violated at basis tuple (";
        for (std::size_t t = 0; t < r.violation->tuple.size(); ++t) {
            if (t > 0) msg << ", ";
            msg << r.violation->tuple[t];
        }
        msg << "))";
    }
    throw PreconditionError(predicate, msg.str());
}

void require(const char* op, const std::string& predicate,
             const CheckResult& r) {
    if (!r.ok()) throw_precondition(op, predicate, r);
}

// Commutator tensor of a's product: b[i][j] = c[i][j] - (-1)^{|i||j|} c[j][i].
MulTensor commutator_tensor(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    MulTensor bracket(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int sign = koszul_sign(a.parity(i), a.parity(j));
            bracket[i][j] = sub(a.product_basis(i, j),
                                scale(Rat(sign), a.product_basis(j, i)));
        }
    return bracket;
}

// Tensor of x*y = x D(y).
MulTensor derivation_tensor(const SuperAlgebra& a, const EvenMap& d) {
    std::size_t n = a.dim();
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& c = d.matrix.at(k, j);
                if (c != 0)
                    add_scaled_in_place(mul[i][j], c, a.product_basis(i, k));
            }
    return mul;
}

void check_derivation_preconditions(const char* op, const SuperAlgebra& a,
                                    const EvenMap& d) {
    require(op, "is_hom_associative", is_hom_associative(a));
    require(op, "is_supercommutative", is_supercommutative(a));
    require(op, "is_derivation", is_derivation(a, d));
    require(op, "commutes_with_alpha", commutes_with_alpha(a, d));
}

Subspace annihilator(const SuperAlgebra& a, bool left, bool right) {
    std::size_t n = a.dim();
    std::size_t blocks = (left ? 1u : 0u) + (right ? 1u : 0u);
    Matrix constraints(blocks * n * n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (left) { // (x e_j)_k = sum_i x_i c[i][j][k]
                for (std::size_t i = 0; i < n; ++i)
                    constraints.at(row, i) = a.mul()[i][j][k];
                ++row;
            }
            if (right) { // (e_j x)_k = sum_i x_i c[j][i][k]
                for (std::size_t i = 0; i < n; ++i)
                    constraints.at(row, i) = a.mul()[j][i][k];
                ++row;
            }
        }
    return graded_kernel(a.space(), constraints);
}

// Span of [e_i, v] over all basis vectors e_i and all v in the given basis.
Subspace bracket_span(const SuperAlgebra& l, const std::vector<Vec>& basis) {
    std::size_t n = l.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = Rat(1);
        for (const Vec& v : basis) gens.push_back(l.product(e, v));
    }
    return span_of(l.space(), gens);
}

Subspace whole_space(const GradedSpace& space) {
    std::size_t n = space.dim();
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = Rat(1);
        basis.push_back(std::move(e));
    }
    return span_of(space, basis);
}

} // namespace

AlgebraPtr sub_adjacent_hom_lie(const SuperAlgebra& a) {
    require("sub_adjacent_hom_lie", "is_hom_novikov", is_hom_novikov(a));
    return make_algebra(a.space(), commutator_tensor(a), a.alpha());
}

AlgebraPtr involutive_untwist(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    if (!(a.alpha() * a.alpha()).is_identity()) {
        CheckResult r = CheckResult::fail("alpha-involution", {}, {});
        throw_precondition("involutive_untwist", "alpha_involutive", r);
    }
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = a.apply_alpha(a.product_basis(i, j));
    return make_algebra(a.space(), std::move(mul), Matrix::identity(n));
}

AlgebraPtr alpha_inverse_bracket(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    auto inv = invert(a.alpha());
    if (!inv.has_value()) {
        CheckResult r = CheckResult::fail("alpha-invertibility", {}, {});
        throw_precondition("alpha_inverse_bracket", "alpha_invertible", r);
    }
    MulTensor bracket = commutator_tensor(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            bracket[i][j] = inv->apply(bracket[i][j]);
    return make_algebra(a.space(), std::move(bracket), Matrix::identity(n));
}

AlgebraPtr yau_square_twist(const SuperAlgebra& a) {
    require("yau_square_twist", "is_hom_novikov", is_hom_novikov(a));
    std::size_t n = a.dim();
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = a.apply_alpha(a.product_basis(i, j));
    return make_algebra(a.space(), std::move(mul), a.alpha() * a.alpha());
}

AlgebraPtr derivation_product(const SuperAlgebra& a, const EvenMap& d) {
    check_derivation_preconditions("derivation_product", a, d);
    return make_algebra(a.space(), derivation_tensor(a, d), a.alpha());
}

AlgebraPtr twisted_derivation_product(const SuperAlgebra& a,
                                      const EvenMap& d) {
    const char* op = "twisted_derivation_product";
    std::size_t n = a.dim();
    // The product axioms are required of the untwisted multiplication.
    SuperAlgebra untwisted(a.space(), a.mul(), Matrix::identity(n));
    require(op, "is_hom_associative", is_hom_associative(untwisted));
    require(op, "is_supercommutative", is_supercommutative(untwisted));
    require(op, "is_multiplicative", is_multiplicative(a));
    require(op, "is_derivation", is_derivation(untwisted, d));
    require(op, "commutes_with_alpha", commutes_with_alpha(a, d));

    MulTensor mul = derivation_tensor(a, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = a.apply_alpha(mul[i][j]);
    return make_algebra(a.space(), std::move(mul), a.alpha());
}

AlgebraPtr xi_family(const SuperAlgebra& a, const EvenMap& d, const Rat& xi) {
    check_derivation_preconditions("xi_family", a, d);
    std::size_t n = a.dim();
    MulTensor mul = derivation_tensor(a, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            add_scaled_in_place(mul[i][j], xi, a.product_basis(i, j));
    return make_algebra(a.space(), std::move(mul), a.alpha());
}

AlgebraPtr rota_baxter_product(const SuperAlgebra& a, const EvenMap& p,
                               const Rat& lambda) {
    const char* op = "rota_baxter_product";
    require(op, "is_hom_novikov", is_hom_novikov(a));
    require(op, "is_rota_baxter", is_rota_baxter(a, p, lambda));
    require(op, "commutes_with_alpha", commutes_with_alpha(a, p));

    std::size_t n = a.dim();
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = zero_vec(n);
        ei[i] = Rat(1);
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = zero_vec(n);
            ej[j] = Rat(1);
            Vec out = a.product(p.matrix.column(i), ej);
            add_in_place(out, a.product(ei, p.matrix.column(j)));
            add_scaled_in_place(out, lambda, a.product_basis(i, j));
            mul[i][j] = std::move(out);
        }
    }
    return make_algebra(a.space(), std::move(mul), a.alpha());
}

BilinearForm form_twist(const BilinearForm& b, const EvenMap& alpha,
                        std::size_t n) {
    if (n == 0)
        throw InputError("form twist power must be a positive integer");
    if (!(alpha.space == b.space))
        throw InputError("twisting map and form are defined on different "
                         "graded spaces");
    Matrix power = alpha.matrix;
    for (std::size_t i = 1; i < n; ++i) power = power * alpha.matrix;
    return BilinearForm(b.space, power.transposed() * b.gram);
}

Subspace center(const SuperAlgebra& a) {
    return annihilator(a, true, true);
}

Subspace lie_center(const HomLieAlgebra& l) {
    return annihilator(l, true, false);
}

std::vector<Subspace> lower_central_series(const HomLieAlgebra& l,
                                           std::size_t max_i) {
    std::vector<Subspace> chain;
    chain.push_back(whole_space(l.space()));
    for (std::size_t i = 1; i <= max_i; ++i) {
        Subspace next = bracket_span(l, chain.back().basis);
        if (next.dim() == chain.back().dim()) break; // stable: omit repeat
        bool was_zero = next.dim() == 0;
        chain.push_back(std::move(next));
        if (was_zero) break;
    }
    return chain;
}

bool is_two_step_nilpotent(const HomLieAlgebra& l) {
    Subspace derived = bracket_span(l, whole_space(l.space()).basis);
    return bracket_span(l, derived.basis).dim() == 0;
}

std::optional<std::size_t> nilpotency_step(const HomLieAlgebra& l) {
    Subspace current = whole_space(l.space());
    for (std::size_t step = 0; step <= l.dim() + 1; ++step) {
        if (current.dim() == 0) return step;
        Subspace next = bracket_span(l, current.basis);
        if (next.dim() == current.dim()) return std::nullopt;
        current = std::move(next);
    }
    return std::nullopt; // unreachable: dims strictly decrease
}

AlgebraPtr half_bracket_algebra(const HomLieAlgebra& l) {
    if (!is_two_step_nilpotent(l)) {
        CheckResult r = CheckResult::fail("two-step-nilpotency", {}, {});
        throw_precondition("half_bracket_algebra", "is_two_step_nilpotent",
                           r);
    }
    std::size_t n = l.dim();
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = scale(Rat(1, 2), l.product_basis(i, j));
    return make_algebra(l.space(), std::move(mul), l.alpha());
}

} // namespace homnov
