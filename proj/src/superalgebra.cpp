#include "homnov/superalgebra.hpp"

#include <sstream>
#include <utility>

#include "homnov/errors.hpp"

namespace homnov {

namespace {

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = Rat(1);
    return v;
}

void require_same_space(const SuperAlgebra& a, const GradedSpace& other,
                        const char* what) {
    if (!(a.space() == other)) {
        std::ostringstream msg;
        msg << what << " is defined on a different graded space than the "
            << "algebra";
        throw InputError(msg.str());
    }
}

} // namespace

SuperAlgebra::SuperAlgebra(GradedSpace space, MulTensor mul, Matrix alpha)
    : space_(std::move(space)), mul_(std::move(mul)), alpha_(std::move(alpha)) {
    std::size_t n = space_.dim();
    if (mul_.size() != n)
        throw InputError("structure tensor must have one row per basis "
                         "vector");
    for (std::size_t i = 0; i < n; ++i) {
        if (mul_[i].size() != n)
            throw InputError("structure tensor rows must have one entry per "
                             "basis vector");
        for (std::size_t j = 0; j < n; ++j) {
            if (mul_[i][j].size() != n)
                throw InputError("structure tensor entries must be coordinate "
                                 "vectors of the full dimension");
            Parity expected = parity_add(space_.parity(i), space_.parity(j));
            for (std::size_t k = 0; k < n; ++k) {
                if (mul_[i][j][k] != 0 && space_.parity(k) != expected) {
                    std::ostringstream msg;
                    msg << "structure tensor violates the grading: the "
                        << "product of basis vectors " << i << " and " << j
                        << " must be homogeneous of parity " << expected
                        << " but has a component on basis vector " << k;
                    throw InputError(msg.str());
                }
            }
        }
    }
    if (alpha_.rows() != n || alpha_.cols() != n)
        throw InputError("twisting map must be a square matrix of the "
                         "algebra dimension");
    if (!is_even_map(space_, alpha_))
        throw InputError("twisting map must be even (it may not mix "
                         "parities)");
}

Vec SuperAlgebra::product(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        throw InputError("product arguments must be coordinate vectors of "
                         "the algebra dimension");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            add_scaled_in_place(out, x[i] * y[j], mul_[i][j]);
        }
    }
    return out;
}

AlgebraPtr make_algebra(GradedSpace space, MulTensor mul, Matrix alpha) {
    return std::make_shared<const SuperAlgebra>(
        std::move(space), std::move(mul), std::move(alpha));
}

AlgebraPtr make_algebra(GradedSpace space, MulTensor mul) {
    Matrix id = Matrix::identity(space.dim());
    return make_algebra(std::move(space), std::move(mul), std::move(id));
}

EvenMap::EvenMap(GradedSpace s, Matrix m)
    : space(std::move(s)), matrix(std::move(m)) {
    if (matrix.rows() != space.dim() || matrix.cols() != space.dim())
        throw InputError("linear map must be a square matrix of the space "
                         "dimension");
    if (!is_even_map(space, matrix))
        throw InputError("linear map must be even (it may not mix parities)");
}

BilinearForm::BilinearForm(GradedSpace s, Matrix g)
    : space(std::move(s)), gram(std::move(g)) {
    if (gram.rows() != space.dim() || gram.cols() != space.dim())
        throw InputError("Gram matrix must be a square matrix of the space "
                         "dimension");
}

Rat BilinearForm::value(const Vec& x, const Vec& y) const {
    std::size_t n = space.dim();
    if (x.size() != n || y.size() != n)
        throw InputError("form arguments must be coordinate vectors of the "
                         "space dimension");
    Rat total(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            total += x[i] * gram.at(i, j) * y[j];
        }
    }
    return total;
}

CheckResult is_multiplicative(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = a.apply_alpha(a.product_basis(i, j));
            Vec rhs = a.product(a.alpha().column(i), a.alpha().column(j));
            Vec residual = sub(lhs, rhs);
            if (!is_zero(residual))
                return CheckResult::fail("multiplicativity", {i, j},
                                         std::move(residual));
        }
    return CheckResult::pass();
}

CheckResult is_hom_left_symmetric(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int sign = koszul_sign(a.parity(i), a.parity(j));
            for (std::size_t k = 0; k < n; ++k) {
                Vec ak = a.alpha().column(k);
                // (x y) a(z) - a(x) (y z), and the same with x, y swapped.
                Vec lhs = sub(a.product(a.product_basis(i, j), ak),
                              a.product(a.alpha().column(i),
                                        a.product_basis(j, k)));
                Vec rhs = sub(a.product(a.product_basis(j, i), ak),
                              a.product(a.alpha().column(j),
                                        a.product_basis(i, k)));
                Vec residual = sub(lhs, scale(Rat(sign), rhs));
                if (!is_zero(residual))
                    return CheckResult::fail("left-symmetry", {i, j, k},
                                             std::move(residual));
            }
        }
    return CheckResult::pass();
}

CheckResult satisfies_hom_novikov_identity(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                int sign = koszul_sign(a.parity(j), a.parity(k));
                Vec lhs = a.product(a.product_basis(i, j),
                                    a.alpha().column(k));
                Vec rhs = a.product(a.product_basis(i, k),
                                    a.alpha().column(j));
                Vec residual = sub(lhs, scale(Rat(sign), rhs));
                if (!is_zero(residual))
                    return CheckResult::fail("novikov-identity", {i, j, k},
                                             std::move(residual));
            }
    return CheckResult::pass();
}

CheckResult is_hom_novikov(const SuperAlgebra& a) {
    if (auto r = is_multiplicative(a); !r.ok()) return r;
    if (auto r = is_hom_left_symmetric(a); !r.ok()) return r;
    return satisfies_hom_novikov_identity(a);
}

CheckResult is_hom_associative(const SuperAlgebra& a) {
    if (auto r = is_multiplicative(a); !r.ok()) return r;
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.product(a.product_basis(i, j),
                                    a.alpha().column(k));
                Vec rhs = a.product(a.alpha().column(i),
                                    a.product_basis(j, k));
                Vec residual = sub(lhs, rhs);
                if (!is_zero(residual))
                    return CheckResult::fail("hom-associativity", {i, j, k},
                                             std::move(residual));
            }
    return CheckResult::pass();
}

CheckResult is_supercommutative(const SuperAlgebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int sign = koszul_sign(a.parity(i), a.parity(j));
            Vec residual =
                sub(a.product_basis(i, j),
                    scale(Rat(sign), a.product_basis(j, i)));
            if (!is_zero(residual))
                return CheckResult::fail("supercommutativity", {i, j},
                                         std::move(residual));
        }
    return CheckResult::pass();
}

CheckResult is_hom_lie(const SuperAlgebra& a) {
    if (auto r = is_multiplicative(a); !r.ok()) return r;
    std::size_t n = a.dim();
    // Super skew-symmetry: [x,y] = -(-1)^{|x||y|} [y,x].
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int sign = koszul_sign(a.parity(i), a.parity(j));
            Vec residual = add(a.product_basis(i, j),
                               scale(Rat(sign), a.product_basis(j, i)));
            if (!is_zero(residual))
                return CheckResult::fail("skew-symmetry", {i, j},
                                         std::move(residual));
        }
    // Twisted graded Jacobi identity: the Koszul-signed cyclic sum of
    // [alpha(x), [y, z]] vanishes.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                int s_ik = koszul_sign(a.parity(i), a.parity(k));
                int s_ji = koszul_sign(a.parity(j), a.parity(i));
                int s_kj = koszul_sign(a.parity(k), a.parity(j));
                Vec sum = scale(Rat(s_ik),
                                a.product(a.alpha().column(i),
                                          a.product_basis(j, k)));
                add_scaled_in_place(sum, Rat(s_ji),
                                    a.product(a.alpha().column(j),
                                              a.product_basis(k, i)));
                add_scaled_in_place(sum, Rat(s_kj),
                                    a.product(a.alpha().column(k),
                                              a.product_basis(i, j)));
                if (!is_zero(sum))
                    return CheckResult::fail("hom-jacobi", {i, j, k},
                                             std::move(sum));
            }
    return CheckResult::pass();
}

CheckResult is_derivation(const SuperAlgebra& a, const EvenMap& d) {
    require_same_space(a, d.space, "derivation candidate");
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = d.apply(a.product_basis(i, j));
            Vec rhs = add(a.product(d.matrix.column(i), basis_vec(n, j)),
                          a.product(basis_vec(n, i), d.matrix.column(j)));
            Vec residual = sub(lhs, rhs);
            if (!is_zero(residual))
                return CheckResult::fail("derivation-rule", {i, j},
                                         std::move(residual));
        }
    return CheckResult::pass();
}

CheckResult commutes_with_alpha(const SuperAlgebra& a, const EvenMap& m) {
    require_same_space(a, m.space, "linear map");
    Matrix commutator = a.alpha() * m.matrix - m.matrix * a.alpha();
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec col = commutator.column(j);
        if (!is_zero(col))
            return CheckResult::fail("alpha-commutation", {j},
                                     std::move(col));
    }
    return CheckResult::pass();
}

CheckResult is_rota_baxter(const SuperAlgebra& a, const EvenMap& p,
                           const Rat& lambda) {
    require_same_space(a, p.space, "Rota-Baxter candidate");
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec pi = p.matrix.column(i);
            Vec pj = p.matrix.column(j);
            Vec lhs = a.product(pi, pj);
            Vec inner = add(a.product(pi, basis_vec(n, j)),
                            a.product(basis_vec(n, i), pj));
            add_scaled_in_place(inner, lambda, a.product_basis(i, j));
            Vec residual = sub(lhs, p.apply(inner));
            if (!is_zero(residual))
                return CheckResult::fail("rota-baxter-identity", {i, j},
                                         std::move(residual));
        }
    return CheckResult::pass();
}

CheckResult form_is_supersymmetric(const BilinearForm& b) {
    std::size_t n = b.space.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int sign = koszul_sign(b.space.parity(i), b.space.parity(j));
            Rat residual = b.gram.at(i, j) - Rat(sign) * b.gram.at(j, i);
            if (residual != 0)
                return CheckResult::fail("form-supersymmetry", {i, j},
                                         Vec{residual});
        }
    return CheckResult::pass();
}

CheckResult form_is_even(const BilinearForm& b) {
    std::size_t n = b.space.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (b.space.parity(i) != b.space.parity(j) &&
                b.gram.at(i, j) != 0)
                return CheckResult::fail("form-evenness", {i, j},
                                         Vec{b.gram.at(i, j)});
    return CheckResult::pass();
}

CheckResult form_is_nondegenerate(const BilinearForm& b) {
    auto kernel = kernel_basis(b.gram);
    if (!kernel.empty())
        return CheckResult::fail("form-nondegeneracy", {},
                                 std::move(kernel.front()));
    return CheckResult::pass();
}

CheckResult form_is_novikov_invariant(const SuperAlgebra& a,
                                      const BilinearForm& b) {
    require_same_space(a, b.space, "bilinear form");
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rat lhs = b.value(a.alpha().column(i), a.product_basis(j, k));
                Rat rhs = b.value(a.product_basis(i, j), a.alpha().column(k));
                Rat residual = lhs - rhs;
                if (residual != 0)
                    return CheckResult::fail("form-novikov-invariance",
                                             {i, j, k}, Vec{residual});
            }
    return CheckResult::pass();
}

CheckResult form_is_lie_invariant(const SuperAlgebra& a,
                                  const BilinearForm& b) {
    require_same_space(a, b.space, "bilinear form");
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rat lhs = b.value(a.product_basis(i, j), basis_vec(n, k));
                Rat rhs = b.value(basis_vec(n, i), a.product_basis(j, k));
                Rat residual = lhs - rhs;
                if (residual != 0)
                    return CheckResult::fail("form-lie-invariance", {i, j, k},
                                             Vec{residual});
            }
    return CheckResult::pass();
}

CheckResult form_alpha_symmetric(const SuperAlgebra& a,
                                 const BilinearForm& b) {
    require_same_space(a, b.space, "bilinear form");
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat lhs = b.value(a.alpha().column(i), basis_vec(n, j));
            Rat rhs = b.value(basis_vec(n, i), a.alpha().column(j));
            Rat residual = lhs - rhs;
            if (residual != 0)
                return CheckResult::fail("form-alpha-symmetry", {i, j},
                                         Vec{residual});
        }
    return CheckResult::pass();
}

AlgebraPtr conjugate_algebra(const SuperAlgebra& a, const Matrix& s) {
    std::size_t n = a.dim();
    if (s.rows() != n || s.cols() != n)
        throw InputError("change-of-basis matrix must be square of the "
                         "algebra dimension");
    if (!is_even_map(a.space(), s))
        throw InputError("change-of-basis matrix must be even (it may not "
                         "mix parities)");
    auto s_inv = invert(s);
    if (!s_inv.has_value())
        throw InputError("change-of-basis matrix must be invertible");
    MulTensor mul(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = s_inv->apply(a.product(s.column(i), s.column(j)));
    Matrix alpha = (*s_inv) * a.alpha() * s;
    return make_algebra(a.space(), std::move(mul), std::move(alpha));
}

BilinearForm conjugate_form(const BilinearForm& b, const Matrix& s) {
    std::size_t n = b.space.dim();
    if (s.rows() != n || s.cols() != n)
        throw InputError("change-of-basis matrix must be square of the "
                         "space dimension");
    if (!is_even_map(b.space, s))
        throw InputError("change-of-basis matrix must be even (it may not "
                         "mix parities)");
    if (!invert(s).has_value())
        throw InputError("change-of-basis matrix must be invertible");
    return BilinearForm(b.space, s.transposed() * b.gram * s);
}

EvenMap conjugate_map(const EvenMap& m, const Matrix& s) {
    std::size_t n = m.space.dim();
    if (s.rows() != n || s.cols() != n)
        throw InputError("change-of-basis matrix must be square of the "
                         "space dimension");
    if (!is_even_map(m.space, s))
        throw InputError("change-of-basis matrix must be even (it may not "
                         "mix parities)");
    auto s_inv = invert(s);
    if (!s_inv.has_value())
        throw InputError("change-of-basis matrix must be invertible");
    return EvenMap(m.space, (*s_inv) * m.matrix * s);
}

} // namespace homnov
