#include "homnov/families.hpp"

#include <utility>

#include "homnov/constructions.hpp"
#include "homnov/errors.hpp"
#include "homnov/linalg.hpp"

namespace homnov::families {

namespace {

MulTensor zero_tensor(std::size_t n) {
    return MulTensor(n, std::vector<Vec>(n, zero_vec(n)));
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec e = zero_vec(n);
    e[i] = Rat(1);
    return e;
}

// Product table beta(x y) with twisting map beta composed onto a's own map.
// For a base with identity twist this is the standard one-map twist.
AlgebraPtr twist_by(const SuperAlgebra& a, const Matrix& beta) {
    std::size_t n = a.dim();
    MulTensor mul = zero_tensor(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = beta.apply(a.product_basis(i, j));
    return make_algebra(a.space(), std::move(mul), beta * a.alpha());
}

// Random invertible even change-of-basis with entries in {-1, 0, 1}:
// a product of a couple of same-parity elementary shears and sign flips.
Matrix random_shear(Rng& rng, const GradedSpace& space) {
    std::size_t n = space.dim();
    Matrix s = Matrix::identity(n);
    int flips = pick_int(rng, 0, 2);
    for (int t = 0; t < flips; ++t) {
        std::size_t i = static_cast<std::size_t>(
            pick_int(rng, 0, static_cast<int>(n) - 1));
        s.at(i, i) = -s.at(i, i);
    }
    int shears = pick_int(rng, 0, 2);
    for (int t = 0; t < shears; ++t) {
        std::size_t p = static_cast<std::size_t>(
            pick_int(rng, 0, static_cast<int>(n) - 1));
        std::size_t q = static_cast<std::size_t>(
            pick_int(rng, 0, static_cast<int>(n) - 1));
        if (p == q || space.parity(p) != space.parity(q)) continue;
        Matrix shear = Matrix::identity(n);
        shear.at(p, q) = Rat(pick_int(rng, 0, 1) == 0 ? -1 : 1);
        s = s * shear;
    }
    return s;
}

std::vector<Parity> random_parities(Rng& rng, int max_dim) {
    int even = pick_int(rng, 0, max_dim);
    int odd = pick_int(rng, 0, max_dim - even);
    if (even + odd == 0) even = 1;
    std::vector<Parity> parities;
    for (int i = 0; i < even; ++i) parities.push_back(0);
    for (int i = 0; i < odd; ++i) parities.push_back(1);
    return parities;
}

// Random even matrix over the given space with small entries.
Matrix random_even_matrix(Rng& rng, const GradedSpace& space, int max_num,
                          int max_den) {
    std::size_t n = space.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (space.parity(i) == space.parity(j))
                m.at(i, j) = small_rational(rng, max_num, max_den);
    return m;
}

// Random even diagonal matrix with entries in {-1, 1}.
Matrix random_sign_diagonal(Rng& rng, std::size_t n) {
    std::vector<Rat> d;
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(Rat(pick_int(rng, 0, 1) == 0 ? 1 : -1));
    return Matrix::diagonal(d);
}

// Wraps the flat arity-2 table of a's product as a cochain over base
// (same space, same twisting map expected by the caller).
Cochain product_cochain_over(const AlgebraPtr& base, const SuperAlgebra& a) {
    std::size_t n = a.dim();
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.push_back(a.product_basis(i, j));
    return Cochain(base, 2, 0, std::move(table));
}

AlgebraPtr maybe_conjugated(Rng& rng, const AlgebraPtr& a, long bound) {
    if (pick_int(rng, 0, 1) == 0) return a;
    Matrix s = random_shear(rng, a->space());
    AlgebraPtr conj = conjugate_algebra(*a, s);
    if (bound > 0 && !entries_within(*conj, bound)) return a;
    return conj;
}

} // namespace

int pick_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng);
}

Rat small_rational(Rng& rng, int max_num, int max_den) {
    int num = pick_int(rng, -max_num, max_num);
    int den = pick_int(rng, 1, max_den);
    return Rat(num) / den;
}

Rat small_nonzero_rational(Rng& rng, int max_num, int max_den) {
    int num = pick_int(rng, 1, max_num);
    if (pick_int(rng, 0, 1) == 0) num = -num;
    int den = pick_int(rng, 1, max_den);
    return Rat(num) / den;
}

bool entries_within(const SuperAlgebra& a, long bound) {
    auto fits = [&](const Rat& c) {
        return abs(numerator(c)) <= bound && denominator(c) <= bound;
    };
    for (const auto& row : a.mul())
        for (const Vec& v : row)
            for (const Rat& c : v)
                if (!fits(c)) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!fits(a.alpha().at(i, j))) return false;
    return true;
}

AlgebraPtr zero_product(std::vector<Parity> parities,
                        std::optional<Matrix> alpha) {
    GradedSpace space(std::move(parities));
    std::size_t n = space.dim();
    Matrix a = alpha.has_value() ? std::move(*alpha) : Matrix::identity(n);
    return make_algebra(space, zero_tensor(n), std::move(a));
}

AlgebraPtr line(const Rat& c) {
    GradedSpace space(std::vector<Parity>{0});
    MulTensor mul = zero_tensor(1);
    mul[0][0][0] = c;
    return make_algebra(space, std::move(mul), Matrix::identity(1));
}

AlgebraPtr unital_pair(std::optional<Matrix> alpha) {
    GradedSpace space(std::vector<Parity>{0, 1});
    MulTensor mul = zero_tensor(2);
    mul[0][0] = unit_vec(2, 0);
    mul[0][1] = unit_vec(2, 1);
    mul[1][0] = unit_vec(2, 1);
    Matrix a = alpha.has_value() ? std::move(*alpha) : Matrix::identity(2);
    return make_algebra(space, std::move(mul), std::move(a));
}

EvenMap unital_pair_derivation(const Rat& c) {
    return EvenMap(GradedSpace(std::vector<Parity>{0, 1}),
                   Matrix::diagonal({Rat(0), c}));
}

AlgebraPtr truncated_polynomial(std::size_t k) {
    if (k == 0) throw InputError("truncation exponent must be positive");
    GradedSpace space(std::vector<Parity>(k, 0));
    MulTensor mul = zero_tensor(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) mul[i][j] = unit_vec(k, i + j);
    return make_algebra(space, std::move(mul), Matrix::identity(k));
}

Matrix alternating_sign_map(std::size_t k) {
    std::vector<Rat> d;
    for (std::size_t i = 0; i < k; ++i)
        d.push_back(Rat(i % 2 == 0 ? 1 : -1));
    return Matrix::diagonal(d);
}

EvenMap polynomial_derivation(std::size_t k, const std::vector<Rat>& p) {
    GradedSpace space(std::vector<Parity>(k, 0));
    Matrix m(k, k);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 0; j < p.size() && j < k; ++j) {
            std::size_t target = i + j - 1;
            if (target < k) m.at(target, i) += Rat(i) * p[j];
        }
    return EvenMap(space, std::move(m));
}

BilinearForm truncated_polynomial_form(std::size_t k, const Rat& scale) {
    GradedSpace space(std::vector<Parity>(k, 0));
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) g.at(i, k - 1 - i) = scale;
    return BilinearForm(space, std::move(g));
}

AlgebraPtr cyclic_group_algebra(std::size_t k) {
    if (k == 0) throw InputError("group order must be positive");
    GradedSpace space(std::vector<Parity>(k, 0));
    MulTensor mul = zero_tensor(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            mul[i][j] = unit_vec(k, (i + j) % k);
    return make_algebra(space, std::move(mul), Matrix::identity(k));
}

Matrix cyclic_inversion(std::size_t k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at((k - i) % k, i) = Rat(1);
    return m;
}

BilinearForm cyclic_group_form(std::size_t k, const Rat& scale) {
    GradedSpace space(std::vector<Parity>(k, 0));
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) g.at(i, (k - i) % k) = scale;
    return BilinearForm(space, std::move(g));
}

AlgebraPtr exterior_pair(std::optional<Matrix> alpha) {
    GradedSpace space(std::vector<Parity>{0, 0, 1, 1});
    MulTensor mul = zero_tensor(4);
    for (std::size_t j = 0; j < 4; ++j) {
        mul[0][j] = unit_vec(4, j);
        mul[j][0] = unit_vec(4, j);
    }
    mul[2][3] = unit_vec(4, 1);
    mul[3][2] = scale(Rat(-1), unit_vec(4, 1));
    Matrix a = alpha.has_value() ? std::move(*alpha) : Matrix::identity(4);
    return make_algebra(space, std::move(mul), std::move(a));
}

Matrix exterior_sign_map() {
    return Matrix::diagonal({Rat(1), Rat(1), Rat(-1), Rat(-1)});
}

EvenMap exterior_grading_derivation(const Rat& c) {
    return EvenMap(GradedSpace(std::vector<Parity>{0, 0, 1, 1}),
                   Matrix::diagonal({Rat(0), Rat(2) * c, c, c}));
}

BilinearForm exterior_form(const Rat& scale) {
    GradedSpace space(std::vector<Parity>{0, 0, 1, 1});
    Matrix g(4, 4);
    g.at(0, 1) = scale;
    g.at(1, 0) = scale;
    g.at(2, 3) = scale;
    g.at(3, 2) = -scale;
    return BilinearForm(space, std::move(g));
}

HomLieAlgebra cross_product_nilpotent(const Matrix& s) {
    if (s.rows() != 3 || s.cols() != 3)
        throw InputError("parameter matrix must be 3x3");
    if (!(s == s.transposed()))
        throw InputError("parameter matrix must be symmetric");
    GradedSpace space(std::vector<Parity>(6, 0));
    MulTensor mul = zero_tensor(6);
    // [x_i, x_j] = sum_k eps_{ijk} y_k on basis (x1,x2,x3,y1,y2,y3).
    auto set_pair = [&](std::size_t i, std::size_t j, std::size_t y) {
        mul[i][j] = unit_vec(6, 3 + y);
        mul[j][i] = scale(Rat(-1), unit_vec(6, 3 + y));
    };
    set_pair(0, 1, 2);
    set_pair(1, 2, 0);
    set_pair(2, 0, 1);
    Matrix alpha = Matrix::identity(6);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i) alpha.at(3 + k, i) = s.at(k, i);
    return SuperAlgebra(space, std::move(mul), std::move(alpha));
}

BilinearForm cross_product_form(const Rat& scale) {
    GradedSpace space(std::vector<Parity>(6, 0));
    Matrix g(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        g.at(i, 3 + i) = scale;
        g.at(3 + i, i) = scale;
    }
    return BilinearForm(space, std::move(g));
}

AlgebraPtr random_hom_novikov(Rng& rng) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        AlgebraPtr candidate;
        switch (pick_int(rng, 0, 6)) {
        case 0: {
            std::vector<Parity> parities = random_parities(rng, 4);
            GradedSpace space(parities);
            candidate = zero_product(std::move(parities),
                                     random_even_matrix(rng, space, 2, 2));
            break;
        }
        case 1:
            candidate = line(small_rational(rng, 3, 2));
            break;
        case 2: {
            DerivationInput in = random_derivation_input(rng);
            candidate = derivation_product(*in.algebra, in.map);
            break;
        }
        case 3: {
            DerivationInput in = random_twisted_derivation_input(rng);
            candidate = twisted_derivation_product(*in.algebra, in.map);
            break;
        }
        case 4: {
            DerivationInput in = random_derivation_input(rng);
            candidate = xi_family(*in.algebra, in.map,
                                  small_rational(rng, 2, 2));
            break;
        }
        case 5: {
            RotaBaxterInput in = random_rota_baxter_input(rng);
            candidate = rota_baxter_product(*in.algebra, in.op, in.weight);
            break;
        }
        default: {
            DerivationInput in = random_twisted_derivation_input(rng);
            candidate =
                yau_square_twist(*twisted_derivation_product(*in.algebra,
                                                             in.map));
            break;
        }
        }
        candidate = maybe_conjugated(rng, candidate, 5);
        if (entries_within(*candidate, 5)) return candidate;
    }
    return zero_product({0, 1});
}

AlgebraPtr random_regular_hom_novikov(Rng& rng) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        AlgebraPtr a = random_hom_novikov(rng);
        if (invert(a->alpha()).has_value()) return a;
    }
    return line(Rat(1));
}

AlgebraPtr random_involutive_hom_novikov(Rng& rng) {
    AlgebraPtr candidate;
    switch (pick_int(rng, 0, 5)) {
    case 0: {
        std::vector<Parity> parities = random_parities(rng, 4);
        std::size_t n = parities.size();
        candidate = zero_product(std::move(parities),
                                 random_sign_diagonal(rng, n));
        break;
    }
    case 1:
        candidate = line(small_rational(rng, 3, 2));
        break;
    case 2: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        std::vector<Rat> p(k, Rat(0));
        for (std::size_t j = 1; j < k; j += 2)
            p[j] = small_rational(rng, 1, 2);
        AlgebraPtr base = truncated_polynomial(k);
        SuperAlgebra with_sign(base->space(), base->mul(),
                               alternating_sign_map(k));
        candidate = twisted_derivation_product(with_sign,
                                               polynomial_derivation(k, p));
        break;
    }
    case 3: {
        SuperAlgebra with_sign(exterior_pair()->space(),
                               exterior_pair()->mul(), exterior_sign_map());
        candidate = twisted_derivation_product(
            with_sign, exterior_grading_derivation(small_rational(rng, 1, 2)));
        break;
    }
    case 4: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        candidate = twist_by(*cyclic_group_algebra(k), cyclic_inversion(k));
        break;
    }
    default: {
        Matrix flip = Matrix::diagonal({Rat(1), Rat(-1)});
        candidate = twisted_derivation_product(
            *unital_pair(flip),
            unital_pair_derivation(small_rational(rng, 2, 2)));
        break;
    }
    }
    return maybe_conjugated(rng, candidate, 0);
}

Cochain random_hom_cochain1(Rng& rng, const AlgebraPtr& a, Parity parity) {
    std::vector<Cochain> basis = cochain_basis(a, 1, parity);
    Cochain f = Cochain::zero(a, 1, parity);
    for (const Cochain& b : basis)
        f = add(f, scale(small_rational(rng, 2, 2), b));
    return f;
}

DerivationInput random_derivation_input(Rng& rng) {
    AlgebraPtr algebra;
    std::optional<EvenMap> map;
    switch (pick_int(rng, 0, 4)) {
    case 0: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        // p must have zero constant term so that p(x) d/dx respects the
        // truncation x^k = 0.
        std::vector<Rat> p(k, Rat(0));
        for (std::size_t j = 1; j < k; ++j)
            p[j] = small_rational(rng, 1, 2);
        algebra = truncated_polynomial(k);
        map = polynomial_derivation(k, p);
        break;
    }
    case 1:
        algebra = exterior_pair();
        map = exterior_grading_derivation(small_rational(rng, 1, 2));
        break;
    case 2:
        algebra = unital_pair();
        map = unital_pair_derivation(small_rational(rng, 2, 2));
        break;
    case 3: {
        std::vector<Parity> parities = random_parities(rng, 4);
        GradedSpace space(parities);
        Matrix d = random_even_matrix(rng, space, 2, 2);
        algebra = zero_product(std::move(parities));
        map = EvenMap(space, std::move(d));
        break;
    }
    default: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        algebra = cyclic_group_algebra(k);
        map = EvenMap(algebra->space(), Matrix(k, k));
        break;
    }
    }
    if (pick_int(rng, 0, 1) == 1) {
        Matrix s = random_shear(rng, algebra->space());
        algebra = conjugate_algebra(*algebra, s);
        map = conjugate_map(*map, s);
    }
    return {std::move(algebra), std::move(*map)};
}

DerivationInput random_twisted_derivation_input(Rng& rng) {
    AlgebraPtr algebra;
    std::optional<EvenMap> map;
    switch (pick_int(rng, 0, 4)) {
    case 0: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        std::vector<Rat> p(k, Rat(0));
        for (std::size_t j = 1; j < k; j += 2)
            p[j] = small_rational(rng, 1, 2);
        AlgebraPtr base = truncated_polynomial(k);
        algebra = make_algebra(base->space(), base->mul(),
                               alternating_sign_map(k));
        map = polynomial_derivation(k, p);
        break;
    }
    case 1: {
        AlgebraPtr base = exterior_pair();
        algebra =
            make_algebra(base->space(), base->mul(), exterior_sign_map());
        map = exterior_grading_derivation(small_rational(rng, 1, 2));
        break;
    }
    case 2: {
        Matrix alpha = Matrix::diagonal(
            {Rat(1), Rat(pick_int(rng, 0, 1) == 0 ? 1 : -1)});
        algebra = unital_pair(std::move(alpha));
        map = unital_pair_derivation(small_rational(rng, 2, 2));
        break;
    }
    case 3: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        AlgebraPtr base = cyclic_group_algebra(k);
        algebra =
            make_algebra(base->space(), base->mul(), cyclic_inversion(k));
        map = EvenMap(base->space(), Matrix(k, k));
        break;
    }
    default: {
        std::vector<Parity> parities = random_parities(rng, 4);
        GradedSpace space(parities);
        std::size_t n = space.dim();
        std::vector<Rat> d, alpha_diag;
        for (std::size_t i = 0; i < n; ++i) {
            d.push_back(small_rational(rng, 2, 2));
            alpha_diag.push_back(small_rational(rng, 2, 2));
        }
        algebra = zero_product(std::move(parities),
                               Matrix::diagonal(alpha_diag));
        map = EvenMap(space, Matrix::diagonal(d));
        break;
    }
    }
    if (pick_int(rng, 0, 1) == 1) {
        Matrix s = random_shear(rng, algebra->space());
        algebra = conjugate_algebra(*algebra, s);
        map = conjugate_map(*map, s);
    }
    return {std::move(algebra), std::move(*map)};
}

RotaBaxterInput random_rota_baxter_input(Rng& rng) {
    switch (pick_int(rng, 0, 3)) {
    case 0: {
        AlgebraPtr a = random_hom_novikov(rng);
        std::size_t n = a->dim();
        EvenMap p(a->space(), Matrix(n, n));
        return {std::move(a), std::move(p), small_rational(rng, 2, 2)};
    }
    case 1: {
        // P = c id is a Rota-Baxter operator of weight -c on any algebra.
        AlgebraPtr a = random_hom_novikov(rng);
        Rat c = small_nonzero_rational(rng, 2, 2);
        EvenMap p(a->space(),
                  Matrix::diagonal(std::vector<Rat>(a->dim(), c)));
        return {std::move(a), std::move(p), -c};
    }
    case 2: {
        std::vector<Parity> parities = random_parities(rng, 4);
        GradedSpace space(parities);
        Matrix m = random_even_matrix(rng, space, 2, 2);
        AlgebraPtr a = zero_product(std::move(parities));
        return {std::move(a), EvenMap(space, std::move(m)),
                small_rational(rng, 2, 2)};
    }
    default: {
        // Weight-0 operator on the truncated polynomial algebra raising
        // the degree: P(x^i) = c x^{i+1} / (i+1).
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        Rat c = small_nonzero_rational(rng, 2, 2);
        Matrix m(k, k);
        for (std::size_t i = 0; i + 1 < k; ++i)
            m.at(i + 1, i) = c / Rat(static_cast<int>(i) + 1);
        AlgebraPtr a = truncated_polynomial(k);
        EvenMap p(a->space(), std::move(m));
        return {std::move(a), std::move(p), Rat(0)};
    }
    }
}

QuadraticInput random_quadratic_input(Rng& rng) {
    AlgebraPtr algebra;
    std::optional<BilinearForm> form;
    switch (pick_int(rng, 0, 4)) {
    case 0: {
        Matrix s(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                s.at(i, j) = small_rational(rng, 2, 2);
                s.at(j, i) = s.at(i, j);
            }
        algebra = half_bracket_algebra(cross_product_nilpotent(s));
        form = cross_product_form(small_nonzero_rational(rng, 3, 2));
        break;
    }
    case 1: {
        std::size_t k = pick_int(rng, 0, 1) == 0 ? 3 : 5;
        AlgebraPtr base = truncated_polynomial(k);
        algebra = pick_int(rng, 0, 1) == 0
                      ? base
                      : twist_by(*base, alternating_sign_map(k));
        form = truncated_polynomial_form(k, small_nonzero_rational(rng, 3, 2));
        break;
    }
    case 2: {
        std::size_t k = static_cast<std::size_t>(pick_int(rng, 2, 4));
        AlgebraPtr base = cyclic_group_algebra(k);
        algebra = pick_int(rng, 0, 1) == 0
                      ? base
                      : twist_by(*base, cyclic_inversion(k));
        form = cyclic_group_form(k, small_nonzero_rational(rng, 3, 2));
        break;
    }
    default: {
        AlgebraPtr base = exterior_pair();
        algebra = pick_int(rng, 0, 1) == 0
                      ? base
                      : twist_by(*base, exterior_sign_map());
        form = exterior_form(small_nonzero_rational(rng, 3, 2));
        break;
    }
    }
    if (pick_int(rng, 0, 1) == 1) {
        Matrix s = random_shear(rng, algebra->space());
        algebra = conjugate_algebra(*algebra, s);
        form = conjugate_form(*form, s);
    }
    return {std::move(algebra), std::move(*form)};
}

TruncatedDeformation random_deformation(Rng& rng, std::size_t order) {
    TruncatedDeformation d = [&]() -> TruncatedDeformation {
        switch (pick_int(rng, 0, 2)) {
        case 0:
            return random_line_deformation(rng, order);
        case 1: {
            // Over the zero product (with the donor's twisting map) every
            // series of multiples of one fixed valid product is valid.
            AlgebraPtr donor = random_hom_novikov(rng);
            AlgebraPtr base =
                zero_product(donor->space().parities(), donor->alpha());
            std::vector<Cochain> terms;
            for (std::size_t n = 1; n <= order; ++n)
                terms.push_back(scale(small_rational(rng, 2, 2),
                                      product_cochain_over(base, *donor)));
            return TruncatedDeformation(base, std::move(terms));
        }
        default: {
            // Over x*y = x D(y) every series of multiples of the original
            // product is valid (the one-parameter family, order by order).
            DerivationInput in = random_derivation_input(rng);
            AlgebraPtr base = derivation_product(*in.algebra, in.map);
            std::vector<Cochain> terms;
            for (std::size_t n = 1; n <= order; ++n)
                terms.push_back(scale(small_rational(rng, 2, 2),
                                      product_cochain_over(base, *in.algebra)));
            return TruncatedDeformation(base, std::move(terms));
        }
        }
    }();
    if (pick_int(rng, 0, 1) == 1)
        d = apply_equivalence(d, random_transform(rng, d.base(), d.order()));
    return d;
}

TruncatedDeformation random_line_deformation(Rng& rng, std::size_t order) {
    AlgebraPtr base = line(Rat(1));
    std::vector<Cochain> terms;
    for (std::size_t n = 1; n <= order; ++n)
        terms.push_back(
            Cochain(base, 2, 0, {Vec{small_rational(rng, 3, 2)}}));
    return TruncatedDeformation(base, std::move(terms));
}

EquivalenceTransform random_transform(Rng& rng, const AlgebraPtr& base,
                                      std::size_t order) {
    std::vector<Cochain> maps;
    for (std::size_t n = 1; n <= order; ++n)
        maps.push_back(random_hom_cochain1(rng, base, 0));
    return EquivalenceTransform(base, std::move(maps));
}

AlgebraDocument random_algebra_document(Rng& rng) {
    AlgebraDocument doc;
    doc.algebra = random_hom_novikov(rng);
    std::size_t n = doc.algebra->dim();
    if (pick_int(rng, 0, 1) == 1) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g.at(i, j) = small_rational(rng, 3, 3);
        doc.form = BilinearForm(doc.algebra->space(), std::move(g));
    }
    if (pick_int(rng, 0, 1) == 1)
        doc.maps.emplace("D", EvenMap(doc.algebra->space(),
                                      random_even_matrix(
                                          rng, doc.algebra->space(), 3, 3)));
    if (pick_int(rng, 0, 1) == 1)
        doc.maps.emplace("P", EvenMap(doc.algebra->space(),
                                      random_even_matrix(
                                          rng, doc.algebra->space(), 3, 3)));
    if (pick_int(rng, 0, 1) == 1) doc.weight = small_rational(rng, 3, 3);
    if (pick_int(rng, 0, 1) == 1) doc.xi = small_rational(rng, 3, 3);
    return doc;
}

DeformationDocument random_deformation_document(Rng& rng) {
    DeformationDocument doc;
    doc.order = static_cast<std::size_t>(pick_int(rng, 1, 4));
    std::size_t dim = static_cast<std::size_t>(pick_int(rng, 1, 4));
    for (std::size_t t = 0; t < doc.order; ++t) {
        std::vector<TensorEntry> entries;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    if (pick_int(rng, 0, 3) != 0) continue;
                    Rat c = small_nonzero_rational(rng, 3, 3);
                    entries.push_back({i, j, k, c});
                }
        doc.terms.push_back(std::move(entries));
    }
    return doc;
}

} // namespace homnov::families
