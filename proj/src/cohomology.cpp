#include "homnov/cohomology.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "homnov/errors.hpp"
#include "homnov/linalg.hpp"

namespace homnov {

namespace {

std::size_t pow_dim(std::size_t n, std::size_t arity) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= n;
    return total;
}

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = Rat(1);
    return v;
}

// Decode a flat tuple index (most significant first, matching the
// table[i1*n + i2] layout).
std::array<std::size_t, 3> decode(std::size_t flat, std::size_t n,
                                  std::size_t arity) {
    std::array<std::size_t, 3> tuple{0, 0, 0};
    for (std::size_t m = arity; m-- > 0;) {
        tuple[m] = flat % n;
        flat /= n;
    }
    return tuple;
}

[[noreturn]] void throw_not_hom_cochain(const char* op) {
    std::ostringstream msg;
    msg << op << ": precondition is_hom_cochain failed (the cochain is not "
        << "compatible with the twisting map)";
    throw PreconditionError("is_hom_cochain", msg.str());
}

std::vector<Rat> flatten(const std::vector<Vec>& table) {
    std::vector<Rat> flat;
    for (const Vec& v : table) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

// Matrix whose columns are the flattened images of the given cochains.
Matrix coboundary_matrix(const std::vector<Cochain>& images) {
    if (images.empty()) return Matrix(0, 0);
    std::vector<std::vector<Rat>> cols;
    for (const Cochain& c : images) cols.push_back(flatten(c.table()));
    return Matrix::from_columns(cols);
}

} // namespace

Cochain::Cochain(AlgebraPtr algebra, std::size_t arity, Parity parity,
                 std::vector<Vec> table)
    : algebra_(std::move(algebra)), arity_(arity), parity_(parity),
      table_(std::move(table)) {
    if (!algebra_) throw InputError("cochain requires an algebra");
    if (arity_ < 1 || arity_ > 3)
        throw InputError("cochain arity must be 1, 2, or 3");
    if (parity_ != 0 && parity_ != 1)
        throw InputError("cochain parity must be 0 or 1");
    std::size_t n = algebra_->dim();
    if (table_.size() != pow_dim(n, arity_))
        throw InputError("cochain table must have one entry per basis "
                         "tuple");
    const GradedSpace& space = algebra_->space();
    for (std::size_t flat = 0; flat < table_.size(); ++flat) {
        if (table_[flat].size() != n)
            throw InputError("cochain table entries must be coordinate "
                             "vectors of the algebra dimension");
        auto tuple = decode(flat, n, arity_);
        Parity expected = parity_;
        for (std::size_t m = 0; m < arity_; ++m)
            expected = parity_add(expected, space.parity(tuple[m]));
        for (std::size_t k = 0; k < n; ++k)
            if (table_[flat][k] != 0 && space.parity(k) != expected) {
                std::ostringstream msg;
                msg << "cochain table violates parity-homogeneity: the "
                    << "value at basis tuple index " << flat
                    << " must be homogeneous of parity " << expected
                    << " but has a component on basis vector " << k;
                throw InputError(msg.str());
            }
    }
}

Cochain Cochain::zero(AlgebraPtr algebra, std::size_t arity, Parity parity) {
    if (!algebra) throw InputError("cochain requires an algebra");
    std::size_t n = algebra->dim();
    std::vector<Vec> table(pow_dim(n, arity), zero_vec(n));
    return Cochain(std::move(algebra), arity, parity, std::move(table));
}

const Vec& Cochain::value_basis(std::size_t i) const { return table_[i]; }

const Vec& Cochain::value_basis(std::size_t i, std::size_t j) const {
    return table_[i * algebra_->dim() + j];
}

const Vec& Cochain::value_basis(std::size_t i, std::size_t j,
                                std::size_t k) const {
    std::size_t n = algebra_->dim();
    return table_[(i * n + j) * n + k];
}

Vec Cochain::apply(const Vec& x) const {
    std::size_t n = algebra_->dim();
    if (arity_ != 1 || x.size() != n)
        throw InputError("cochain evaluation arity/dimension mismatch");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0) add_scaled_in_place(out, x[i], table_[i]);
    return out;
}

Vec Cochain::apply(const Vec& x, const Vec& y) const {
    std::size_t n = algebra_->dim();
    if (arity_ != 2 || x.size() != n || y.size() != n)
        throw InputError("cochain evaluation arity/dimension mismatch");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0)
                add_scaled_in_place(out, x[i] * y[j], table_[i * n + j]);
    }
    return out;
}

Vec Cochain::apply(const Vec& x, const Vec& y, const Vec& z) const {
    std::size_t n = algebra_->dim();
    if (arity_ != 3 || x.size() != n || y.size() != n || z.size() != n)
        throw InputError("cochain evaluation arity/dimension mismatch");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (z[k] != 0)
                    add_scaled_in_place(out, x[i] * y[j] * z[k],
                                        table_[(i * n + j) * n + k]);
        }
    }
    return out;
}

bool Cochain::is_zero() const {
    for (const Vec& v : table_)
        if (!homnov::is_zero(v)) return false;
    return true;
}

bool Cochain::operator==(const Cochain& other) const {
    return algebra_.get() == other.algebra_.get() && arity_ == other.arity_ &&
           parity_ == other.parity_ && table_ == other.table_;
}

namespace {

void require_same_cochain_kind(const Cochain& f, const Cochain& g,
                               const char* op) {
    if (f.algebra().get() != g.algebra().get()) {
        std::ostringstream msg;
        msg << op << ": cochains are defined over different algebra objects";
        throw InputError(msg.str());
    }
    if (f.arity() != g.arity() || f.parity() != g.parity()) {
        std::ostringstream msg;
        msg << op << ": cochain arity/parity mismatch";
        throw InputError(msg.str());
    }
}

} // namespace

Cochain add(const Cochain& f, const Cochain& g) {
    require_same_cochain_kind(f, g, "add");
    std::vector<Vec> table = f.table();
    for (std::size_t i = 0; i < table.size(); ++i)
        add_in_place(table[i], g.table()[i]);
    return Cochain(f.algebra(), f.arity(), f.parity(), std::move(table));
}

Cochain sub(const Cochain& f, const Cochain& g) {
    require_same_cochain_kind(f, g, "sub");
    std::vector<Vec> table = f.table();
    for (std::size_t i = 0; i < table.size(); ++i)
        sub_in_place(table[i], g.table()[i]);
    return Cochain(f.algebra(), f.arity(), f.parity(), std::move(table));
}

Cochain scale(const Rat& c, const Cochain& f) {
    std::vector<Vec> table = f.table();
    for (Vec& v : table) v = scale(c, v);
    return Cochain(f.algebra(), f.arity(), f.parity(), std::move(table));
}

Cochain product_cochain(const AlgebraPtr& a) {
    if (!a) throw InputError("cochain requires an algebra");
    std::size_t n = a->dim();
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.push_back(a->product_basis(i, j));
    return Cochain(a, 2, 0, std::move(table));
}

CheckResult is_hom_cochain(const Cochain& f) {
    const SuperAlgebra& a = *f.algebra();
    std::size_t n = a.dim();
    for (std::size_t flat = 0; flat < f.table().size(); ++flat) {
        auto tuple = decode(flat, n, f.arity());
        Vec lhs = a.apply_alpha(f.table()[flat]);
        Vec rhs;
        switch (f.arity()) {
        case 1:
            rhs = f.apply(a.alpha().column(tuple[0]));
            break;
        case 2:
            rhs = f.apply(a.alpha().column(tuple[0]),
                          a.alpha().column(tuple[1]));
            break;
        default:
            rhs = f.apply(a.alpha().column(tuple[0]),
                          a.alpha().column(tuple[1]),
                          a.alpha().column(tuple[2]));
            break;
        }
        Vec residual = homnov::sub(lhs, rhs);
        if (!homnov::is_zero(residual)) {
            std::vector<std::size_t> where(tuple.begin(),
                                           tuple.begin() + f.arity());
            return CheckResult::fail("alpha-compatibility", std::move(where),
                                     std::move(residual));
        }
    }
    return CheckResult::pass();
}

Cochain delta1(const Cochain& f) {
    if (f.arity() != 1)
        throw InputError("delta1 expects an arity-1 cochain");
    if (!is_hom_cochain(f).ok()) throw_not_hom_cochain("delta1");
    const SuperAlgebra& a = *f.algebra();
    std::size_t n = a.dim();
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        int sign = koszul_sign(a.parity(i), f.parity());
        for (std::size_t j = 0; j < n; ++j) {
            Vec out = scale(Rat(sign),
                            a.product(basis_vec(n, i), f.value_basis(j)));
            add_in_place(out, a.product(f.value_basis(i), basis_vec(n, j)));
            sub_in_place(out, f.apply(a.product_basis(i, j)));
            table.push_back(std::move(out));
        }
    }
    return Cochain(f.algebra(), 2, f.parity(), std::move(table));
}

Cochain delta2_unchecked(const Cochain& f) {
    if (f.arity() != 2)
        throw InputError("delta2 expects an arity-2 cochain");
    const SuperAlgebra& a = *f.algebra();
    std::size_t n = a.dim();
    Parity pf = f.parity();
    std::vector<Vec> table;
    table.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Parity p1 = a.parity(i), p2 = a.parity(j), p3 = a.parity(k);
                int s12 = koszul_sign(p1, p2);
                int s23 = koszul_sign(p2, p3);
                Vec ai = a.alpha().column(i);
                Vec aj = a.alpha().column(j);
                Vec ak = a.alpha().column(k);
                Vec out = f.apply(ai, a.product_basis(j, k));
                add_scaled_in_place(out, Rat(-s12),
                                    f.apply(aj, a.product_basis(i, k)));
                add_scaled_in_place(out, Rat(s12),
                                    f.apply(a.product_basis(j, i), ak));
                add_scaled_in_place(out, Rat(koszul_sign(p1, pf)),
                                    a.product(ai, f.value_basis(j, k)));
                add_scaled_in_place(out, Rat(-s12 * koszul_sign(p2, pf)),
                                    a.product(aj, f.value_basis(i, k)));
                add_scaled_in_place(out, Rat(s12),
                                    a.product(f.value_basis(j, i), ak));
                add_scaled_in_place(out, Rat(-s23),
                                    f.apply(a.product_basis(i, k), aj));
                add_scaled_in_place(out, Rat(-s23),
                                    a.product(f.value_basis(i, k), aj));
                table.push_back(std::move(out));
            }
    return Cochain(f.algebra(), 3, pf, std::move(table));
}

Cochain delta2(const Cochain& f) {
    if (f.arity() != 2)
        throw InputError("delta2 expects an arity-2 cochain");
    if (!is_hom_cochain(f).ok()) throw_not_hom_cochain("delta2");
    return delta2_unchecked(f);
}

Cochain circle_alpha(const Cochain& f, const Cochain& g) {
    if (f.arity() != 2 || g.arity() != 2)
        throw InputError("circle_alpha expects arity-2 cochains");
    if (f.algebra().get() != g.algebra().get())
        throw InputError("circle_alpha: cochains are defined over different "
                         "algebra objects");
    if (!is_hom_cochain(f).ok() || !is_hom_cochain(g).ok())
        throw_not_hom_cochain("circle_alpha");
    const SuperAlgebra& a = *f.algebra();
    std::size_t n = a.dim();
    std::vector<Vec> table;
    table.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                int s12 = koszul_sign(a.parity(i), a.parity(j));
                int s23 = koszul_sign(a.parity(j), a.parity(k));
                Vec ai = a.alpha().column(i);
                Vec aj = a.alpha().column(j);
                Vec ak = a.alpha().column(k);
                Vec out = f.apply(ai, g.value_basis(j, k));
                add_scaled_in_place(out, Rat(-s12),
                                    f.apply(aj, g.value_basis(i, k)));
                add_scaled_in_place(out, Rat(s12),
                                    f.apply(g.value_basis(j, i), ak));
                add_scaled_in_place(out, Rat(-s23),
                                    f.apply(g.value_basis(i, k), aj));
                table.push_back(std::move(out));
            }
    return Cochain(f.algebra(), 3,
                   parity_add(f.parity(), g.parity()), std::move(table));
}

std::vector<Cochain> cochain_basis(const AlgebraPtr& a, std::size_t arity,
                                   Parity parity) {
    if (!a) throw InputError("cochain requires an algebra");
    if (arity < 1 || arity > 2)
        throw InputError("cochain_basis supports arity 1 and 2 only");
    if (parity != 0 && parity != 1)
        throw InputError("cochain parity must be 0 or 1");
    const GradedSpace& space = a->space();
    std::size_t n = a->dim();
    std::size_t tuples = pow_dim(n, arity);

    // Free coordinates: slots (tuple, k) allowed by parity-homogeneity,
    // in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t flat = 0; flat < tuples; ++flat) {
        auto tuple = decode(flat, n, arity);
        Parity expected = parity;
        for (std::size_t m = 0; m < arity; ++m)
            expected = parity_add(expected, space.parity(tuple[m]));
        for (std::size_t k = 0; k < n; ++k)
            if (space.parity(k) == expected) slots.emplace_back(flat, k);
    }

    // Compatibility constraints: alpha(f(T)) - f(alpha x alpha ...)(T) = 0,
    // one row per (tuple, output index).
    const Matrix& al = a->alpha();
    Matrix constraints(tuples * n, slots.size());
    for (std::size_t flat = 0; flat < tuples; ++flat) {
        auto tuple = decode(flat, n, arity);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t row = flat * n + k;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                auto [sflat, sk] = slots[s];
                Rat coeff(0);
                if (sflat == flat) coeff += al.at(k, sk);
                if (sk == k) {
                    auto stuple = decode(sflat, n, arity);
                    Rat prod(1);
                    for (std::size_t m = 0; m < arity; ++m)
                        prod *= al.at(stuple[m], tuple[m]);
                    coeff -= prod;
                }
                constraints.at(row, s) = coeff;
            }
        }
    }

    std::vector<Cochain> basis;
    for (const Vec& sol : kernel_basis(constraints)) {
        std::vector<Vec> table(tuples, zero_vec(n));
        for (std::size_t s = 0; s < slots.size(); ++s)
            table[slots[s].first][slots[s].second] = sol[s];
        basis.emplace_back(a, arity, parity, std::move(table));
    }
    return basis;
}

CohomologyReport h2(const AlgebraPtr& a, Parity parity) {
    if (!a) throw InputError("cochain requires an algebra");
    if (auto r = is_hom_novikov(*a); !r.ok()) {
        std::ostringstream msg;
        msg << "h2: precondition is_hom_novikov failed (identity "
            << r.violation->identity << " is violated)";
        throw PreconditionError("is_hom_novikov", msg.str());
    }
    CohomologyReport report;
    report.parity = parity;

    auto c2 = cochain_basis(a, 2, parity);
    report.dim_cochains = c2.size();
    std::vector<Cochain> d2_images;
    for (const Cochain& f : c2) d2_images.push_back(delta2(f));
    report.dim_cocycles = c2.size() - rank(coboundary_matrix(d2_images));

    auto c1 = cochain_basis(a, 1, parity);
    std::vector<Cochain> d1_images;
    for (const Cochain& f : c1) d1_images.push_back(delta1(f));
    report.dim_coboundaries = rank(coboundary_matrix(d1_images));

    report.dim_h2 = report.dim_cocycles - report.dim_coboundaries;
    return report;
}

std::size_t z1_dim(const AlgebraPtr& a, Parity parity) {
    auto c1 = cochain_basis(a, 1, parity);
    std::vector<Cochain> images;
    for (const Cochain& f : c1) images.push_back(delta1(f));
    return c1.size() - rank(coboundary_matrix(images));
}

} // namespace homnov
