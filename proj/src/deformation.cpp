#include "homnov/deformation.hpp"

#include <sstream>
#include <stdexcept>

#include "homnov/errors.hpp"
#include "homnov/linalg.hpp"

namespace homnov {

namespace {

void validate_series_entry(const AlgebraPtr& base, const Cochain& c,
                           std::size_t arity, std::size_t index,
                           const char* what) {
    if (c.algebra().get() != base.get()) {
        std::ostringstream msg;
        msg << what << " " << index
            << " is defined over a different algebra object than the base";
        throw InputError(msg.str());
    }
    if (c.arity() != arity) {
        std::ostringstream msg;
        msg << what << " " << index << " must have arity " << arity;
        throw InputError(msg.str());
    }
    if (c.parity() != 0) {
        std::ostringstream msg;
        msg << what << " " << index << " must be even";
        throw InputError(msg.str());
    }
    if (auto r = is_hom_cochain(c); !r.ok()) {
        std::ostringstream msg;
        msg << what << " " << index
            << ": precondition is_hom_cochain failed (the entry does not "
            << "commute with the twisting map)";
        throw PreconditionError("is_hom_cochain", msg.str());
    }
}

// G_j evaluated on coordinate vectors; j = 0 denotes the base product.
Vec eval_term(const SuperAlgebra& a, const std::vector<Cochain>& terms,
              std::size_t j, const Vec& u, const Vec& v) {
    return j == 0 ? a.product(u, v) : terms[j - 1].apply(u, v);
}

const Vec& term_basis(const SuperAlgebra& a, const std::vector<Cochain>& terms,
                      std::size_t j, std::size_t p, std::size_t q) {
    return j == 0 ? a.product_basis(p, q) : terms[j - 1].value_basis(p, q);
}

std::optional<DeformationViolation>
scan_left_symmetry(const SuperAlgebra& a, const std::vector<Cochain>& terms,
                   std::size_t n) {
    std::size_t dim = a.dim();
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q)
            for (std::size_t r = 0; r < dim; ++r) {
                int s12 = koszul_sign(a.parity(p), a.parity(q));
                Vec ax = a.alpha().column(p);
                Vec ay = a.alpha().column(q);
                Vec az = a.alpha().column(r);
                Vec total = zero_vec(dim);
                for (std::size_t i = 0; i <= n; ++i) {
                    std::size_t j = n - i;
                    add_in_place(total,
                                 eval_term(a, terms, i, ax,
                                           term_basis(a, terms, j, q, r)));
                    sub_in_place(total,
                                 eval_term(a, terms, i,
                                           term_basis(a, terms, j, p, q), az));
                    add_scaled_in_place(
                        total, Rat(-s12),
                        eval_term(a, terms, i, ay,
                                  term_basis(a, terms, j, p, r)));
                    add_scaled_in_place(
                        total, Rat(s12),
                        eval_term(a, terms, i,
                                  term_basis(a, terms, j, q, p), az));
                }
                if (!is_zero(total))
                    return DeformationViolation{n, "left-symmetry",
                                                {p, q, r}, std::move(total)};
            }
    return std::nullopt;
}

std::optional<DeformationViolation>
scan_novikov(const SuperAlgebra& a, const std::vector<Cochain>& terms,
             std::size_t n) {
    std::size_t dim = a.dim();
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q)
            for (std::size_t r = 0; r < dim; ++r) {
                int s23 = koszul_sign(a.parity(q), a.parity(r));
                Vec ay = a.alpha().column(q);
                Vec az = a.alpha().column(r);
                Vec total = zero_vec(dim);
                for (std::size_t i = 0; i <= n; ++i) {
                    std::size_t j = n - i;
                    add_in_place(total,
                                 eval_term(a, terms, i,
                                           term_basis(a, terms, j, p, q), az));
                    add_scaled_in_place(
                        total, Rat(-s23),
                        eval_term(a, terms, i,
                                  term_basis(a, terms, j, p, r), ay));
                }
                if (!is_zero(total))
                    return DeformationViolation{n, "novikov-identity",
                                                {p, q, r}, std::move(total)};
            }
    return std::nullopt;
}

std::optional<DeformationViolation>
scan_order(const SuperAlgebra& a, const std::vector<Cochain>& terms,
           std::size_t n) {
    if (auto v = scan_left_symmetry(a, terms, n)) return v;
    return scan_novikov(a, terms, n);
}

Matrix cochain1_matrix(const Cochain& f) {
    return Matrix::from_columns(f.table());
}

Cochain matrix_cochain1(const AlgebraPtr& a, const Matrix& m) {
    std::vector<Vec> table;
    for (std::size_t j = 0; j < m.cols(); ++j) table.push_back(m.column(j));
    return Cochain(a, 1, 0, std::move(table));
}

// psi_0..psi_N of the inverse series, from phi_t o psi_t = id.
std::vector<Matrix> inverse_series(const EquivalenceTransform& phi) {
    std::size_t dim = phi.base()->dim();
    std::vector<Matrix> psi{Matrix::identity(dim)};
    for (std::size_t m = 1; m <= phi.order(); ++m) {
        Matrix acc(dim, dim);
        for (std::size_t r = 1; r <= m; ++r)
            acc = acc + cochain1_matrix(phi.map(r)) * psi[m - r];
        psi.push_back(acc.scaled(Rat(-1)));
    }
    return psi;
}

[[noreturn]] void throw_check_failed(const char* op,
                                     const DeformationViolation& v) {
    std::ostringstream msg;
    msg << op << ": precondition check_deformation failed (identity "
        << v.identity << " violated at order " << v.order
        << ", basis tuple (";
    for (std::size_t i = 0; i < v.tuple.size(); ++i) {
        if (i) msg << ", ";
        msg << v.tuple[i];
    }
    msg << "))";
    throw PreconditionError("check_deformation", msg.str());
}

// Index of the lowest nonzero term, or 0 when all terms vanish.
std::size_t lowest_nonzero(const TruncatedDeformation& d) {
    for (std::size_t n = 1; n <= d.order(); ++n)
        if (!d.term(n).is_zero()) return n;
    return 0;
}

} // namespace

TruncatedDeformation::TruncatedDeformation(AlgebraPtr base,
                                           std::vector<Cochain> terms)
    : base_(std::move(base)), terms_(std::move(terms)) {
    if (!base_) throw InputError("deformation requires a base algebra");
    if (terms_.empty())
        throw InputError("deformation order must be at least 1");
    for (std::size_t n = 0; n < terms_.size(); ++n)
        validate_series_entry(base_, terms_[n], 2, n + 1, "deformation term");
}

TruncatedDeformation
TruncatedDeformation::null_deformation(AlgebraPtr base, std::size_t order) {
    if (!base) throw InputError("deformation requires a base algebra");
    if (order == 0) throw InputError("deformation order must be at least 1");
    std::vector<Cochain> terms(order, Cochain::zero(base, 2, 0));
    return TruncatedDeformation(std::move(base), std::move(terms));
}

const Cochain& TruncatedDeformation::term(std::size_t n) const {
    if (n == 0 || n > terms_.size())
        throw InputError("deformation term index out of range");
    return terms_[n - 1];
}

bool TruncatedDeformation::is_null() const {
    for (const Cochain& t : terms_)
        if (!t.is_zero()) return false;
    return true;
}

bool TruncatedDeformation::operator==(const TruncatedDeformation& other) const {
    return base_.get() == other.base_.get() && terms_ == other.terms_;
}

EquivalenceTransform::EquivalenceTransform(AlgebraPtr base,
                                           std::vector<Cochain> maps)
    : base_(std::move(base)), maps_(std::move(maps)) {
    if (!base_) throw InputError("transform requires a base algebra");
    if (maps_.empty())
        throw InputError("transform order must be at least 1");
    for (std::size_t n = 0; n < maps_.size(); ++n)
        validate_series_entry(base_, maps_[n], 1, n + 1, "transform map");
}

EquivalenceTransform EquivalenceTransform::identity(AlgebraPtr base,
                                                    std::size_t order) {
    if (!base) throw InputError("transform requires a base algebra");
    if (order == 0) throw InputError("transform order must be at least 1");
    std::vector<Cochain> maps(order, Cochain::zero(base, 1, 0));
    return EquivalenceTransform(std::move(base), std::move(maps));
}

const Cochain& EquivalenceTransform::map(std::size_t n) const {
    if (n == 0 || n > maps_.size())
        throw InputError("transform map index out of range");
    return maps_[n - 1];
}

bool EquivalenceTransform::operator==(const EquivalenceTransform& other) const {
    return base_.get() == other.base_.get() && maps_ == other.maps_;
}

DeformationCheckResult check_deformation(const TruncatedDeformation& d) {
    const SuperAlgebra& a = *d.base();
    for (std::size_t n = 0; n <= d.order(); ++n)
        if (auto v = scan_order(a, d.terms(), n))
            return DeformationCheckResult{std::move(v)};
    return DeformationCheckResult::pass();
}

bool is_infinitesimal(const AlgebraPtr& base, const Cochain& g1) {
    if (!base) throw InputError("deformation requires a base algebra");
    if (g1.algebra().get() != base.get())
        throw InputError("candidate term is defined over a different algebra "
                         "object than the base");
    if (g1.arity() != 2)
        throw InputError("candidate term must have arity 2");
    if (g1.parity() != 0)
        throw InputError("candidate term must be even");

    std::vector<Cochain> terms{g1};
    bool nv_clean = !scan_novikov(*base, terms, 1).has_value();
    bool direct = nv_clean && !scan_left_symmetry(*base, terms, 1).has_value();
    bool via_cocycle = nv_clean && delta2_unchecked(g1).is_zero();
    if (direct != via_cocycle)
        throw std::logic_error("order-1 deformation equations disagree with "
                               "the cocycle formulation");
    return direct;
}

bool is_two_cocycle(const AlgebraPtr& base, const Cochain& g1) {
    if (!base) throw InputError("deformation requires a base algebra");
    if (g1.algebra().get() != base.get())
        throw InputError("candidate term is defined over a different algebra "
                         "object than the base");
    if (g1.arity() != 2)
        throw InputError("candidate term must have arity 2");
    return delta2_unchecked(g1).is_zero();
}

TruncatedDeformation apply_equivalence(const TruncatedDeformation& d,
                                       const EquivalenceTransform& phi) {
    if (d.base().get() != phi.base().get() || d.order() != phi.order()) {
        throw PreconditionError(
            "matching_base_and_order",
            "apply_equivalence: precondition matching_base_and_order failed "
            "(the deformation and the transform must share their base "
            "algebra object and truncation order)");
    }
    const SuperAlgebra& a = *d.base();
    std::size_t dim = a.dim();
    std::size_t order = d.order();

    std::vector<Matrix> psi = inverse_series(phi);
    std::vector<Matrix> fwd{Matrix::identity(dim)};
    for (std::size_t m = 1; m <= order; ++m)
        fwd.push_back(cochain1_matrix(phi.map(m)));

    std::vector<Cochain> out;
    for (std::size_t m = 1; m <= order; ++m) {
        std::vector<Vec> table;
        table.reserve(dim * dim);
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = 0; q < dim; ++q) {
                Vec value = zero_vec(dim);
                for (std::size_t k = 0; k <= m; ++k)
                    for (std::size_t l = 0; k + l <= m; ++l) {
                        Vec u = psi[k].column(p);
                        Vec v = psi[l].column(q);
                        for (std::size_t j = 0; k + l + j <= m; ++j) {
                            std::size_t i = m - k - l - j;
                            Vec w = eval_term(a, d.terms(), j, u, v);
                            add_in_place(value, fwd[i].apply(w));
                        }
                    }
                table.push_back(std::move(value));
            }
        out.emplace_back(d.base(), 2, 0, std::move(table));
    }
    return TruncatedDeformation(d.base(), std::move(out));
}

EquivalenceTransform inverse_transform(const EquivalenceTransform& phi) {
    std::vector<Matrix> psi = inverse_series(phi);
    std::vector<Cochain> maps;
    for (std::size_t m = 1; m <= phi.order(); ++m)
        maps.push_back(matrix_cochain1(phi.base(), psi[m]));
    return EquivalenceTransform(phi.base(), std::move(maps));
}

std::optional<TruncatedDeformation>
trivialize_step(const TruncatedDeformation& d) {
    if (auto r = check_deformation(d); !r.ok())
        throw_check_failed("trivialize_step", *r.violation);

    std::size_t n = lowest_nonzero(d);
    if (n == 0) return d;

    // Solve delta1(f) = G_n in the span of the even 1-cochains that
    // commute with the twisting map; the canonical pivot solution keeps
    // the reduction deterministic.
    std::vector<Cochain> basis = cochain_basis(d.base(), 1, 0);
    std::vector<std::vector<Rat>> columns;
    for (const Cochain& b : basis) {
        Cochain image = delta1(b);
        std::vector<Rat> col;
        for (const Vec& v : image.table())
            col.insert(col.end(), v.begin(), v.end());
        columns.push_back(std::move(col));
    }
    std::vector<Rat> rhs;
    for (const Vec& v : d.term(n).table())
        rhs.insert(rhs.end(), v.begin(), v.end());

    Matrix system = columns.empty() ? Matrix(rhs.size(), 0)
                                    : Matrix::from_columns(columns);
    auto sol = solve(system, rhs);
    if (!sol) return std::nullopt;

    Cochain f = Cochain::zero(d.base(), 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        f = add(f, scale((*sol)[i], basis[i]));

    std::vector<Cochain> maps(d.order(), Cochain::zero(d.base(), 1, 0));
    maps[n - 1] = f;
    return apply_equivalence(d, EquivalenceTransform(d.base(),
                                                     std::move(maps)));
}

std::pair<TruncatedDeformation, bool>
rigidity_reduce(const TruncatedDeformation& d) {
    if (auto r = check_deformation(d); !r.ok())
        throw_check_failed("rigidity_reduce", *r.violation);

    TruncatedDeformation current = d;
    for (std::size_t guard = 0; guard <= d.order(); ++guard) {
        if (current.is_null()) return {current, true};
        auto step = trivialize_step(current);
        if (!step) return {current, false};
        current = *step;
    }
    throw std::logic_error("rigidity reduction failed to make progress");
}

Cochain cohomology_class_delta(const TruncatedDeformation& d,
                               const TruncatedDeformation& dprime,
                               const EquivalenceTransform& phi) {
    if (!(apply_equivalence(d, phi) == dprime))
        throw InputError("cohomology_class_delta: the transform does not "
                         "carry the first deformation to the second");
    Cochain delta = sub(d.term(1), dprime.term(1));
    if (!(delta == delta1(phi.map(1))))
        throw std::logic_error("first-order difference of equivalent "
                               "deformations is not the expected coboundary");
    return delta;
}

TruncatedDeformation retruncate(const TruncatedDeformation& d,
                                std::size_t order) {
    if (order == 0) throw InputError("deformation order must be at least 1");
    std::vector<Cochain> terms;
    for (std::size_t n = 1; n <= order; ++n)
        terms.push_back(n <= d.order() ? d.term(n)
                                       : Cochain::zero(d.base(), 2, 0));
    return TruncatedDeformation(d.base(), std::move(terms));
}

} // namespace homnov
