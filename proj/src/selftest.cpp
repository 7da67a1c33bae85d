#include "homnov/selftest.hpp"

#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homnov/cohomology.hpp"
#include "homnov/constructions.hpp"
#include "homnov/deformation.hpp"
#include "homnov/families.hpp"
#include "homnov/io.hpp"
#include "homnov/linalg.hpp"
#include "homnov/superalgebra.hpp"

namespace homnov {

namespace {

namespace fam = homnov::families;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw Failure(what);
}

Cochain product_over(const AlgebraPtr& base, const SuperAlgebra& donor) {
    std::size_t n = donor.dim();
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.push_back(donor.product_basis(i, j));
    return Cochain(base, 2, 0, std::move(table));
}

void check_generated_algebras(fam::Rng& rng) {
    for (int t = 0; t < 12; ++t) {
        AlgebraPtr a = fam::random_hom_novikov(rng);
        require(a->dim() <= 4 && fam::entries_within(*a, 5),
                "sample exceeds the size bounds");
        require(is_hom_novikov(*a).ok(), "sample fails the product axioms");
    }
}

void check_coboundary_composite(fam::Rng& rng) {
    for (int t = 0; t < 6; ++t) {
        AlgebraPtr a = fam::random_hom_novikov(rng);
        for (Parity parity : {0, 1}) {
            Cochain f = fam::random_hom_cochain1(rng, a, parity);
            require(delta2(delta1(f)).is_zero(),
                    "delta2(delta1(f)) is nonzero");
        }
    }
}

void check_constructions(fam::Rng& rng) {
    for (int t = 0; t < 8; ++t) {
        AlgebraPtr a = fam::random_hom_novikov(rng);
        require(is_hom_lie(*sub_adjacent_hom_lie(*a)).ok(),
                "commutator bracket fails the bracket axioms");
        require(is_hom_novikov(*yau_square_twist(*a)).ok(),
                "square twist fails the product axioms");
        fam::DerivationInput di = fam::random_derivation_input(rng);
        require(is_hom_novikov(*derivation_product(*di.algebra, di.map)).ok(),
                "derivation product fails the product axioms");
        require(is_hom_novikov(*xi_family(*di.algebra, di.map,
                                          fam::small_rational(rng, 3, 3)))
                    .ok(),
                "one-parameter family fails the product axioms");
        fam::DerivationInput ti = fam::random_twisted_derivation_input(rng);
        require(is_hom_novikov(
                    *twisted_derivation_product(*ti.algebra, ti.map))
                    .ok(),
                "twisted derivation product fails the product axioms");
        fam::RotaBaxterInput ri = fam::random_rota_baxter_input(rng);
        require(is_hom_novikov(
                    *rota_baxter_product(*ri.algebra, ri.op, ri.weight))
                    .ok(),
                "averaged-operator product fails the product axioms");
        AlgebraPtr inv = fam::random_involutive_hom_novikov(rng);
        require(is_hom_novikov(*involutive_untwist(*inv)).ok(),
                "untwisted algebra fails the untwisted product axioms");
    }
}

void check_quadratic(fam::Rng& rng) {
    for (int t = 0; t < 6; ++t) {
        fam::QuadraticInput in = fam::random_quadratic_input(rng);
        const AlgebraPtr& a = in.algebra;
        require(is_hom_novikov(*a).ok(),
                "quadratic sample fails the product axioms");
        require(form_is_even(in.form).ok() &&
                    form_is_supersymmetric(in.form).ok() &&
                    form_is_nondegenerate(in.form).ok() &&
                    form_is_novikov_invariant(*a, in.form).ok() &&
                    form_alpha_symmetric(*a, in.form).ok(),
                "quadratic sample form fails a form predicate");
        require(is_hom_associative(*a).ok(),
                "twisted associator does not vanish");
        AlgebraPtr hlie = sub_adjacent_hom_lie(*a);
        Subspace z = center(*a);
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t j = 0; j < a->dim(); ++j)
                require(z.contains(hlie->product_basis(i, j)),
                        "a bracket value is not central");
        require(is_two_step_nilpotent(*hlie),
                "the bracket algebra is not nilpotent of step <= 2");
        BilinearForm twisted =
            form_twist(in.form, EvenMap(a->space(), a->alpha()), 1);
        require(form_is_even(twisted).ok() &&
                    form_is_supersymmetric(twisted).ok() &&
                    form_is_nondegenerate(twisted).ok() &&
                    form_is_lie_invariant(*hlie, twisted).ok() &&
                    form_alpha_symmetric(*hlie, twisted).ok(),
                "induced bracket form fails a form predicate");
    }
}

void check_deformations(fam::Rng& rng) {
    for (int t = 0; t < 8; ++t) {
        std::size_t order =
            static_cast<std::size_t>(fam::pick_int(rng, 1, 4));
        TruncatedDeformation d = fam::random_deformation(rng, order);
        require(check_deformation(d).ok(),
                "sampled deformation fails the order-by-order equations");
        require(is_two_cocycle(d.base(), d.term(1)),
                "first-order term is not a two-cocycle");
        for (std::size_t n = 1; n <= d.order(); ++n) {
            Cochain rhs = Cochain::zero(d.base(), 3, 0);
            for (std::size_t i = 1; i + 1 <= n; ++i)
                rhs = add(rhs, circle_alpha(d.term(i), d.term(n - i)));
            require(scale(Rat(-1), delta2(d.term(n))) == rhs,
                    "order-n residual does not match the pairing sum");
        }
    }
}

void check_equivalence(fam::Rng& rng) {
    for (int t = 0; t < 8; ++t) {
        std::size_t order =
            static_cast<std::size_t>(fam::pick_int(rng, 1, 4));
        TruncatedDeformation d = fam::random_deformation(rng, order);
        EquivalenceTransform phi =
            fam::random_transform(rng, d.base(), d.order());
        TruncatedDeformation e = apply_equivalence(d, phi);
        require(check_deformation(e).ok(),
                "transformed deformation fails the order-by-order "
                "equations");
        require(sub(d.term(1), e.term(1)) == delta1(phi.map(1)),
                "first-order difference is not the expected coboundary");
        TruncatedDeformation back =
            apply_equivalence(e, inverse_transform(phi));
        require(back == d, "inverse transform does not round-trip");
    }
}

void check_round_trip(fam::Rng& rng) {
    for (int t = 0; t < 14; ++t) {
        AlgebraDocument doc = fam::random_algebra_document(rng);
        AlgebraDocument back =
            parse_algebra_document(emit_algebra_document(doc));
        require(*doc.algebra == *back.algebra &&
                    doc.form.has_value() == back.form.has_value() &&
                    doc.maps.size() == back.maps.size() &&
                    doc.weight == back.weight && doc.xi == back.xi,
                "algebra document round-trip mismatch");
    }
    for (int t = 0; t < 6; ++t) {
        DeformationDocument doc = fam::random_deformation_document(rng);
        DeformationDocument back =
            parse_deformation_document(emit_deformation_document(doc));
        require(doc.order == back.order &&
                    doc.terms.size() == back.terms.size(),
                "deformation document round-trip mismatch");
        for (std::size_t u = 0; u < doc.terms.size(); ++u)
            require(doc.terms[u].size() == back.terms[u].size(),
                    "deformation document round-trip mismatch");
    }
}

} // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
    struct Group {
        const char* label;
        std::function<void(fam::Rng&)> run;
    };
    const std::vector<Group> groups = {
        {"generated algebras satisfy the product axioms",
         check_generated_algebras},
        {"composite of the coboundary maps vanishes",
         check_coboundary_composite},
        {"construction outputs satisfy their axiom sets",
         check_constructions},
        {"invariant-form samples: associator, central brackets, induced "
         "form",
         check_quadratic},
        {"deformations satisfy the order-by-order equations",
         check_deformations},
        {"equivalence transforms: coboundary law and inverse round-trip",
         check_equivalence},
        {"documents round-trip through emit and parse", check_round_trip},
    };

    fam::Rng rng(seed);
    int failures = 0;
    for (const Group& g : groups) {
        std::string error;
        try {
            g.run(rng);
        } catch (const std::exception& e) {
            error = e.what();
        }
        out << (error.empty() ? "ok  " : "FAIL") << "  " << g.label;
        if (!error.empty()) out << "  -- " << error;
        out << "\n";
        if (!error.empty()) ++failures;
    }
    if (failures == 0) {
        out << "selftest: all " << groups.size()
            << " property groups passed (seed " << seed << ")\n";
        return 0;
    }
    out << "selftest: " << failures << " of " << groups.size()
        << " property groups FAILED (seed " << seed << ")\n";
    return 1;
}

} // namespace homnov
