#include "doctest.h"

#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fixtures.hpp"
#include "homnov/cohomology.hpp"
#include "homnov/constructions.hpp"
#include "homnov/deformation.hpp"
#include "homnov/errors.hpp"

using namespace homnov;

namespace {

Cochain cochain1(const AlgebraPtr& a, Parity parity,
                 const std::vector<std::tuple<std::size_t, std::size_t, Rat>>&
                     entries) {
    std::size_t n = a->dim();
    std::vector<Vec> table(n, zero_vec(n));
    for (const auto& [i, k, c] : entries) table[i][k] = c;
    return Cochain(a, 1, parity, std::move(table));
}

Cochain cochain2(
    const AlgebraPtr& a, Parity parity,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>&
        entries) {
    std::size_t n = a->dim();
    std::vector<Vec> table(n * n, zero_vec(n));
    for (const auto& [i, j, k, c] : entries) table[i * n + j][k] = c;
    return Cochain(a, 2, parity, std::move(table));
}

// Zero product on two even generators with a non-diagonal twisting map.
AlgebraPtr shear_zero() {
    GradedSpace space({0, 0});
    MulTensor mul(2, std::vector<Vec>(2, zero_vec(2)));
    return make_algebra(space, mul,
                        Matrix::from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}));
}

// x*y = x D(y) over the two-dimensional unital base: only e0*e1 = e1.
AlgebraPtr deriv_e1() {
    return derivation_product(*fixtures::e1(), fixtures::e1_derivation());
}

// The unital base's own structure constants, re-read as a cochain over a.
Cochain unital_product_over(const AlgebraPtr& a) {
    return cochain2(a, 0,
                    {{0, 0, 0, Rat(1)}, {0, 1, 1, Rat(1)}, {1, 0, 1, Rat(1)}});
}

} // namespace

TEST_CASE("deformation construction validates its terms") {
    auto a = fixtures::e1();

    CHECK_THROWS_AS(TruncatedDeformation(a, {}), InputError);
    CHECK_THROWS_AS(TruncatedDeformation(nullptr, {}), InputError);

    // Arity and parity of every term are pinned.
    CHECK_THROWS_AS(TruncatedDeformation(
                        a, {cochain1(a, 0, {{0, 0, Rat(1)}})}),
                    InputError);
    CHECK_THROWS_AS(TruncatedDeformation(
                        a, {cochain2(a, 1, {{0, 0, 1, Rat(1)}})}),
                    InputError);

    // Terms must live over the same algebra object as the base.
    auto b = fixtures::e1();
    CHECK_THROWS_AS(TruncatedDeformation(
                        a, {cochain2(b, 0, {{0, 0, 0, Rat(1)}})}),
                    InputError);

    // Terms must commute with the twisting map.
    auto sz = shear_zero();
    try {
        TruncatedDeformation d(sz, {cochain2(sz, 0, {{0, 0, 0, Rat(1)}})});
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.predicate() == "is_hom_cochain");
        CHECK(std::string(e.what()).find("is_hom_cochain") !=
              std::string::npos);
    }

    TruncatedDeformation ok(a, {product_cochain(a)});
    CHECK(ok.order() == 1);
    CHECK(ok.base().get() == a.get());
    CHECK_FALSE(ok.is_null());
    CHECK(ok.term(1) == product_cochain(a));
    CHECK_THROWS_AS(ok.term(0), InputError);
    CHECK_THROWS_AS(ok.term(2), InputError);
}

TEST_CASE("equivalence transform construction validates its maps") {
    auto a = fixtures::e1();

    CHECK_THROWS_AS(EquivalenceTransform(a, {}), InputError);
    CHECK_THROWS_AS(EquivalenceTransform(
                        a, {cochain2(a, 0, {{0, 0, 0, Rat(1)}})}),
                    InputError);
    CHECK_THROWS_AS(EquivalenceTransform(
                        a, {cochain1(a, 1, {{0, 1, Rat(1)}})}),
                    InputError);
    auto b = fixtures::e1();
    CHECK_THROWS_AS(EquivalenceTransform(
                        a, {cochain1(b, 0, {{0, 0, Rat(1)}})}),
                    InputError);

    // Maps must commute with the twisting map.
    auto sz = shear_zero();
    try {
        EquivalenceTransform phi(sz, {cochain1(sz, 0, {{0, 0, Rat(1)}})});
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.predicate() == "is_hom_cochain");
    }
    // A polynomial in the twisting map does commute with it.
    EquivalenceTransform ok(sz, {cochain1(sz, 0, {{1, 0, Rat(1)}})});
    CHECK(ok.order() == 1);

    EquivalenceTransform id2 = EquivalenceTransform::identity(a, 2);
    CHECK(id2.order() == 2);
    CHECK(id2.map(1).is_zero());
    CHECK(id2.map(2).is_zero());
}

TEST_CASE("null deformations pass at every order") {
    auto a = fixtures::e1();
    auto d = TruncatedDeformation::null_deformation(a, 4);
    CHECK(d.order() == 4);
    CHECK(d.is_null());
    CHECK(check_deformation(d).ok());
    CHECK_THROWS_AS(TruncatedDeformation::null_deformation(a, 0), InputError);
}

TEST_CASE("a base failing its own axioms is caught at order zero") {
    auto flip = make_algebra(GradedSpace({0, 1}),
                             fixtures::e1()->mul(), fixtures::e1_sign_flip());
    auto d = TruncatedDeformation::null_deformation(flip, 2);
    auto result = check_deformation(d);
    REQUIRE_FALSE(result.ok());
    CHECK(result.violation->order == 0);
    CHECK(result.violation->identity == "left-symmetry");
    CHECK(result.violation->tuple == std::vector<std::size_t>{0, 1, 0});
    CHECK(result.violation->residual == Vec{Rat(0), Rat(2)});
}

TEST_CASE("adding the untwisted product deforms the derivation product") {
    auto base = deriv_e1();
    Cochain g1 = unital_product_over(base);

    TruncatedDeformation d1(base, {g1});
    CHECK(check_deformation(d1).ok());

    // The same family stays a solution at higher truncation orders.
    auto d3 = retruncate(d1, 3);
    CHECK(d3.order() == 3);
    CHECK(d3.term(2).is_zero());
    CHECK(check_deformation(d3).ok());
}

TEST_CASE("one-dimensional bases accept arbitrary coefficient sequences") {
    auto a = fixtures::dim1(Rat(1));
    auto e = [&](const Rat& c) {
        return cochain2(a, 0, {{0, 0, 0, c}});
    };
    CHECK(check_deformation(TruncatedDeformation(a, {e(Rat(1))})).ok());
    CHECK(check_deformation(
              TruncatedDeformation(a, {e(Rat(2)), e(Rat(-7, 3))}))
              .ok());
}

TEST_CASE("order-two obstructions are reported with order and triple") {
    SUBCASE("left-symmetry obstruction") {
        auto z = fixtures::zero_algebra({0, 0});
        Cochain g1 = cochain2(z, 0, {{0, 0, 1, Rat(1)}, {1, 1, 0, Rat(1)}});
        TruncatedDeformation d1(z, {g1});
        CHECK(check_deformation(d1).ok());
        CHECK(is_infinitesimal(z, g1));

        auto d2 = retruncate(d1, 2);
        auto result = check_deformation(d2);
        REQUIRE_FALSE(result.ok());
        CHECK(result.violation->order == 2);
        CHECK(result.violation->identity == "left-symmetry");
        CHECK(result.violation->tuple == std::vector<std::size_t>{0, 1, 0});
        CHECK(result.violation->residual == Vec{Rat(-1), Rat(0)});
    }
    SUBCASE("novikov obstruction after a clean left-symmetry scan") {
        // An associative product whose right multiplications do not
        // commute: left-symmetry holds at every order, the Novikov
        // combination fails first at order two.
        auto z = fixtures::zero_algebra({0, 1});
        Cochain g1 = cochain2(z, 0, {{0, 0, 0, Rat(1)}, {0, 1, 1, Rat(1)}});
        TruncatedDeformation d1(z, {g1});
        CHECK(check_deformation(d1).ok());
        CHECK(is_infinitesimal(z, g1));
        CHECK(is_two_cocycle(z, g1));

        auto d2 = retruncate(d1, 2);
        auto result = check_deformation(d2);
        REQUIRE_FALSE(result.ok());
        CHECK(result.violation->order == 2);
        CHECK(result.violation->identity == "novikov-identity");
        CHECK(result.violation->tuple == std::vector<std::size_t>{0, 0, 1});
        CHECK(result.violation->residual == Vec{Rat(0), Rat(1)});
    }
}

TEST_CASE("infinitesimal deformations") {
    auto base = deriv_e1();
    CHECK(is_infinitesimal(base, Cochain::zero(base, 2, 0)));
    CHECK(is_infinitesimal(base, unital_product_over(base)));

    // Order-one equations can fail even when the base is ignored: the
    // unital product re-used as its own first-order term over a sign
    // flip violates the order-one Novikov combination.
    auto flip = make_algebra(GradedSpace({0, 1}),
                             fixtures::e1()->mul(), fixtures::e1_sign_flip());
    CHECK_FALSE(is_infinitesimal(flip, product_cochain(flip)));

    CHECK_THROWS_AS(is_infinitesimal(base, cochain1(base, 0, {})), InputError);
    CHECK_THROWS_AS(is_infinitesimal(base, cochain2(base, 1, {})), InputError);
    auto other = fixtures::e1();
    CHECK_THROWS_AS(is_infinitesimal(base, cochain2(other, 0, {})),
                    InputError);
}

TEST_CASE("two-cocycle detection") {
    auto tw = twisted_derivation_product(
        *fixtures::e1(fixtures::e1_sign_flip()), fixtures::e1_derivation());
    for (Parity p : {0, 1})
        for (const Cochain& f : cochain_basis(tw, 1, p))
            CHECK(is_two_cocycle(tw, delta1(f)));
    CHECK(is_two_cocycle(tw, Cochain::zero(tw, 2, 0)));

    // Every bilinear map is a cocycle over a zero product.
    auto z = fixtures::zero_algebra({0, 1});
    CHECK(is_two_cocycle(z, cochain2(z, 0, {{0, 0, 0, Rat(5)},
                                            {1, 1, 0, Rat(-2)}})));

    // ...but not over a unital base.
    auto a = fixtures::e1();
    CHECK_FALSE(is_two_cocycle(a, cochain2(a, 0, {{1, 1, 0, Rat(1)}})));

    CHECK_THROWS_AS(is_two_cocycle(a, cochain1(a, 0, {})), InputError);
    auto b = fixtures::e1();
    CHECK_THROWS_AS(is_two_cocycle(a, cochain2(b, 0, {})), InputError);
}

TEST_CASE("equivalence transforms rewrite the terms order by order") {
    auto a = fixtures::e1();

    SUBCASE("identity transform changes nothing") {
        TruncatedDeformation d(a, {product_cochain(a)});
        auto out = apply_equivalence(d, EquivalenceTransform::identity(a, 1));
        CHECK(out == d);
    }
    SUBCASE("base and order must match") {
        TruncatedDeformation d(a, {product_cochain(a)});
        auto b = fixtures::e1();
        try {
            apply_equivalence(d, EquivalenceTransform::identity(b, 1));
            FAIL("expected a precondition failure");
        } catch (const PreconditionError& e) {
            CHECK(e.predicate() == "matching_base_and_order");
        }
        CHECK_THROWS_AS(
            apply_equivalence(d, EquivalenceTransform::identity(a, 2)),
            PreconditionError);
    }
    SUBCASE("first-order law: the new term differs by a coboundary") {
        TruncatedDeformation d(a, {product_cochain(a)});
        Cochain f = cochain1(a, 0, {{0, 0, Rat(2)}, {1, 1, Rat(5)}});
        EquivalenceTransform phi(a, {f});
        auto out = apply_equivalence(d, phi);
        CHECK(out.term(1) == sub(product_cochain(a), delta1(f)));
        CHECK(out.term(1) ==
              cochain2(a, 0, {{0, 0, 0, Rat(-1)},
                              {0, 1, 1, Rat(-1)},
                              {1, 0, 1, Rat(-1)}}));
    }
    SUBCASE("second-order terms mix the maps and the base product") {
        auto d0 = TruncatedDeformation::null_deformation(a, 2);
        Cochain f = cochain1(a, 0, {{0, 0, Rat(2)}, {1, 1, Rat(5)}});
        EquivalenceTransform phi(a, {f, Cochain::zero(a, 1, 0)});
        auto out = apply_equivalence(d0, phi);
        CHECK(out.term(1) == scale(Rat(-1), delta1(f)));
        CHECK(out.term(2) == cochain2(a, 0, {{0, 0, 0, Rat(4)},
                                             {0, 1, 1, Rat(4)},
                                             {1, 0, 1, Rat(4)}}));
        CHECK(check_deformation(out).ok());

        // The result is equivalent to the null deformation, so the
        // reduction trivializes it completely.
        auto [reduced, rigid] = rigidity_reduce(out);
        CHECK(rigid);
        CHECK(reduced.is_null());
    }
    SUBCASE("one-dimensional model matches the power-series product") {
        auto s = fixtures::dim1(Rat(1));
        auto e2 = [&](const Rat& c) {
            return cochain2(s, 0, {{0, 0, 0, c}});
        };
        auto e1m = [&](const Rat& c) {
            return cochain1(s, 0, {{0, 0, c}});
        };
        TruncatedDeformation d(s, {e2(Rat(2)), e2(Rat(3))});
        EquivalenceTransform phi(s, {e1m(Rat(1)), e1m(Rat(1))});
        auto out = apply_equivalence(d, phi);
        CHECK(out.term(1) == e2(Rat(1)));
        CHECK(out.term(2) == e2(Rat(1)));
    }
    SUBCASE("validity is preserved and inversion round-trips") {
        auto base = deriv_e1();
        auto d = retruncate(TruncatedDeformation(
                                base, {unital_product_over(base)}),
                            3);
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int round = 0; round < 5; ++round) {
            std::vector<Cochain> maps;
            for (int m = 0; m < 3; ++m) {
                std::vector<std::tuple<std::size_t, std::size_t, Rat>> ent;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t k = 0; k < 2; ++k)
                        if (base->parity(i) == base->parity(k))
                            ent.emplace_back(i, k, Rat(coef(rng)));
                maps.push_back(cochain1(base, 0, ent));
            }
            EquivalenceTransform phi(base, maps);
            auto out = apply_equivalence(d, phi);
            CHECK(check_deformation(out).ok());
            auto back = apply_equivalence(out, inverse_transform(phi));
            CHECK(back == d);
            CHECK(inverse_transform(inverse_transform(phi)) == phi);
        }
    }
}

TEST_CASE("reduction steps strip the lowest nonzero term when possible") {
    SUBCASE("null deformation is returned unchanged") {
        auto a = fixtures::e1();
        auto d = TruncatedDeformation::null_deformation(a, 2);
        auto step = trivialize_step(d);
        REQUIRE(step.has_value());
        CHECK(*step == d);
    }
    SUBCASE("a coboundary term is cleared") {
        auto s = fixtures::dim1(Rat(1));
        TruncatedDeformation d(s, {cochain2(s, 0, {{0, 0, 0, Rat(1)}})});
        auto step = trivialize_step(d);
        REQUIRE(step.has_value());
        CHECK(step->is_null());
    }
    SUBCASE("the lowest nonzero term may sit above order one") {
        auto s = fixtures::dim1(Rat(1));
        TruncatedDeformation d(
            s, {Cochain::zero(s, 2, 0), cochain2(s, 0, {{0, 0, 0, Rat(1)}})});
        auto step = trivialize_step(d);
        REQUIRE(step.has_value());
        CHECK(step->is_null());
    }
    SUBCASE("clearing order one can leave higher terms behind") {
        auto s = fixtures::dim1(Rat(1));
        auto e2 = [&](const Rat& c) {
            return cochain2(s, 0, {{0, 0, 0, c}});
        };
        TruncatedDeformation d(s, {e2(Rat(1)), e2(Rat(1))});
        auto step = trivialize_step(d);
        REQUIRE(step.has_value());
        CHECK(step->term(1).is_zero());
        CHECK(step->term(2) == e2(Rat(1)));
        auto again = trivialize_step(*step);
        REQUIRE(again.has_value());
        CHECK(again->is_null());
    }
    SUBCASE("no step exists when the term is not a coboundary") {
        auto z = fixtures::zero_algebra({0, 1});
        TruncatedDeformation d(z, {cochain2(z, 0, {{0, 0, 0, Rat(1)}})});
        CHECK(check_deformation(d).ok());
        CHECK_FALSE(trivialize_step(d).has_value());
    }
    SUBCASE("invalid deformations are rejected") {
        auto z = fixtures::zero_algebra({0, 1});
        Cochain g1 = cochain2(z, 0, {{0, 0, 0, Rat(1)}, {0, 1, 1, Rat(1)}});
        auto d = retruncate(TruncatedDeformation(z, {g1}), 2);
        try {
            trivialize_step(d);
            FAIL("expected a precondition failure");
        } catch (const PreconditionError& e) {
            CHECK(e.predicate() == "check_deformation");
        }
        CHECK_THROWS_AS(rigidity_reduce(d), PreconditionError);
    }
}

TEST_CASE("full reduction reports rigidity") {
    SUBCASE("null input") {
        auto a = fixtures::e1();
        auto [out, rigid] =
            rigidity_reduce(TruncatedDeformation::null_deformation(a, 3));
        CHECK(rigid);
        CHECK(out.is_null());
    }
    SUBCASE("every deformation of the one-dimensional base trivializes") {
        auto s = fixtures::dim1(Rat(1));
        auto e2 = [&](const Rat& c) {
            return cochain2(s, 0, {{0, 0, 0, c}});
        };
        TruncatedDeformation d(s, {e2(Rat(2)), e2(Rat(3))});
        auto [out, rigid] = rigidity_reduce(d);
        CHECK(rigid);
        CHECK(out.is_null());
    }
    SUBCASE("an obstructed term stops the reduction") {
        auto z = fixtures::zero_algebra({0, 1});
        TruncatedDeformation d(z, {cochain2(z, 0, {{0, 0, 0, Rat(1)}})});
        auto [out, rigid] = rigidity_reduce(d);
        CHECK_FALSE(rigid);
        CHECK(out == d);
    }
}

TEST_CASE("equivalent deformations differ by the coboundary of the map") {
    auto a = fixtures::e1();
    TruncatedDeformation d(a, {product_cochain(a)});

    SUBCASE("identity transform gives a zero difference") {
        auto phi = EquivalenceTransform::identity(a, 1);
        auto delta = cohomology_class_delta(d, apply_equivalence(d, phi), phi);
        CHECK(delta.is_zero());
    }
    SUBCASE("general transform") {
        Cochain f = cochain1(a, 0, {{0, 0, Rat(2)}, {1, 1, Rat(5)}});
        EquivalenceTransform phi(a, {f});
        auto dprime = apply_equivalence(d, phi);
        auto delta = cohomology_class_delta(d, dprime, phi);
        CHECK(delta == delta1(f));
        CHECK(delta == cochain2(a, 0, {{0, 0, 0, Rat(2)},
                                       {0, 1, 1, Rat(2)},
                                       {1, 0, 1, Rat(2)}}));
    }
    SUBCASE("mismatched pairs are rejected") {
        Cochain f = cochain1(a, 0, {{0, 0, Rat(2)}});
        EquivalenceTransform phi(a, {f});
        CHECK_THROWS_AS(cohomology_class_delta(d, d, phi), InputError);
    }
}

TEST_CASE("the obstruction identity holds order by order") {
    // For every valid deformation, -delta2(G_n) equals the sum of the
    // circle products G_i o G_j over i+j = n with i,j >= 1.
    auto check_obstruction = [](const TruncatedDeformation& d) {
        REQUIRE(check_deformation(d).ok());
        for (std::size_t n = 1; n <= d.order(); ++n) {
            Cochain lhs = scale(Rat(-1), delta2(d.term(n)));
            Cochain rhs = Cochain::zero(d.base(), 3, 0);
            for (std::size_t i = 1; i + 1 <= n; ++i)
                rhs = add(rhs, circle_alpha(d.term(i), d.term(n - i)));
            CHECK(lhs == rhs);
        }
    };

    auto base = deriv_e1();
    auto d = retruncate(TruncatedDeformation(base,
                                             {unital_product_over(base)}),
                        3);
    check_obstruction(d);

    Cochain f = cochain1(base, 0, {{0, 0, Rat(1)}, {1, 1, Rat(-2)}});
    Cochain g = cochain1(base, 0, {{0, 0, Rat(3)}, {1, 0, Rat(0)}});
    EquivalenceTransform phi(
        base, {f, g, Cochain::zero(base, 1, 0)});
    check_obstruction(apply_equivalence(d, phi));

    auto s = fixtures::dim1(Rat(1));
    check_obstruction(TruncatedDeformation(
        s, {cochain2(s, 0, {{0, 0, 0, Rat(2)}}),
            cochain2(s, 0, {{0, 0, 0, Rat(3)}})}));
}

TEST_CASE("retruncation changes only the order") {
    auto a = fixtures::e1();
    TruncatedDeformation d(a, {product_cochain(a)});
    auto d3 = retruncate(d, 3);
    CHECK(d3.order() == 3);
    CHECK(d3.term(1) == d.term(1));
    CHECK(d3.term(2).is_zero());
    CHECK(d3.term(3).is_zero());
    CHECK(retruncate(d3, 1) == d);
    CHECK_THROWS_AS(retruncate(d, 0), InputError);
}
