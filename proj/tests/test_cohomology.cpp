// Expected coboundary values were expanded by hand from the three-term
// (arity 1) and eight-term (arity 2) formulas before implementation.
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "homnov/cohomology.hpp"
#include "homnov/constructions.hpp"
#include "homnov/errors.hpp"

using namespace homnov;

namespace {

// Arity-1 cochain from entries (i, k, c): f(e_i) has coordinate c on e_k.
Cochain cochain1(const AlgebraPtr& a, Parity parity,
                 const std::vector<std::tuple<std::size_t, std::size_t, Rat>>&
                     entries) {
    std::size_t n = a->dim();
    std::vector<Vec> table(n, zero_vec(n));
    for (const auto& [i, k, c] : entries) table[i][k] = c;
    return Cochain(a, 1, parity, std::move(table));
}

// Arity-2 cochain from entries (i, j, k, c).
Cochain cochain2(
    const AlgebraPtr& a, Parity parity,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>&
        entries) {
    std::size_t n = a->dim();
    std::vector<Vec> table(n * n, zero_vec(n));
    for (const auto& [i, j, k, c] : entries) table[i * n + j][k] = c;
    return Cochain(a, 2, parity, std::move(table));
}

} // namespace

TEST_CASE("cochain construction validates shape and parity-homogeneity") {
    auto e1 = fixtures::e1();
    // Even arity-1 cochain may not send e0 (even) to e1 (odd).
    CHECK_THROWS_AS(cochain1(e1, 0, {{0, 1, Rat(1)}}), InputError);
    // As an odd cochain the same table is legal.
    CHECK_NOTHROW(cochain1(e1, 1, {{0, 1, Rat(1)}}));
    // Wrong table size.
    CHECK_THROWS_AS(Cochain(e1, 2, 0, std::vector<Vec>(2, zero_vec(2))),
                    InputError);
    CHECK_THROWS_AS(Cochain(e1, 4, 0, std::vector<Vec>(16, zero_vec(2))),
                    InputError);
    CHECK_THROWS_AS(Cochain(nullptr, 1, 0, {}), InputError);
}

TEST_CASE("cochain evaluation is multilinear") {
    auto e1 = fixtures::e1();
    auto f = cochain2(e1, 0, {{1, 1, 0, Rat(1)}}); // f(e1,e1) = e0
    CHECK(f.apply({Rat(1), Rat(2)}, {Rat(3), Rat(4)}) == Vec{Rat(8), Rat(0)});
    CHECK(f.value_basis(1, 1) == Vec{Rat(1), Rat(0)});
    CHECK(f.value_basis(0, 1) == zero_vec(2));

    auto g = cochain1(e1, 0, {{0, 0, Rat(2)}, {1, 1, Rat(5)}});
    CHECK(g.apply({Rat(1), Rat(1)}) == Vec{Rat(2), Rat(5)});
}

TEST_CASE("product_cochain wraps the structure tensor") {
    auto e1 = fixtures::e1();
    auto g0 = product_cochain(e1);
    CHECK(g0.arity() == 2);
    CHECK(g0.parity() == 0);
    CHECK(g0.value_basis(0, 1) == e1->product_basis(0, 1));
    CHECK(is_hom_cochain(g0).ok());
}

TEST_CASE("is_hom_cochain") {
    // Identity twist: every cochain is compatible.
    auto e1 = fixtures::e1();
    CHECK(is_hom_cochain(cochain1(e1, 1, {{0, 1, Rat(3)}})).ok());

    // Sign-flip twist: the odd cochain f(e0)=e1 is incompatible.
    auto flip = fixtures::e1(fixtures::e1_sign_flip());
    auto f = cochain1(flip, 1, {{0, 1, Rat(1)}});
    auto r = is_hom_cochain(f);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violation->identity == "alpha-compatibility");
    CHECK(r.violation->tuple == std::vector<std::size_t>{0});
    // alpha(f(e0)) - f(alpha(e0)) = -e1 - e1.
    CHECK(r.violation->residual == Vec{Rat(0), Rat(-2)});

    CHECK(is_hom_cochain(Cochain::zero(flip, 2, 1)).ok());
}

TEST_CASE("delta1 frozen values") {
    // dim-1 idempotent, f(e) = 3e: the three terms give 3e + 3e - 3e.
    auto one = fixtures::dim1(Rat(1));
    auto f = cochain1(one, 0, {{0, 0, Rat(3)}});
    auto df = delta1(f);
    CHECK(df.arity() == 2);
    CHECK(df.parity() == 0);
    CHECK(df.value_basis(0, 0) == Vec{Rat(3)});

    // Zero-product algebra: every term vanishes.
    auto zero = fixtures::zero_algebra({0, 1});
    CHECK(delta1(cochain1(zero, 0, {{0, 0, Rat(4)}, {1, 1, Rat(-2)}}))
              .is_zero());

    // Unital 2-dim algebra, even f = diag(2,5):
    // delta1 f (x,y) = x f(y) + f(x) y - f(x y) gives 2e0, 2e1, 2e1, 0.
    auto e1 = fixtures::e1();
    auto g = cochain1(e1, 0, {{0, 0, Rat(2)}, {1, 1, Rat(5)}});
    auto dg = delta1(g);
    CHECK(dg.value_basis(0, 0) == Vec{Rat(2), Rat(0)});
    CHECK(dg.value_basis(0, 1) == Vec{Rat(0), Rat(2)});
    CHECK(dg.value_basis(1, 0) == Vec{Rat(0), Rat(2)});
    CHECK(dg.value_basis(1, 1) == zero_vec(2));

    // Odd f with f(e0) = e1: the Koszul sign flips the first term when
    // x1 is odd; only the (e0,e0) slot survives.
    auto h = cochain1(e1, 1, {{0, 1, Rat(1)}});
    auto dh = delta1(h);
    CHECK(dh.parity() == 1);
    CHECK(dh.value_basis(0, 0) == Vec{Rat(0), Rat(1)});
    CHECK(dh.value_basis(0, 1) == zero_vec(2));
    CHECK(dh.value_basis(1, 0) == zero_vec(2));
    CHECK(dh.value_basis(1, 1) == zero_vec(2));

    // Outputs of delta1 are themselves compatible cochains.
    CHECK(is_hom_cochain(dg).ok());
    CHECK(is_hom_cochain(dh).ok());

    // The membership gate rejects incompatible inputs.
    auto flip = fixtures::e1(fixtures::e1_sign_flip());
    CHECK_THROWS_WITH_AS(delta1(cochain1(flip, 1, {{0, 1, Rat(1)}})),
                         doctest::Contains("is_hom_cochain"),
                         PreconditionError);
    // Arity mismatches are structural errors.
    CHECK_THROWS_AS(delta1(product_cochain(e1)), InputError);
}

TEST_CASE("delta2 frozen values") {
    // dim-1 idempotent, f(e,e) = e: the eight terms cancel.
    auto one = fixtures::dim1(Rat(1));
    CHECK(delta2(product_cochain(one)).is_zero());

    // Zero-product algebra: identically zero.
    auto zero = fixtures::zero_algebra({0, 1});
    CHECK(delta2(cochain2(zero, 0, {{1, 1, 0, Rat(7)}})).is_zero());

    // Unital 2-dim algebra, even f with f(e1,e1) = e0 (hand-expanded):
    // delta2 f(e1,e1,e1) = 2e1 and delta2 f(e0,e1,e1) = 2e0.
    auto e1 = fixtures::e1();
    auto f = cochain2(e1, 0, {{1, 1, 0, Rat(1)}});
    auto df = delta2(f);
    CHECK(df.arity() == 3);
    CHECK(df.value_basis(1, 1, 1) == Vec{Rat(0), Rat(2)});
    CHECK(df.value_basis(0, 1, 1) == Vec{Rat(2), Rat(0)});
    CHECK(is_hom_cochain(df).ok());

    CHECK_THROWS_AS(delta2(cochain1(e1, 0, {{0, 0, Rat(1)}})), InputError);
}

TEST_CASE("delta2 after delta1 vanishes on valid algebras") {
    std::vector<AlgebraPtr> bases = {
        fixtures::dim1(Rat(1)), fixtures::e1(),
        derivation_product(*fixtures::e1(), fixtures::e1_derivation()),
        twisted_derivation_product(*fixtures::e1(fixtures::e1_sign_flip()),
                                   fixtures::e1_derivation())};
    for (const auto& a : bases) {
        REQUIRE(is_hom_novikov(*a).ok());
        for (Parity p : {0, 1})
            for (const Cochain& f : cochain_basis(a, 1, p))
                CHECK(delta2(delta1(f)).is_zero());
    }

    // Also on random combinations with larger coefficients.
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const auto& a = bases[trial % bases.size()];
        for (Parity p : {0, 1}) {
            auto basis = cochain_basis(a, 1, p);
            if (basis.empty()) continue;
            Cochain f = Cochain::zero(a, 1, p);
            for (const auto& b : basis)
                f = add(f, scale(Rat(coef(rng)), b));
            CHECK(delta2(delta1(f)).is_zero());
        }
    }
}

TEST_CASE("circle_alpha") {
    // dim-1 idempotent with f = g = product: four terms cancel pairwise.
    auto one = fixtures::dim1(Rat(1));
    auto g0 = product_cochain(one);
    CHECK(circle_alpha(g0, g0).is_zero());

    // Zero cochains annihilate.
    auto e1 = fixtures::e1();
    auto z = Cochain::zero(e1, 2, 0);
    CHECK(circle_alpha(z, product_cochain(e1)).is_zero());
    CHECK(circle_alpha(product_cochain(e1), z).is_zero());

    // For even f: delta2 f = f o G0 + G0 o f, exactly.
    auto fe = cochain2(e1, 0, {{1, 1, 0, Rat(1)}, {0, 0, 0, Rat(-2)}});
    auto lhs = delta2(fe);
    auto rhs = add(circle_alpha(fe, product_cochain(e1)),
                   circle_alpha(product_cochain(e1), fe));
    CHECK(lhs == rhs);

    // Same identity over a twisted base.
    auto tw = twisted_derivation_product(*fixtures::e1(
                                             fixtures::e1_sign_flip()),
                                         fixtures::e1_derivation());
    for (const Cochain& f : cochain_basis(tw, 2, 0)) {
        auto l = delta2(f);
        auto r = add(circle_alpha(f, product_cochain(tw)),
                     circle_alpha(product_cochain(tw), f));
        CHECK(l == r);
    }

    // Cross-algebra pairs are rejected (pointer identity, not value).
    auto e1_copy = fixtures::e1();
    CHECK_THROWS_AS(circle_alpha(product_cochain(e1),
                                 product_cochain(e1_copy)),
                    InputError);
}

TEST_CASE("linearity of the coboundary operators") {
    auto e1 = fixtures::e1();
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rand1 = [&](Parity p) {
        Cochain f = Cochain::zero(e1, 1, p);
        for (const auto& b : cochain_basis(e1, 1, p))
            f = add(f, scale(Rat(coef(rng)), b));
        return f;
    };
    for (int trial = 0; trial < 10; ++trial) {
        Parity p = trial % 2;
        auto f = rand1(p);
        auto g = rand1(p);
        Rat c(coef(rng));
        CHECK(delta1(add(f, g)) == add(delta1(f), delta1(g)));
        CHECK(delta1(scale(c, f)) == scale(c, delta1(f)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        Parity p = trial % 2;
        auto basis = cochain_basis(e1, 2, p);
        Cochain f = Cochain::zero(e1, 2, p);
        Cochain g = Cochain::zero(e1, 2, p);
        for (const auto& b : basis) {
            f = add(f, scale(Rat(coef(rng)), b));
            g = add(g, scale(Rat(coef(rng)), b));
        }
        CHECK(delta2(add(f, g)) == add(delta2(f), delta2(g)));
        Rat c(coef(rng));
        CHECK(delta2(scale(c, f)) == scale(c, delta2(f)));
    }
}

TEST_CASE("cochain_basis") {
    // Identity twist: all parity-homogeneous tensors are compatible.
    auto e1 = fixtures::e1();
    CHECK(cochain_basis(e1, 1, 0).size() == 2);
    CHECK(cochain_basis(e1, 1, 1).size() == 2);
    CHECK(cochain_basis(e1, 2, 0).size() == 4);
    CHECK(cochain_basis(e1, 2, 1).size() == 4);

    auto one = fixtures::dim1(Rat(1));
    CHECK(cochain_basis(one, 2, 0).size() == 1);
    CHECK(cochain_basis(one, 2, 1).empty());

    // Sign-flip twist kills all odd arity-1 cochains but no even ones.
    auto flip = fixtures::e1(fixtures::e1_sign_flip());
    CHECK(cochain_basis(flip, 1, 0).size() == 2);
    CHECK(cochain_basis(flip, 1, 1).empty());

    auto none = fixtures::zero_algebra({});
    CHECK(cochain_basis(none, 1, 0).empty());
    CHECK(cochain_basis(none, 2, 0).empty());

    // Every returned cochain is compatible.
    for (const Cochain& f : cochain_basis(flip, 2, 0))
        CHECK(is_hom_cochain(f).ok());

    CHECK_THROWS_AS(cochain_basis(e1, 3, 0), InputError);
}

TEST_CASE("z1_dim counts twist-compatible derivations") {
    CHECK(z1_dim(fixtures::e1(), 0) == 1);
    CHECK(z1_dim(fixtures::e1(), 1) == 1);
    CHECK(z1_dim(fixtures::dim1(Rat(1)), 0) == 0);
    CHECK(z1_dim(fixtures::dim1(Rat(0)), 0) == 1);
}

TEST_CASE("h2 frozen reports") {
    // dim-1 idempotent: C2 = Z2 = B2 = 1, so H2 = 0.
    auto one = fixtures::dim1(Rat(1));
    auto r = h2(one, 0);
    CHECK(r.parity == 0);
    CHECK(r.dim_cochains == 1);
    CHECK(r.dim_cocycles == 1);
    CHECK(r.dim_coboundaries == 1);
    CHECK(r.dim_h2 == 0);

    auto ro = h2(one, 1);
    CHECK(ro.dim_cochains == 0);
    CHECK(ro.dim_h2 == 0);

    // dim-1 zero product: both coboundaries vanish, H2 = 1.
    auto zero1 = fixtures::dim1(Rat(0));
    auto rz = h2(zero1, 0);
    CHECK(rz.dim_cochains == 1);
    CHECK(rz.dim_cocycles == 1);
    CHECK(rz.dim_coboundaries == 0);
    CHECK(rz.dim_h2 == 1);

    // dim-0 algebra: everything is zero.
    auto none = fixtures::zero_algebra({});
    auto rn = h2(none, 0);
    CHECK(rn.dim_cochains == 0);
    CHECK(rn.dim_h2 == 0);

    // The axiom precondition is enforced.
    auto flip = fixtures::e1(fixtures::e1_sign_flip());
    CHECK_THROWS_WITH_AS(h2(flip, 0), doctest::Contains("is_hom_novikov"),
                         PreconditionError);

    // Consistency on a 2-dim example.
    auto re = h2(fixtures::e1(), 0);
    CHECK(re.dim_h2 == re.dim_cocycles - re.dim_coboundaries);
    CHECK(re.dim_cocycles >= re.dim_coboundaries);
    CHECK(re.dim_cochains == 4);
}

TEST_CASE("h2 dimensions are invariant under even changes of basis") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<AlgebraPtr> samples = {
        fixtures::e1(),
        derivation_product(*fixtures::e1(), fixtures::e1_derivation()),
        twisted_derivation_product(*fixtures::e1(fixtures::e1_sign_flip()),
                                   fixtures::e1_derivation())};
    int done = 0;
    while (done < 10) {
        const auto& a = samples[done % samples.size()];
        std::size_t n = a->dim();
        Matrix s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a->space().parity(i) == a->space().parity(j))
                    s.at(i, j) = Rat(entry(rng));
        if (!invert(s).has_value()) continue;
        ++done;
        auto c = conjugate_algebra(*a, s);
        for (Parity p : {0, 1}) {
            auto ra = h2(a, p);
            auto rc = h2(c, p);
            CHECK(ra.dim_cochains == rc.dim_cochains);
            CHECK(ra.dim_cocycles == rc.dim_cocycles);
            CHECK(ra.dim_coboundaries == rc.dim_coboundaries);
            CHECK(ra.dim_h2 == rc.dim_h2);
        }
    }
}
