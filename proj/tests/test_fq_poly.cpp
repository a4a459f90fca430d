#include <doctest.h>

#include <random>

#include "support/convert.hpp"
#include "wreathdiam/fq_poly.hpp"

using namespace wreathdiam;
using testing::from_model;
using testing::poly2;
using testing::random_poly;
using testing::to_model;

TEST_SUITE("fq_poly") {

TEST_CASE("coefficients are trimmed and reduced") {
    const FqPoly f(3, {4, 0, 3, 0});
    CHECK(f.degree() == 0);
    CHECK(f.coeff(0) == 1);
    CHECK(FqPoly(2).is_zero());
    CHECK(FqPoly(2).degree() == -1);
    CHECK(poly2({1, 1, 0, 1}).to_string() == "x^3+x+1");
    CHECK(FqPoly(3, {1, 0, 2}).to_string() == "2x^2+1");
    CHECK(FqPoly(2).to_string() == "0");
}

TEST_CASE("product of x+1 and x^2+x+1 over F_2 is x^3+1") {
    // Oracle: schoolbook product in the reference model.
    CHECK(model::mul({1, 1}, {1, 1, 1}, 2) == model::Poly{1, 0, 0, 1});
    CHECK(poly2({1, 1}) * poly2({1, 1, 1}) == poly2({1, 0, 0, 1}));
}

TEST_CASE("division by a unit returns the dividend and zero") {
    const FqPoly a(5, {3, 1, 4, 1});
    const auto [quo, r] = poly_divmod(a, FqPoly::constant(5, 1));
    CHECK(quo == a);
    CHECK(r.is_zero());
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS((void)poly_divmod(poly2({1, 1}), FqPoly(2)), std::domain_error);
}

TEST_CASE("gcd of x^3+1 and x+1 over F_2 is x+1") {
    CHECK(model::gcd({1, 0, 0, 1}, {1, 1}, 2) == model::Poly{1, 1});
    CHECK(poly_gcd(poly2({1, 0, 0, 1}), poly2({1, 1})) == poly2({1, 1}));
}

TEST_CASE("gcd is monic") {
    const FqPoly a(5, {2, 4});  // 4x + 2 = 4(x + 3)
    const FqPoly b(5, {3, 1});  // x + 3
    CHECK(poly_gcd(a, b) == FqPoly(5, {3, 1}));
}

TEST_CASE("invert_mod examples over F_2") {
    const FqPoly m = poly2({1, 1, 1});
    CHECK(invert_mod(FqPoly::constant(2, 1), m) == FqPoly::constant(2, 1));
    CHECK(invert_mod(poly2({0, 1}), m) == poly2({1, 1}));
    CHECK(invert_mod(poly2({1, 1}), m) == poly2({0, 1}));
    CHECK_THROWS_AS((void)invert_mod(poly2({1, 1}), poly2({1, 0, 1})), NotInvertible);
}

TEST_CASE("crt_combine examples") {
    const FqPoly m1 = poly2({1, 1, 0, 1});
    const FqPoly m2 = poly2({1, 0, 1, 1});

    SUBCASE("single pair reduces the value") {
        const FqPoly v = poly2({1, 1, 1, 1, 1});
        const std::vector<CrtResidue> r{{v, m1}};
        CHECK(crt_combine(r) == from_model(model::rem(to_model(v), to_model(m1), 2), 2));
    }
    SUBCASE("1 mod m1, 0 mod m2") {
        const std::vector<CrtResidue> r{{FqPoly::constant(2, 1), m1}, {FqPoly(2), m2}};
        const FqPoly sol = crt_combine(r);
        CHECK(sol.degree() < 6);
        CHECK(model::rem(to_model(sol), to_model(m1), 2) == model::Poly{1});
        CHECK(model::rem(to_model(sol), to_model(m2), 2).empty());
    }
    SUBCASE("zero residues give zero") {
        const std::vector<CrtResidue> r{{FqPoly(2), m1}, {FqPoly(2), m2}};
        CHECK(crt_combine(r).is_zero());
    }
    SUBCASE("non-coprime moduli and empty input throw") {
        const std::vector<CrtResidue> r{{FqPoly(2), m1}, {FqPoly(2), m1}};
        CHECK_THROWS_AS((void)crt_combine(r), std::invalid_argument);
        CHECK_THROWS_AS((void)crt_combine(std::span<const CrtResidue>{}), std::invalid_argument);
    }
}

TEST_CASE("ring operations agree with the reference model") {
    std::mt19937_64 rng(11);
    for (const Residue q : {2U, 3U, 5U, 7U}) {
        for (int i = 0; i < 500; ++i) {
            const FqPoly a = random_poly(q, 1 + rng() % 12, rng);
            FqPoly b = random_poly(q, 1 + rng() % 8, rng);
            if (b.is_zero()) b = FqPoly::constant(q, 1);
            const int qi = static_cast<int>(q);
            CHECK(to_model(a + b) == model::add(to_model(a), to_model(b), qi));
            CHECK(to_model(a - b) == model::sub(to_model(a), to_model(b), qi));
            CHECK(to_model(a * b) == model::mul(to_model(a), to_model(b), qi));
            const auto [quo, r] = poly_divmod(a, b);
            const auto [mq, mr] = model::divmod(to_model(a), to_model(b), qi);
            CHECK(to_model(quo) == mq);
            CHECK(to_model(r) == mr);
            CHECK(to_model(poly_gcd(a, b)) == model::gcd(to_model(a), to_model(b), qi));
            const auto e = rng() % 50;
            CHECK(to_model(poly_powmod(a, e, b)) == model::powmod(to_model(a), e, to_model(b), qi));
        }
    }
}

TEST_CASE("invert_mod and crt_combine round trips") {
    std::mt19937_64 rng(12);
    for (const Residue q : {2U, 3U}) {
        const int qi = static_cast<int>(q);
        int inverted = 0;
        for (int i = 0; i < 1000; ++i) {
            const FqPoly m = random_poly(q, 2 + rng() % 8, rng);
            if (m.degree() < 1) continue;
            const FqPoly a = random_poly(q, 1 + rng() % 10, rng);
            if (model::gcd(to_model(a), to_model(m), qi) == model::Poly{1}) {
                const FqPoly inv = invert_mod(a, m);
                CHECK(inv.degree() < m.degree());
                CHECK(model::rem(model::mul(to_model(a), to_model(inv), qi), to_model(m), qi) == model::Poly{1});
                ++inverted;
            } else {
                CHECK_THROWS_AS((void)invert_mod(a, m), NotInvertible);
            }
        }
        CHECK(inverted > 100);

        int combined = 0;
        for (int i = 0; i < 1000; ++i) {
            const FqPoly m1 = random_poly(q, 2 + rng() % 5, rng);
            const FqPoly m2 = random_poly(q, 2 + rng() % 5, rng);
            if (m1.degree() < 1 || m2.degree() < 1) continue;
            if (model::gcd(to_model(m1), to_model(m2), qi) != model::Poly{1}) continue;
            const FqPoly v1 = random_poly(q, 6, rng);
            const FqPoly v2 = random_poly(q, 6, rng);
            const std::vector<CrtResidue> r{{v1, m1}, {v2, m2}};
            const FqPoly sol = crt_combine(r);
            CHECK(sol.degree() < m1.degree() + m2.degree());
            CHECK(model::rem(to_model(sol), to_model(m1), qi) == model::rem(to_model(v1), to_model(m1), qi));
            CHECK(model::rem(to_model(sol), to_model(m2), qi) == model::rem(to_model(v2), to_model(m2), qi));
            ++combined;
        }
        CHECK(combined > 100);
    }
}

TEST_CASE("canonical order compares degree then high coefficients") {
    CHECK(canonical_less(poly2({1, 1}), poly2({1, 1, 0, 1})));
    CHECK(canonical_less(poly2({1, 1, 0, 1}), poly2({1, 0, 1, 1})));
    CHECK_FALSE(canonical_less(poly2({1, 0, 1, 1}), poly2({1, 1, 0, 1})));
    CHECK_FALSE(canonical_less(poly2({1, 1}), poly2({1, 1})));
}

}  // TEST_SUITE
