#include <doctest.h>

#include <random>

#include "support/convert.hpp"
#include "wreathdiam/synthesis.hpp"

using namespace wreathdiam;
using testing::poly2;
using testing::random_element;
using testing::random_poly;

namespace {

// w^f(c) computed as the product of the conjugates c^-i w^{f_i} c^i in G.
QuotientElement conjugate_sum(const GroupParams& params, const FqPoly& w, const FqPoly& f) {
    const auto c = QuotientElement::shift_generator(params);
    const auto wv = QuotientElement::from_v(params, w);
    auto acc = QuotientElement::identity(params);
    for (int i = 0; i <= f.degree(); ++i) {
        const auto ci = c.pow(i);
        acc = acc * (ci.inverse() * wv * ci).pow(f.coeff(static_cast<std::size_t>(i)));
    }
    return acc;
}

std::vector<WreathElement> random_generating_w(const GroupParams& params, const Decomposition& dec,
                                               std::mt19937_64& rng) {
    std::vector<WreathElement> gens;
    do {
        gens.clear();
        const std::size_t size = 2 + rng() % 2;
        for (std::size_t i = 0; i < size; ++i) gens.push_back(random_element(params, rng));
    } while (!generates_W(gens, dec).generates);
    return gens;
}

std::vector<QuotientElement> random_generating_g(const GroupParams& params, const Decomposition& dec,
                                                 std::mt19937_64& rng) {
    std::vector<QuotientElement> gens;
    do {
        gens.clear();
        const std::size_t size = 2 + rng() % 2;
        for (std::size_t i = 0; i < size; ++i) gens.push_back(quotient_map(random_element(params, rng)));
    } while (!generates_G(gens, dec).generates);
    return gens;
}

Word letters(std::initializer_list<std::pair<std::size_t, int>> l) {
    Word w;
    for (const auto& [g, e] : l) w.push(g, e);
    return w;
}

}  // namespace

TEST_SUITE("synthesis") {

TEST_CASE("evaluate") {
    const auto params = GroupParams::make(5);
    const std::vector<WreathElement> gens{WreathElement::shift_generator(params), WreathElement::basis(params, 0)};
    CHECK(evaluate(Word{}, std::span<const WreathElement>(gens), params).is_identity());
    Word cp;
    for (int i = 0; i < 5; ++i) cp.push(0, 1);
    CHECK(evaluate(cp, std::span<const WreathElement>(gens), params).is_identity());
    CHECK_THROWS_AS((void)evaluate(letters({{2, 1}}), std::span<const WreathElement>(gens), params), std::out_of_range);
    CHECK_THROWS_AS((void)evaluate(letters({{0, 2}}), std::span<const WreathElement>(gens), params),
                    std::invalid_argument);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) {
        Word a;
        Word b;
        auto incremental = WreathElement::identity(params);
        for (int j = 0; j < 12; ++j) {
            const std::size_t g = rng() % 2;
            const int e = rng() % 2 ? 1 : -1;
            (j < 6 ? a : b).push(g, e);
            incremental = incremental * (e == 1 ? gens[g] : gens[g].inverse());
        }
        const auto span = std::span<const WreathElement>(gens);
        CHECK(evaluate(concat(a, b), span, params) == incremental);
        CHECK(evaluate(concat(a, b), span, params) == evaluate(a, span, params) * evaluate(b, span, params));
        CHECK(evaluate(a.inverse(), span, params) == evaluate(a, span, params).inverse());
    }
}

TEST_CASE("Horner word examples") {
    CHECK(horner_word(poly2({1}), 1, 1, 0) == letters({{1, 1}}));
    CHECK(horner_word(FqPoly(2), 3, 1, 0).empty());
    const Word w = horner_word(poly2({1, 0, 1}), 3, 1, 0);
    CHECK(w == letters({{0, -1}, {0, -1}, {1, 1}, {0, 1}, {0, 1}, {1, 1}}));
    CHECK(w.length() == 6);
    CHECK_THROWS_AS((void)horner_word(poly2({1, 0, 1}), 2, 1, 0), std::invalid_argument);

    const auto params = GroupParams::make(7);
    const FqPoly v = poly2({1, 1, 0, 1});
    const std::vector<QuotientElement> gens{QuotientElement::shift_generator(params), QuotientElement::from_v(params, v)};
    const auto value = evaluate(w, std::span<const QuotientElement>(gens), params);
    CHECK(value == conjugate_sum(params, v, poly2({1, 0, 1})));
    CHECK(value.poly() == module_power(params, v, poly2({1, 0, 1})));
}

TEST_CASE("Horner words stay within 3d letters and d uses of w") {
    std::mt19937_64 rng(42);
    for (const std::uint32_t p : {7U, 11U, 13U}) {
        const auto params = GroupParams::make(p);
        for (int i = 0; i < 300; ++i) {
            const std::size_t d = 1 + rng() % (p - 1);
            const FqPoly f = random_poly(2, d, rng);
            const FqPoly w = random_poly(2, p - 1, rng);
            const Word word = horner_word(f, d, 1, 0);
            CHECK(word.length() <= 3 * d);
            CHECK(word.count(1) <= d);
            const std::vector<QuotientElement> gens{QuotientElement::shift_generator(params),
                                                    QuotientElement::from_v(params, w)};
            CHECK(evaluate(word, std::span<const QuotientElement>(gens), params) == conjugate_sum(params, w, f));
        }
    }
    const auto params = GroupParams::make(7, 3);
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = 1 + rng() % 6;
        const FqPoly f = random_poly(3, d, rng);
        const FqPoly w = random_poly(3, 6, rng);
        const Word word = horner_word(f, d, 1, 0);
        CHECK(word.length() <= 4 * d);
        const std::vector<QuotientElement> gens{QuotientElement::shift_generator(params),
                                                QuotientElement::from_v(params, w)};
        CHECK(evaluate(word, std::span<const QuotientElement>(gens), params) == conjugate_sum(params, w, f));
    }
}

TEST_CASE("exponent solving") {
    const auto params = GroupParams::make(7);
    const Decomposition dec(params);
    const FqPoly full = poly2({1});
    const std::vector<Block> one{{0, Support{{0, 1}}}};
    const std::vector<FqPoly> gen{full};

    const auto zero = solve_exponents(FqPoly(2), one, gen, dec);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].is_zero());
    const auto unit = solve_exponents(full, one, gen, dec);
    CHECK(unit[0] == poly2({1}));

    // Two blocks: w1 supported on factor 1 only, w2 on both.
    const FqPoly w1 = poly2({1, 1, 0, 1});
    const FqPoly w2 = poly2({1});
    const std::vector<Support> supports{dec.support(w1), dec.support(w2)};
    const auto blocks = greedy_blocks(supports, dec.k());
    REQUIRE(blocks.size() == 2);
    const std::vector<FqPoly> ws{w1, w2};
    std::vector<FqPoly> block_gens;
    for (const auto& b : blocks) block_gens.push_back(ws[b.generator]);
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const FqPoly v = random_poly(2, 6, rng);
        const auto f = solve_exponents(v, blocks, block_gens, dec);
        FqPoly sum(2);
        for (std::size_t j = 0; j < f.size(); ++j) {
            CHECK(f[j].degree() < static_cast<int>(blocks[j].block.size() * dec.degree()));
            sum = sum + conjugate_sum(params, block_gens[j], f[j]).poly();
        }
        CHECK(reduce_mod_s(params, sum) == v);
    }
}

TEST_CASE("special generating sets") {
    SUBCASE("zero target") {
        const auto params = GroupParams::make(5);
        const Decomposition dec(params);
        const std::vector<QuotientElement> gens{QuotientElement::shift_generator(params),
                                                QuotientElement::from_v(params, poly2({1}))};
        CHECK(synthesize_special(FqPoly(2), gens, dec).empty());
    }
    SUBCASE("p = 3, target x") {
        const auto params = GroupParams::make(3);
        const Decomposition dec(params);
        const std::vector<QuotientElement> gens{QuotientElement::shift_generator(params),
                                                QuotientElement::from_v(params, poly2({1}))};
        const Word w = synthesize_special(poly2({0, 1}), gens, dec);
        CHECK(w.length() <= 6);
        CHECK(evaluate(w, std::span<const QuotientElement>(gens), params) ==
              QuotientElement::from_v(params, poly2({0, 1})));
    }
    SUBCASE("p = 5, every target") {
        const auto params = GroupParams::make(5);
        const Decomposition dec(params);
        const std::vector<QuotientElement> gens{QuotientElement::shift_generator(params),
                                                QuotientElement::from_v(params, poly2({1}))};
        std::size_t longest = 0;
        for (Residue code = 0; code < 16; ++code) {
            const FqPoly v(2, {code & 1U, (code >> 1) & 1U, (code >> 2) & 1U, (code >> 3) & 1U});
            const Word w = synthesize_special(v, gens, dec);
            CHECK(evaluate(w, std::span<const QuotientElement>(gens), params) == QuotientElement::from_v(params, v));
            CHECK(w.count(1) <= 4);
            longest = std::max(longest, w.length());
        }
        CHECK(longest <= 12);
    }
    SUBCASE("first generator must be c") {
        const auto params = GroupParams::make(3);
        const Decomposition dec(params);
        const std::vector<QuotientElement> gens{QuotientElement::from_v(params, poly2({1}))};
        CHECK_THROWS_AS((void)synthesize_special(poly2({1}), gens, dec), std::invalid_argument);
    }
}

TEST_CASE("quotient synthesis") {
    const auto params = GroupParams::make(3);
    const Decomposition dec(params);
    const auto c = QuotientElement::shift_generator(params);
    const std::vector<QuotientElement> gens{c, QuotientElement::from_v(params, poly2({1}))};
    CHECK(synthesize_G(QuotientElement::identity(params), gens, dec).word.empty());
    const auto to_c = synthesize_G(c, gens, dec);
    CHECK(to_c.length <= 1);
    CHECK(to_c.verified);

    const std::vector<QuotientElement> bad{c};
    CHECK_THROWS_AS((void)synthesize_G(c, bad, dec), NotGeneratingError);
}

TEST_CASE("quotient synthesis on random generating sets at p = 7") {
    const auto params = GroupParams::make(7);
    const Decomposition dec(params);
    std::mt19937_64 rng(44);
    for (int s = 0; s < 200; ++s) {
        const QuotientSynthesizer synth(dec, random_generating_g(params, dec, rng));
        for (int t = 0; t < 10; ++t) {
            const auto target = quotient_map(random_element(params, rng));
            const auto report = synth.synthesize(target);
            CHECK(report.verified);
            CHECK(report.length <= 39);
            CHECK(evaluate(report.word, std::span<const QuotientElement>(synth.generators()), params) == target);
        }
    }
}

TEST_CASE("center words") {
    const auto params = GroupParams::make(3);
    const auto c = WreathElement::shift_generator(params);
    const auto e0 = WreathElement::basis(params, 0);
    const auto z = WreathElement::central(params);

    const std::vector<WreathElement> a{c, e0};
    const Word wa = center_word(a);
    CHECK(wa == letters({{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}}));
    CHECK(evaluate(wa, std::span<const WreathElement>(a), params) == z);

    const std::vector<WreathElement> b{e0 * c, e0};
    const Word wb = center_word(b);
    CHECK(wb.length() == 3);
    CHECK(evaluate(wb, std::span<const WreathElement>(b), params) == z);

    const std::vector<WreathElement> even{c, WreathElement(params, {1, 1, 0}, 0)};
    CHECK_THROWS_AS((void)center_word(even), NotGeneratingError);

    std::mt19937_64 rng(45);
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {7, 2}, {5, 3}}) {
        const auto prm = GroupParams::make(p, q);
        const Decomposition dec(prm);
        for (int i = 0; i < 200; ++i) {
            const auto gens = random_generating_w(prm, dec, rng);
            const Word w = center_word(gens);
            CHECK(evaluate(w, std::span<const WreathElement>(gens), prm) == WreathElement::central(prm));
            if (q == 2) CHECK(w.length() <= 2 * p);
        }
    }
}

TEST_CASE("wreath synthesis") {
    const auto params = GroupParams::make(3);
    const Decomposition dec(params);
    const std::vector<WreathElement> gens{WreathElement::shift_generator(params), WreathElement::basis(params, 0)};
    CHECK(synthesize_W(WreathElement::identity(params), gens, dec).word.empty());
    const auto z = synthesize_W(WreathElement::central(params), gens, dec);
    CHECK(z.verified);
    CHECK(z.length <= 6);

    const std::vector<WreathElement> even{WreathElement::shift_generator(params), WreathElement(params, {1, 1, 0}, 0)};
    try {
        (void)synthesize_W(WreathElement::central(params), even, dec);
        FAIL("expected NotGeneratingError");
    } catch (const NotGeneratingError& e) {
        CHECK(e.check().missing_parity);
    }
}

TEST_CASE("wreath synthesis on random generating sets") {
    std::mt19937_64 rng(46);
    for (const std::uint32_t p : {3U, 5U, 7U, 11U}) {
        const auto params = GroupParams::make(p);
        const Decomposition dec(params);
        for (int s = 0; s < 100; ++s) {
            const WreathSynthesizer synth(dec, random_generating_w(params, dec, rng));
            for (int t = 0; t < 10; ++t) {
                const auto target = random_element(params, rng);
                const auto report = synth.synthesize(target);
                CHECK(report.verified);
                CHECK(report.proven_bound);
                CHECK(report.length <= 20 * (p - 1));
                CHECK(evaluate(report.word, std::span<const WreathElement>(synth.generators()), params) == target);
            }
        }
    }
}

TEST_CASE("words are invariant under automorphisms") {
    std::mt19937_64 rng(47);
    for (const std::uint32_t p : {5U, 7U}) {
        const auto params = GroupParams::make(p);
        const Decomposition dec(params);
        for (int s = 0; s < 100; ++s) {
            const auto gens = random_generating_g(params, dec, rng);
            const PowerAutomorphism theta(params, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
            const ConjugationAutomorphism gamma(
                QuotientElement::from_v(params, random_poly(2, p - 1, rng)));
            const auto alpha = [&](const QuotientElement& g) { return gamma.apply(theta.apply(g)); };
            const auto alpha_inv = [&](const QuotientElement& g) { return theta.inverse().apply(gamma.inverse().apply(g)); };
            std::vector<QuotientElement> moved;
            for (const auto& g : gens) moved.push_back(alpha(g));
            const auto target = quotient_map(random_element(params, rng));
            const Word w = synthesize_G(target, gens, dec).word;
            CHECK(evaluate(w, std::span<const QuotientElement>(gens), params) ==
                  alpha_inv(evaluate(w, std::span<const QuotientElement>(moved), params)));
        }
    }
}

TEST_CASE("q = 3 words verify") {
    std::mt19937_64 rng(48);
    for (const std::uint32_t p : {5U, 7U}) {
        const auto params = GroupParams::make(p, 3);
        const Decomposition dec(params);
        for (int s = 0; s < 50; ++s) {
            const WreathSynthesizer synth(dec, random_generating_w(params, dec, rng));
            for (int t = 0; t < 10; ++t) {
                const auto report = synth.synthesize(random_element(params, rng));
                CHECK(report.verified);
                CHECK_FALSE(report.proven_bound);
                CHECK(report.length <= wreath_bound(params));
            }
        }
    }
}

TEST_CASE("bound formulas") {
    const auto p7 = GroupParams::make(7);
    CHECK(special_bound(p7) == 18);
    CHECK(quotient_bound(p7) == 39);
    CHECK(wreath_bound(p7) == 120);
    CHECK(quotient_bound(GroupParams::make(3)) == 13);
    CHECK(quotient_bound(GroupParams::make(5)) == 26);
}

}  // TEST_SUITE
