#include <doctest.h>

#include <random>
#include <set>

#include "support/convert.hpp"
#include "wreathdiam/modstruct.hpp"
#include "wreathdiam/oracle.hpp"

using namespace wreathdiam;
using Code = CodedGroup::Code;
using testing::random_element;
using testing::to_perm;

namespace {

std::vector<model::Perm> model_elements(const model::Wreath& w, const CodedGroup& g) {
    std::vector<model::Perm> out;
    for (Code a = 0; a < g.order(); ++a) out.push_back(to_perm(w, g.decode_w(a)));
    return out;
}

// Largest model diameter over every generating subset of size <= max_size
// (every irredundant set of the groups used here is that small).
int model_worst(const CodedGroup& g, std::size_t max_size) {
    const model::Wreath w{static_cast<int>(g.params().p), static_cast<int>(g.params().q)};
    const bool quotient = g.kind() == GroupKind::G;
    const auto elems = model_elements(w, g);
    int worst = -1;
    std::vector<std::size_t> idx;
    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!idx.empty()) {
            std::vector<model::Perm> gens;
            for (auto i : idx) gens.push_back(elems[i]);
            worst = std::max(worst, model::diameter(w, gens, quotient));
        }
        if (idx.size() == max_size) return;
        for (std::size_t i = start; i < elems.size(); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 1);
    return worst;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("coded arithmetic matches element arithmetic") {
    std::mt19937_64 rng(51);
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {7, 2}, {11, 2}, {5, 3}, {3, 5}}) {
        const auto params = GroupParams::make(p, q);
        const CodedGroup w(params, GroupKind::W);
        const CodedGroup g(params, GroupKind::G);
        CHECK(w.order() == g.order() * q);
        for (int i = 0; i < 2000; ++i) {
            const auto a = random_element(params, rng);
            const auto b = random_element(params, rng);
            REQUIRE(w.decode_w(w.encode(a)) == a);
            REQUIRE(w.multiply(w.encode(a), w.encode(b)) == w.encode(a * b));
            REQUIRE(w.inverse(w.encode(a)) == w.encode(a.inverse()));
            REQUIRE(g.decode_g(g.encode(a)) == quotient_map(a));
            REQUIRE(g.multiply(g.encode(a), g.encode(b)) == g.encode(a * b));
            REQUIRE(g.inverse(g.encode(a)) == g.encode(a.inverse()));
        }
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(CodedGroup(GroupParams::make(23), GroupKind::W), GuardExceeded);
    const CodedGroup w11(GroupParams::make(11), GroupKind::W);
    CHECK_THROWS_AS(enumerate_irredundant(w11, [](std::span<const Code>) {}), GuardExceeded);
    CHECK_THROWS_AS((void)worst_diameter(w11, SearchMode::exhaustive_mode()), GuardExceeded);
}

TEST_CASE("closures") {
    const auto params = GroupParams::make(3);
    const CodedGroup w(params, GroupKind::W);
    const Code c = w.encode(WreathElement::shift_generator(params));
    const Code e0 = w.encode(WreathElement::basis(params, 0));
    const Code e01 = w.encode(WreathElement(params, {1, 1, 0}, 0));
    CHECK(subgroup_closure(w, std::vector<Code>{c, e0}).size() == 24);
    CHECK(subgroup_closure(w, std::vector<Code>{c, e01}).size() == 12);
    CHECK(generates(w, std::vector<Code>{c, e0}));
    CHECK_FALSE(generates(w, std::vector<Code>{c, e01}));
    CHECK(make_irredundant(w, {c, e0, e01, w.multiply(c, e0)}).size() == 2);
}

TEST_CASE("BFS diameters") {
    const auto params = GroupParams::make(3);
    const CodedGroup w(params, GroupKind::W);
    const model::Wreath mw{3, 2};
    const auto c = WreathElement::shift_generator(params);
    const auto e0 = WreathElement::basis(params, 0);

    std::vector<Code> everything;
    for (Code a = 1; a < w.order(); ++a) everything.push_back(a);
    CHECK(bfs_diameter(w, everything).diameter == 1);

    const auto r = bfs_diameter(w, std::vector<Code>{w.encode(c), w.encode(e0)});
    CHECK(r.diameter == static_cast<std::uint32_t>(model::diameter(mw, {to_perm(mw, c), to_perm(mw, e0)}, false)));
    CHECK(r.diameter <= 40);
    CHECK(r.group_order == 24);

    const CodedGroup g(params, GroupKind::G);
    const auto rg = bfs_diameter(g, std::vector<Code>{g.encode(c), g.encode(e0)});
    CHECK(rg.diameter == static_cast<std::uint32_t>(model::diameter(mw, {to_perm(mw, c), to_perm(mw, e0)}, true)));
    CHECK(rg.diameter <= 13);
    CHECK(rg.group_order == 12);

    CHECK_THROWS_AS((void)bfs_diameter(w, std::vector<Code>{w.encode(c)}), NotGeneratingSet);
}

TEST_CASE("BFS diameters agree with the model on random generating sets") {
    std::mt19937_64 rng(52);
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {7, 2}, {5, 3}}) {
        const auto params = GroupParams::make(p, q);
        const model::Wreath mw{static_cast<int>(p), static_cast<int>(q)};
        for (const auto kind : {GroupKind::W, GroupKind::G}) {
            const CodedGroup g(params, kind);
            for (int i = 0; i < 20; ++i) {
                const auto codes = random_generating(g, 2 + rng() % 2, rng);
                std::vector<model::Perm> perms;
                for (const Code a : codes) perms.push_back(to_perm(mw, g.decode_w(a)));
                CHECK(bfs_diameter(g, codes).diameter ==
                      static_cast<std::uint32_t>(model::diameter(mw, perms, kind == GroupKind::G)));
            }
        }
    }
}

TEST_CASE("irredundant enumeration at p = 3 matches brute force") {
    const auto params = GroupParams::make(3);
    const Decomposition dec(params);
    const model::Wreath mw{3, 2};
    for (const auto kind : {GroupKind::W, GroupKind::G}) {
        const CodedGroup g(params, kind);
        const bool quotient = kind == GroupKind::G;
        const auto elems = model_elements(mw, g);
        const auto generates_model = [&](const std::vector<Code>& set) {
            std::vector<model::Perm> perms;
            for (const Code a : set) perms.push_back(elems[a]);
            if (quotient) perms.push_back(mw.central());
            return model::closure(mw, perms).size() == 24;
        };
        // Brute force over all subsets of nonidentity elements of size <= 4.
        std::set<std::vector<Code>> expected;
        std::vector<Code> set;
        const auto rec = [&](auto&& self, Code start) -> void {
            if (!set.empty() && generates_model(set)) {
                bool irredundant = true;
                for (std::size_t i = 0; i < set.size() && irredundant; ++i) {
                    std::vector<Code> rest(set);
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                    if (!rest.empty() && generates_model(rest)) irredundant = false;
                }
                if (irredundant) expected.insert(set);
                return;
            }
            if (set.size() == 4) return;
            for (Code a = start; a < g.order(); ++a) {
                set.push_back(a);
                self(self, a + 1);
                set.pop_back();
            }
        };
        rec(rec, 1);

        std::set<std::vector<Code>> emitted;
        std::size_t max_size = 0;
        enumerate_irredundant(g, [&](std::span<const Code> s) {
            emitted.insert(std::vector<Code>(s.begin(), s.end()));
            max_size = std::max(max_size, s.size());
            std::vector<WreathElement> ws;
            for (const Code a : s) ws.push_back(g.decode_w(a));
            if (quotient) {
                std::vector<QuotientElement> qs;
                for (const auto& x : ws) qs.push_back(quotient_map(x));
                CHECK(generates_G(qs, dec).generates);
            } else {
                CHECK(generates_W(ws, dec).generates);
            }
        });
        CHECK(emitted == expected);
        CHECK(max_size == (quotient ? 2U : 3U));
        std::size_t expected_max = 0;
        for (const auto& e : expected) expected_max = std::max(expected_max, e.size());
        CHECK(expected_max == max_size);
    }
}

TEST_CASE("worst diameters at p = 3 equal the maximum over all small generating subsets") {
    const auto params = GroupParams::make(3);
    const CodedGroup w(params, GroupKind::W);
    const CodedGroup g(params, GroupKind::G);
    const int w_worst = model_worst(w, 3);
    const int g_worst = model_worst(g, 3);
    CHECK(w_worst == 6);
    CHECK(g_worst == 3);
    CHECK(worst_diameter(w, SearchMode::exhaustive_mode()).worst_diameter == 6);
    CHECK(worst_diameter(g, SearchMode::exhaustive_mode()).worst_diameter == 3);
}

TEST_CASE("worst diameter of G_5 equals the maximum over all generating pairs") {
    const CodedGroup g(GroupParams::make(5), GroupKind::G);
    CHECK(model_worst(g, 2) == 7);
    const auto report = worst_diameter(g, SearchMode::exhaustive_mode());
    CHECK(report.worst_diameter == 7);
    CHECK(report.within_bound);
    CHECK(report.max_irredundant_size == 2);
}

TEST_CASE("automorphism reduction agrees with the full enumeration") {
    for (const auto& [p, kind] : std::vector<std::pair<std::uint32_t, GroupKind>>{
             {3, GroupKind::W}, {3, GroupKind::G}, {5, GroupKind::G}}) {
        const CodedGroup g(GroupParams::make(p), kind);
        std::uint32_t full_worst = 0;
        std::size_t full_size = 0;
        enumerate_irredundant(g, [&](std::span<const Code> s) {
            full_worst = std::max(full_worst, bfs_diameter(g, s).diameter);
            full_size = std::max(full_size, s.size());
        });
        const auto report = worst_diameter(g, SearchMode::exhaustive_mode());
        CHECK(report.worst_diameter == full_worst);
        CHECK(report.max_irredundant_size == full_size);
        CHECK(max_irredundant_size(g) == full_size);
    }
}

TEST_CASE("shifted elements form one automorphism class in G and two in W for q = 2") {
    for (const std::uint32_t p : {3U, 5U, 7U}) {
        const auto params = GroupParams::make(p);
        const CodedGroup g(params, GroupKind::G);
        const auto reps = shifted_orbit_representatives(g);
        REQUIRE(reps.size() == 1);
        CHECK(g.decode_g(reps[0]).shift() != 0);
        CHECK(shifted_orbit_representatives(CodedGroup(params, GroupKind::W)).size() == 2);
    }
}

TEST_CASE("maximum irredundant size of G_7 is 3") {
    CHECK(max_irredundant_size(CodedGroup(GroupParams::make(7), GroupKind::G)) == 3);
}

TEST_CASE("sampled search is reproducible") {
    const CodedGroup w(GroupParams::make(7), GroupKind::W);
    const auto a = worst_diameter(w, SearchMode::sampled(200, 9));
    const auto b = worst_diameter(w, SearchMode::sampled(200, 9));
    CHECK(a.worst_diameter == b.worst_diameter);
    CHECK(a.witness == b.witness);
    CHECK(a.sets_examined == 200);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.worst_diameter <= 120);
    const auto threaded = worst_diameter(w, SearchMode::sampled(200, 9), 3);
    CHECK(threaded.worst_diameter == a.worst_diameter);
    CHECK(threaded.witness == a.witness);
}

TEST_CASE("cyclic groups and the center") {
    CHECK(cyclic_worst_diameter(1) == 0);
    CHECK(cyclic_worst_diameter(2) == 1);
    CHECK(cyclic_worst_diameter(3) == 1);
    CHECK(cyclic_worst_diameter(5) == 2);
}

TEST_CASE("Schreier inequality at p = 3") {
    const auto r = schreier_bound_check(GroupParams::make(3));
    CHECK(r.diam_w == 6);
    CHECK(r.diam_g == 3);
    CHECK(r.diam_t == 1);
    CHECK(r.general_bound == 2 * 3 * 1 + 1 + 3);
    CHECK(r.center_bound == 10);
    CHECK(r.general_holds);
    CHECK(r.center_holds);
}

}  // TEST_SUITE
