#pragma once

#include <algorithm>
#include <random>

namespace wreathdiam {

template <class Rng>
std::vector<CodedGroup::Code> random_irredundant(const CodedGroup& group, Rng& rng) {
    std::uniform_int_distribution<CodedGroup::Code> pick(0, group.order() - 1);
    std::vector<CodedGroup::Code> gens;
    Subgroup h = subgroup_closure(group, gens);
    while (!h.whole) {
        CodedGroup::Code x = pick(rng);
        while (h.contains(x)) x = pick(rng);
        gens.push_back(x);
        h = extend_closure(group, h, gens);
    }
    gens = make_irredundant(group, std::move(gens));
    std::sort(gens.begin(), gens.end());
    return gens;
}

template <class Rng>
std::vector<CodedGroup::Code> random_generating(const CodedGroup& group, std::size_t size, Rng& rng) {
    std::uniform_int_distribution<CodedGroup::Code> pick(0, group.order() - 1);
    std::vector<CodedGroup::Code> gens(size);
    do {
        for (auto& g : gens) g = pick(rng);
    } while (!generates(group, gens));
    return gens;
}

}  // namespace wreathdiam
