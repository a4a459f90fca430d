#include "wreathdiam/modstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wreathdiam {

bool Support::contains(std::size_t j) const { return std::binary_search(indices.begin(), indices.end(), j); }

Decomposition::Decomposition(const GroupParams& params)
    : params_(params), factors_(factor_xp_minus_1(params)), s_(s_poly(params)) {
    const auto& fs = factors_.simple_factors;
    idempotents_.reserve(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
        std::vector<CrtResidue> residues;
        residues.reserve(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            residues.push_back({FqPoly::constant(params.q, i == j ? 1 : 0), fs[i]});
        }
        idempotents_.push_back(crt_combine(residues));
    }
}

FqPoly Decomposition::project(const FqPoly& v, std::size_t j) const {
    if (j >= k()) throw std::out_of_range("factor index out of range");
    return poly_mod(v, factors()[j]);
}

std::vector<FqPoly> Decomposition::components(const FqPoly& v) const {
    std::vector<FqPoly> out;
    out.reserve(k());
    for (std::size_t j = 0; j < k(); ++j) out.push_back(poly_mod(v, factors()[j]));
    return out;
}

FqPoly Decomposition::combine(std::span<const FqPoly> components) const {
    if (components.size() != k()) throw std::invalid_argument("wrong number of components");
    FqPoly acc(params_.q);
    for (std::size_t j = 0; j < k(); ++j) acc += components[j] * idempotents_[j];
    return poly_mod(acc, s_);
}

Support Decomposition::support(const FqPoly& v) const {
    Support out;
    for (std::size_t j = 0; j < k(); ++j) {
        if (!poly_mod(v, factors()[j]).is_zero()) out.indices.push_back(j);
    }
    return out;
}

FqPoly Decomposition::block_modulus(const Support& block) const {
    FqPoly m = FqPoly::constant(params_.q, 1);
    for (auto j : block.indices) {
        if (j >= k()) throw std::out_of_range("factor index out of range");
        m *= factors()[j];
    }
    return m;
}

std::string GenerationCheck::describe() const {
    if (generates) return "generates";
    std::ostringstream os;
    os << "does not generate: ";
    if (missing_shift) {
        os << "every generator has shift 0";
    } else if (missing_factor) {
        os << "no generator has a nonzero component on simple factor " << *missing_factor;
        if (missing_factor_poly) os << " (" << missing_factor_poly->to_string() << ")";
    } else if (missing_parity) {
        os << "every generator has coordinate sum 0";
    }
    return os.str();
}

FqPoly commutator_with_c(const QuotientElement& y) {
    const auto c = QuotientElement::shift_generator(y.params());
    const auto w = c.inverse() * y.inverse() * c * y;
    return w.poly();
}

GenerationCheck generates_G(std::span<const QuotientElement> gens, const Decomposition& dec) {
    GenerationCheck out;
    const auto first = std::find_if(gens.begin(), gens.end(), [](const QuotientElement& g) { return g.shift() != 0; });
    if (first == gens.end()) {
        out.missing_shift = true;
        return out;
    }
    const auto alpha = normalize_to_c(*first);
    std::vector<bool> covered(dec.k(), false);
    for (auto it = gens.begin(); it != gens.end(); ++it) {
        if (it == first) continue;
        for (auto j : dec.support(commutator_with_c(alpha.apply(*it))).indices) covered[j] = true;
    }
    for (std::size_t j = 0; j < dec.k(); ++j) {
        if (!covered[j]) {
            out.missing_factor = j;
            out.missing_factor_poly = dec.factors()[j];
            return out;
        }
    }
    out.generates = true;
    return out;
}

GenerationCheck generates_W(std::span<const WreathElement> gens, const Decomposition& dec) {
    std::vector<QuotientElement> images;
    images.reserve(gens.size());
    for (const auto& g : gens) images.push_back(quotient_map(g));
    GenerationCheck out = generates_G(images, dec);
    if (!out.generates) return out;
    const bool odd = std::any_of(gens.begin(), gens.end(), [](const WreathElement& g) { return parity(g) != 0; });
    if (!odd) {
        out.generates = false;
        out.missing_parity = true;
    }
    return out;
}

std::vector<Block> greedy_blocks(std::span<const Support> supports, std::size_t k) {
    std::vector<bool> covered(k, false);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        Block b{i, {}};
        for (auto j : supports[i].indices) {
            if (j >= k) throw std::out_of_range("support index out of range");
            if (!covered[j]) b.block.indices.push_back(j);
        }
        if (b.block.empty()) continue;
        for (auto j : b.block.indices) covered[j] = true;
        blocks.push_back(std::move(b));
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw std::invalid_argument("greedy_blocks: supports do not cover every simple factor");
    }
    return blocks;
}

}  // namespace wreathdiam
