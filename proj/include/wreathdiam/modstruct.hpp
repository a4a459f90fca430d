#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreathdiam/algebra.hpp"
#include "wreathdiam/fq_poly.hpp"
#include "wreathdiam/wreath.hpp"

namespace wreathdiam {

/// Set of simple-component indices, sorted ascending. Indices are 0-based
/// positions in Decomposition::factors().
struct Support {
    std::vector<std::size_t> indices;

    [[nodiscard]] bool empty() const noexcept { return indices.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return indices.size(); }
    [[nodiscard]] bool contains(std::size_t j) const;
    friend bool operator==(const Support&, const Support&) = default;
};

/// V = M_1 x ... x M_k in polynomial coordinates: V = F_q[x]/(s(x)) with
/// s = f_1 ... f_k, each f_j irreducible of degree o_p(q).
class Decomposition {
public:
    explicit Decomposition(const GroupParams& params);

    [[nodiscard]] const GroupParams& params() const noexcept { return params_; }
    [[nodiscard]] const FqPoly& trivial_factor() const noexcept { return factors_.trivial_factor; }
    [[nodiscard]] const std::vector<FqPoly>& factors() const noexcept { return factors_.simple_factors; }
    [[nodiscard]] std::size_t k() const noexcept { return factors_.k(); }
    /// Common degree d of the simple factors, o_p(q).
    [[nodiscard]] std::uint32_t degree() const noexcept { return factors_.order; }
    [[nodiscard]] const FqPoly& s() const noexcept { return s_; }

    /// v mod f_j. Throws std::out_of_range for a bad index.
    [[nodiscard]] FqPoly project(const FqPoly& v, std::size_t j) const;
    [[nodiscard]] std::vector<FqPoly> components(const FqPoly& v) const;
    /// Inverse of components(): sum of comp_j times the j-th CRT idempotent.
    [[nodiscard]] FqPoly combine(std::span<const FqPoly> components) const;
    [[nodiscard]] Support support(const FqPoly& v) const;
    /// Product of the factors indexed by the block.
    [[nodiscard]] FqPoly block_modulus(const Support& block) const;

private:
    GroupParams params_;
    CyclotomicFactors factors_;
    FqPoly s_;
    std::vector<FqPoly> idempotents_;
};

/// Outcome of a generation test. When generation fails exactly one of the
/// witness fields explains why.
struct GenerationCheck {
    bool generates = false;
    /// No generator outside V (resp. U).
    bool missing_shift = false;
    /// W only: every generator has parity 0, so all lie in ker(epsilon).
    bool missing_parity = false;
    /// Factor index (0-based) that no generator reaches, measured after
    /// moving the first shifted generator to c.
    std::optional<std::size_t> missing_factor;
    std::optional<FqPoly> missing_factor_poly;

    [[nodiscard]] std::string describe() const;
};

/// V-part of the commutator [c, y] = c^-1 y^-1 c y, equal to x^{-i-1}(x-1)v for
/// y = (v, i). Its support equals the support of v.
FqPoly commutator_with_c(const QuotientElement& y);

GenerationCheck generates_G(std::span<const QuotientElement> gens, const Decomposition& dec);
GenerationCheck generates_W(std::span<const WreathElement> gens, const Decomposition& dec);

struct Block {
    std::size_t generator;  ///< position in the supports list
    Support block;
};

/// B_i = A_i minus the union of all earlier A_j, keeping only nonempty B_i.
/// Throws std::invalid_argument when the supports do not cover all k indices.
std::vector<Block> greedy_blocks(std::span<const Support> supports, std::size_t k);

}  // namespace wreathdiam
