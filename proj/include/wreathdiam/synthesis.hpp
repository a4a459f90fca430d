#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathdiam/modstruct.hpp"
#include "wreathdiam/wreath.hpp"

namespace wreathdiam {

/// One letter x_i^{+-1}. Generator indices are 0-based positions in the
/// generating list the word is evaluated over.
struct Letter {
    std::size_t generator = 0;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of letters read left to right. Never freely reduced.
struct Word {
    std::vector<Letter> letters;

    [[nodiscard]] std::size_t length() const noexcept { return letters.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters.empty(); }
    [[nodiscard]] std::size_t count(std::size_t generator) const;
    [[nodiscard]] Word inverse() const;
    void append(const Word& other);
    void push(std::size_t generator, int exponent) { letters.push_back({generator, exponent}); }

    friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);

/// Left-to-right product of gens[i]^{+-1}. Throws std::out_of_range on a bad
/// index and std::invalid_argument on an exponent other than +-1.
template <class Element>
Element evaluate(const Word& word, std::span<const Element> gens, const GroupParams& params) {
    Element acc = Element::identity(params);
    for (const auto& l : word.letters) {
        if (l.generator >= gens.size()) throw std::out_of_range("word letter refers to a missing generator");
        if (l.exponent == 1) {
            acc = acc * gens[l.generator];
        } else if (l.exponent == -1) {
            acc = acc * gens[l.generator].inverse();
        } else {
            throw std::invalid_argument("word letters must have exponent +1 or -1");
        }
    }
    return acc;
}

class NotGeneratingError : public std::invalid_argument {
public:
    explicit NotGeneratingError(GenerationCheck check)
        : std::invalid_argument(check.describe()), check_(std::move(check)) {}
    [[nodiscard]] const GenerationCheck& check() const noexcept { return check_; }

private:
    GenerationCheck check_;
};

/// Horner word for w^f(c) = f(x^-1) w over the letters c and w:
///
///     word(f) = c^-1 word(g) c w^e      for f = x g + e
///
/// which unrolls to c^-n w^{f_n} c w^{f_{n-1}} ... c w^{f_0}, with w^{f_i}
/// written as f_i repetitions of w. Throws std::invalid_argument if deg f > d-1.
Word horner_word(const FqPoly& f, std::size_t d, std::size_t w_index, std::size_t c_index);

/// Exponents f_j with deg f_j < d_j and sum_j w_j^{f_j(c)} = v, where d_j is
/// the dimension of block j. Blocks are solved from the last one back; block j
/// is only touched by w_j and by generators of later blocks.
std::vector<FqPoly> solve_exponents(const FqPoly& v, std::span<const Block> blocks,
                                    std::span<const FqPoly> block_generators, const Decomposition& dec);

/// Word for V-elements over {c, w_2, ..., w_n} with all w_i in V. Caches the
/// block structure and the per-block inverses of the w_i.
class SpecialSynthesizer {
public:
    /// `ws` are the V-parts of the non-c generators, in caller order.
    /// Throws NotGeneratingError when their supports miss a factor.
    SpecialSynthesizer(const Decomposition& dec, std::vector<FqPoly> ws);

    [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::vector<FqPoly> exponents(const FqPoly& v) const;
    /// Letters c -> c_index and w_i -> w_indices[i].
    [[nodiscard]] Word word(const FqPoly& v, std::size_t c_index, std::span<const std::size_t> w_indices) const;

private:
    const Decomposition* dec_;
    std::vector<FqPoly> ws_;
    std::vector<Block> blocks_;
    std::vector<FqPoly> moduli_;
    std::vector<FqPoly> inverses_;
};

/// gens[0] must be exactly c and the rest must lie in V.
Word synthesize_special(const FqPoly& v, std::span<const QuotientElement> gens, const Decomposition& dec);

template <class Element>
struct SynthesisReport {
    Word word;
    std::size_t length = 0;
    std::size_t bound = 0;
    /// True when `bound` is the proven bound for q = 2, false for the
    /// implementation bound used when q > 2.
    bool proven_bound = false;
    Element target;
    bool verified = false;
};

/// (q+1)(p-1): 3(p-1) for q = 2.
std::size_t special_bound(const GroupParams& params);
/// 2(p-1) + 4(q-1)(p-1) + (p-1)/2: (13/2)(p-1) for q = 2.
std::size_t quotient_bound(const GroupParams& params);
/// 20(p-1) for q = 2, quotient_bound + 2p floor(q/2)^2 otherwise.
std::size_t wreath_bound(const GroupParams& params);

/// Word synthesis over a fixed generating set of G. The set is normalised once
/// with an automorphism alpha sending the first generator outside V to c; words
/// for alpha(target) over alpha(gens) are words for target over gens.
class QuotientSynthesizer {
public:
    /// Throws NotGeneratingError with the failing witness.
    QuotientSynthesizer(const Decomposition& dec, std::vector<QuotientElement> gens);

    [[nodiscard]] const std::vector<QuotientElement>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t c_index() const noexcept { return c_index_; }
    [[nodiscard]] const NormalizingAutomorphism& automorphism() const noexcept { return alpha_; }
    /// Verified word; throws std::logic_error if verification or the bound fails.
    [[nodiscard]] SynthesisReport<QuotientElement> synthesize(const QuotientElement& target) const;
    /// Same letters without verification, for callers that verify in W.
    [[nodiscard]] Word raw_word(const QuotientElement& target) const;

private:
    const Decomposition* dec_;
    std::vector<QuotientElement> gens_;
    std::size_t c_index_ = 0;
    NormalizingAutomorphism alpha_;
    std::vector<std::size_t> w_indices_;
    SpecialSynthesizer special_;
};

/// Word evaluating to z, built from a generator of nonzero shift and nonzero
/// parity a (g^p = z^a), or from x (shift 0, parity a) and y (nonzero shift,
/// parity 0) via (x y)^p = z^a; repeated to turn z^a into z.
/// Throws NotGeneratingError when no generator has nonzero parity or shift.
Word center_word(std::span<const WreathElement> gens);

class WreathSynthesizer {
public:
    WreathSynthesizer(const Decomposition& dec, std::vector<WreathElement> gens);

    [[nodiscard]] const std::vector<WreathElement>& generators() const noexcept { return gens_; }
    [[nodiscard]] const Word& center() const noexcept { return center_; }
    [[nodiscard]] SynthesisReport<WreathElement> synthesize(const WreathElement& target) const;

private:
    std::vector<WreathElement> gens_;
    QuotientSynthesizer quotient_;
    Word center_;
};

SynthesisReport<QuotientElement> synthesize_G(const QuotientElement& target, std::span<const QuotientElement> gens,
                                              const Decomposition& dec);
SynthesisReport<WreathElement> synthesize_W(const WreathElement& target, std::span<const WreathElement> gens,
                                            const Decomposition& dec);

}  // namespace wreathdiam
