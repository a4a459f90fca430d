#include "wreathdiam/synthesis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace wreathdiam {

namespace {

// Signed representative of a mod n in (-n/2, n/2].
std::int64_t signed_rep(std::uint64_t a, std::uint64_t n) {
    a %= n;
    return 2 * a > n ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(n) : static_cast<std::int64_t>(a);
}

void append_power(Word& w, const Word& base, std::int64_t times) {
    const Word unit = times < 0 ? base.inverse() : base;
    for (std::int64_t t = 0; t < std::abs(times); ++t) w.append(unit);
}

GenerationCheck missing_factor_check(const Decomposition& dec, std::span<const FqPoly> ws) {
    std::vector<bool> covered(dec.k(), false);
    for (const auto& w : ws) {
        for (auto j : dec.support(w).indices) covered[j] = true;
    }
    GenerationCheck check;
    check.generates = true;
    for (std::size_t j = 0; j < dec.k(); ++j) {
        if (!covered[j]) {
            check.generates = false;
            check.missing_factor = j;
            check.missing_factor_poly = dec.factors()[j];
            break;
        }
    }
    return check;
}

// h with deg h < d and h(x^-1) = t mod m, where d = deg m.
FqPoly reciprocal_solve(const FqPoly& t, const FqPoly& m) {
    const auto d = static_cast<std::size_t>(m.degree());
    const FqPoly u = poly_mod(t.shifted(d - 1), m);
    std::vector<Residue> h(d, 0);
    for (std::size_t i = 0; i < d; ++i) h[i] = u.coeff(d - 1 - i);
    return FqPoly(m.modulus(), std::move(h));
}

std::vector<QuotientElement> checked_quotient_gens(std::vector<QuotientElement> gens, const Decomposition& dec) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : gens) {
        if (!(g.params() == dec.params())) throw std::invalid_argument("generator parameters do not match");
    }
    auto check = generates_G(gens, dec);
    if (!check.generates) throw NotGeneratingError(std::move(check));
    return gens;
}

std::vector<WreathElement> checked_wreath_gens(std::vector<WreathElement> gens, const Decomposition& dec) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : gens) {
        if (!(g.params() == dec.params())) throw std::invalid_argument("generator parameters do not match");
    }
    auto check = generates_W(gens, dec);
    if (!check.generates) throw NotGeneratingError(std::move(check));
    return gens;
}

std::vector<QuotientElement> images(std::span<const WreathElement> gens) {
    std::vector<QuotientElement> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(quotient_map(g));
    return out;
}

std::size_t first_shifted(std::span<const QuotientElement> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].shift() != 0) return i;
    }
    throw std::logic_error("no generator outside V");
}

std::vector<std::size_t> other_indices(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != skip) out.push_back(i);
    }
    return out;
}

std::vector<FqPoly> commutators(std::span<const QuotientElement> gens, const NormalizingAutomorphism& alpha,
                                std::span<const std::size_t> indices) {
    std::vector<FqPoly> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(commutator_with_c(alpha.apply(gens[i])));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Word

std::size_t Word::count(std::size_t generator) const {
    return static_cast<std::size_t>(
        std::count_if(letters.begin(), letters.end(), [&](const Letter& l) { return l.generator == generator; }));
}

Word Word::inverse() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push(it->generator, -it->exponent);
    return out;
}

void Word::append(const Word& other) { letters.insert(letters.end(), other.letters.begin(), other.letters.end()); }

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

// ---------------------------------------------------------------------------
// Horner scheme and exponent solving

Word horner_word(const FqPoly& f, std::size_t d, std::size_t w_index, std::size_t c_index) {
    if (f.degree() >= static_cast<int>(d)) {
        throw std::invalid_argument("horner_word: degree " + std::to_string(f.degree()) + " exceeds " +
                                    std::to_string(d) + " - 1");
    }
    Word out;
    if (f.is_zero()) return out;
    const auto n = static_cast<std::size_t>(f.degree());
    for (std::size_t i = 0; i < n; ++i) out.push(c_index, -1);
    for (std::size_t i = n + 1; i-- > 0;) {
        for (Residue r = 0; r < f.coeff(i); ++r) out.push(w_index, 1);
        if (i > 0) out.push(c_index, 1);
    }
    return out;
}

std::vector<FqPoly> solve_exponents(const FqPoly& v, std::span<const Block> blocks,
                                    std::span<const FqPoly> block_generators, const Decomposition& dec) {
    if (blocks.size() != block_generators.size()) throw std::invalid_argument("one generator per block required");
    const auto& params = dec.params();
    FqPoly residual = poly_mod(v, dec.s());
    std::vector<FqPoly> out(blocks.size(), FqPoly(params.q));
    for (std::size_t j = blocks.size(); j-- > 0;) {
        const FqPoly m = dec.block_modulus(blocks[j].block);
        const FqPoly r = poly_mod(residual, m);
        if (r.is_zero()) continue;
        FqPoly inv(params.q);
        try {
            inv = invert_mod(block_generators[j], m);
        } catch (const NotInvertible&) {
            throw std::logic_error("solve_exponents: block generator vanishes on its own block");
        }
        out[j] = reciprocal_solve(poly_mod(r * inv, m), m);
        residual -= module_power(params, block_generators[j], out[j]);
    }
    if (!residual.is_zero()) throw std::logic_error("solve_exponents: nonzero residual after back-substitution");
    return out;
}

SpecialSynthesizer::SpecialSynthesizer(const Decomposition& dec, std::vector<FqPoly> ws)
    : dec_(&dec), ws_(std::move(ws)) {
    auto check = missing_factor_check(dec, ws_);
    if (!check.generates) throw NotGeneratingError(std::move(check));
    std::vector<Support> supports;
    supports.reserve(ws_.size());
    for (const auto& w : ws_) supports.push_back(dec.support(w));
    blocks_ = greedy_blocks(supports, dec.k());
    for (const auto& b : blocks_) {
        moduli_.push_back(dec.block_modulus(b.block));
        inverses_.push_back(invert_mod(ws_[b.generator], moduli_.back()));
    }
}

std::vector<FqPoly> SpecialSynthesizer::exponents(const FqPoly& v) const {
    const auto& params = dec_->params();
    FqPoly residual = poly_mod(v, dec_->s());
    std::vector<FqPoly> out(blocks_.size(), FqPoly(params.q));
    for (std::size_t j = blocks_.size(); j-- > 0;) {
        const FqPoly r = poly_mod(residual, moduli_[j]);
        if (r.is_zero()) continue;
        out[j] = reciprocal_solve(poly_mod(r * inverses_[j], moduli_[j]), moduli_[j]);
        residual -= module_power(params, ws_[blocks_[j].generator], out[j]);
    }
    if (!residual.is_zero()) throw std::logic_error("special synthesis: nonzero residual after back-substitution");
    return out;
}

Word SpecialSynthesizer::word(const FqPoly& v, std::size_t c_index, std::span<const std::size_t> w_indices) const {
    if (w_indices.size() != ws_.size()) throw std::invalid_argument("one letter index per w generator required");
    const auto exps = exponents(v);
    Word out;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const auto d = static_cast<std::size_t>(moduli_[j].degree());
        out.append(horner_word(exps[j], d, w_indices[blocks_[j].generator], c_index));
    }
    return out;
}

Word synthesize_special(const FqPoly& v, std::span<const QuotientElement> gens, const Decomposition& dec) {
    if (gens.empty() || !(gens[0] == QuotientElement::shift_generator(dec.params()))) {
        throw std::invalid_argument("synthesize_special: first generator must be c");
    }
    std::vector<FqPoly> ws;
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (!gens[i].in_v()) throw std::invalid_argument("synthesize_special: generators after c must lie in V");
        ws.push_back(gens[i].poly());
        idx.push_back(i);
    }
    const SpecialSynthesizer special(dec, std::move(ws));
    Word word = special.word(v, 0, idx);
    const auto target = QuotientElement::from_v(dec.params(), v);
    if (!(evaluate(word, gens, dec.params()) == target)) {
        throw std::logic_error("synthesize_special: word does not evaluate to the target");
    }
    const auto w_letters = word.length() - word.count(0);
    const auto p = dec.params().p;
    if (word.length() > special_bound(dec.params()) || (dec.params().q == 2 && w_letters > p - 1)) {
        throw std::logic_error("synthesize_special: length bound violated");
    }
    return word;
}

// ---------------------------------------------------------------------------
// Bounds

std::size_t special_bound(const GroupParams& params) {
    return static_cast<std::size_t>(params.q + 1) * (params.p - 1);
}

std::size_t quotient_bound(const GroupParams& params) {
    const std::size_t pm1 = params.p - 1;
    return 2 * pm1 + 4 * static_cast<std::size_t>(params.q - 1) * pm1 + pm1 / 2;
}

std::size_t wreath_bound(const GroupParams& params) {
    if (params.q == 2) return 20 * static_cast<std::size_t>(params.p - 1);
    const std::size_t half = params.q / 2;
    return quotient_bound(params) + 2 * static_cast<std::size_t>(params.p) * half * half;
}

// ---------------------------------------------------------------------------
// G

QuotientSynthesizer::QuotientSynthesizer(const Decomposition& dec, std::vector<QuotientElement> gens)
    : dec_(&dec),
      gens_(checked_quotient_gens(std::move(gens), dec)),
      c_index_(first_shifted(gens_)),
      alpha_(normalize_to_c(gens_[c_index_])),
      w_indices_(other_indices(gens_.size(), c_index_)),
      special_(dec, commutators(gens_, alpha_, w_indices_)) {}

Word QuotientSynthesizer::raw_word(const QuotientElement& target) const {
    const auto& params = dec_->params();
    const QuotientElement image = alpha_.apply(target);
    const Word special = special_.word(image.poly(), c_index_, w_indices_);

    Word out;
    out.letters.reserve(special.length() * 2 + params.p / 2);
    for (const auto& l : special.letters) {
        if (l.generator == c_index_) {
            out.letters.push_back(l);
            continue;
        }
        // w_i = [c, y_i] = c^-1 y_i^-1 c y_i
        Word comm;
        comm.push(c_index_, -1);
        comm.push(l.generator, -1);
        comm.push(c_index_, 1);
        comm.push(l.generator, 1);
        out.append(l.exponent == 1 ? comm : comm.inverse());
    }
    const auto tail = signed_rep(image.shift(), params.p);
    for (std::int64_t i = 0; i < std::abs(tail); ++i) out.push(c_index_, tail < 0 ? -1 : 1);
    return out;
}

SynthesisReport<QuotientElement> QuotientSynthesizer::synthesize(const QuotientElement& target) const {
    const auto& params = dec_->params();
    Word word = raw_word(target);
    if (!(evaluate(word, std::span<const QuotientElement>(gens_), params) == target)) {
        throw std::logic_error("quotient synthesis: word does not evaluate to " + target.to_string());
    }
    const std::size_t bound = quotient_bound(params);
    if (word.length() > bound) throw std::logic_error("quotient synthesis: length bound violated");
    const std::size_t length = word.length();
    return {std::move(word), length, bound, params.q == 2, target, true};
}

SynthesisReport<QuotientElement> synthesize_G(const QuotientElement& target, std::span<const QuotientElement> gens,
                                              const Decomposition& dec) {
    const QuotientSynthesizer synth(dec, std::vector<QuotientElement>(gens.begin(), gens.end()));
    return synth.synthesize(target);
}

// ---------------------------------------------------------------------------
// W

Word center_word(std::span<const WreathElement> gens) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    const auto& params = gens[0].params();
    Word base;
    Residue a = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].shift() != 0 && parity(gens[i]) != 0) {
            base.push(i, 1);
            a = parity(gens[i]);
            break;
        }
    }
    if (base.empty()) {
        std::size_t x = gens.size();
        std::size_t y = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (x == gens.size() && parity(gens[i]) != 0) x = i;
            if (y == gens.size() && gens[i].shift() != 0) y = i;
        }
        if (x == gens.size() || y == gens.size()) {
            GenerationCheck check;
            check.missing_parity = x == gens.size();
            check.missing_shift = !check.missing_parity;
            throw NotGeneratingError(std::move(check));
        }
        base.push(x, 1);
        base.push(y, 1);
        a = parity(gens[x]);
    }
    // base^p = z^a
    Word cycle;
    for (std::uint32_t i = 0; i < params.p; ++i) cycle.append(base);
    Word out;
    append_power(out, cycle, signed_rep(PrimeField{params.q}.inv(a), params.q));
    return out;
}

WreathSynthesizer::WreathSynthesizer(const Decomposition& dec, std::vector<WreathElement> gens)
    : gens_(checked_wreath_gens(std::move(gens), dec)),
      quotient_(dec, images(gens_)),
      center_(center_word(gens_)) {}

SynthesisReport<WreathElement> WreathSynthesizer::synthesize(const WreathElement& target) const {
    const auto& params = gens_[0].params();
    const std::span<const WreathElement> gens(gens_);
    Word word = quotient_.raw_word(quotient_map(target));
    const WreathElement residual = evaluate(word, gens, params).inverse() * target;
    if (!residual.is_central()) throw std::logic_error("wreath synthesis: residual outside the center");
    append_power(word, center_, signed_rep(residual.vec()[0], params.q));

    if (!(evaluate(word, gens, params) == target)) {
        throw std::logic_error("wreath synthesis: word does not evaluate to " + target.to_string());
    }
    const std::size_t bound = wreath_bound(params);
    if (word.length() > bound) throw std::logic_error("wreath synthesis: length bound violated");
    const std::size_t length = word.length();
    return {std::move(word), length, bound, params.q == 2, target, true};
}

SynthesisReport<WreathElement> synthesize_W(const WreathElement& target, std::span<const WreathElement> gens,
                                            const Decomposition& dec) {
    const WreathSynthesizer synth(dec, std::vector<WreathElement>(gens.begin(), gens.end()));
    return synth.synthesize(target);
}

}  // namespace wreathdiam
