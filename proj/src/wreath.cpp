#include "wreathdiam/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wreathdiam {

namespace {

std::uint32_t mod_p(std::int64_t a, std::uint32_t p) {
    const auto r = a % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void check_params(const GroupParams& a, const GroupParams& b) {
    if (!(a == b)) throw std::invalid_argument("group elements with different parameters");
}

// x^k f mod (x^p - 1) for deg f < p, as a dense vector of length p.
std::vector<Residue> rotate(const GroupParams& params, std::span<const Residue> f, std::uint32_t k) {
    std::vector<Residue> out(params.p, 0);
    for (std::size_t j = 0; j < f.size(); ++j) out[(j + k) % params.p] = f[j];
    return out;
}

// Reduce a dense length-p vector modulo s(x) in place; returns degree < p-1 poly.
FqPoly reduce_dense(const GroupParams& params, std::vector<Residue> v) {
    const PrimeField f{params.q};
    const Residue top = v[params.p - 1];
    if (top != 0) {
        for (std::uint32_t j = 0; j + 1 < params.p; ++j) v[j] = f.sub(v[j], top);
    }
    v.pop_back();
    return FqPoly(params.q, std::move(v));
}

}  // namespace

std::uint32_t inverse_mod_p(std::int64_t a, std::uint32_t p) {
    const std::uint32_t r = mod_p(a, p);
    if (r == 0) throw std::invalid_argument("not invertible modulo p");
    std::uint64_t result = 1;
    std::uint64_t base = r;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1U) result = (result * base) % p;
        base = (base * base) % p;
    }
    return static_cast<std::uint32_t>(result);
}

// ---------------------------------------------------------------------------
// WreathElement

WreathElement::WreathElement(GroupParams params, std::vector<Residue> vec, std::uint32_t shift)
    : params_(params), vec_(std::move(vec)), shift_(shift % params.p) {
    if (vec_.size() != params_.p) throw std::invalid_argument("wreath element vector must have length p");
    for (auto& a : vec_) a %= params_.q;
}

WreathElement WreathElement::identity(const GroupParams& params) {
    return {params, std::vector<Residue>(params.p, 0), 0};
}

WreathElement WreathElement::shift_generator(const GroupParams& params) {
    return {params, std::vector<Residue>(params.p, 0), 1};
}

WreathElement WreathElement::basis(const GroupParams& params, std::uint32_t j) {
    if (j >= params.p) throw std::out_of_range("basis index out of range");
    std::vector<Residue> v(params.p, 0);
    v[j] = 1;
    return {params, std::move(v), 0};
}

WreathElement WreathElement::central(const GroupParams& params, Residue a) {
    return {params, std::vector<Residue>(params.p, a % params.q), 0};
}

bool WreathElement::is_identity() const noexcept {
    return shift_ == 0 && std::all_of(vec_.begin(), vec_.end(), [](Residue a) { return a == 0; });
}

bool WreathElement::is_central() const noexcept {
    return shift_ == 0 && std::all_of(vec_.begin(), vec_.end(), [&](Residue a) { return a == vec_[0]; });
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
    check_params(a.params_, b.params_);
    const auto& params = a.params_;
    const PrimeField f{params.q};
    std::vector<Residue> out(a.vec_);
    for (std::uint32_t j = 0; j < params.p; ++j) {
        out[(j + a.shift_) % params.p] = f.add(out[(j + a.shift_) % params.p], b.vec_[j]);
    }
    return {params, std::move(out), (a.shift_ + b.shift_) % params.p};
}

WreathElement WreathElement::inverse() const {
    // (v, i)^-1 = (-sigma^{-i} v, -i)
    const PrimeField f{params_.q};
    const std::uint32_t back = (params_.p - shift_) % params_.p;
    std::vector<Residue> out(params_.p, 0);
    for (std::uint32_t j = 0; j < params_.p; ++j) out[(j + back) % params_.p] = f.neg(vec_[j]);
    return {params_, std::move(out), back};
}

WreathElement WreathElement::pow(std::int64_t e) const {
    WreathElement base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    WreathElement result = identity(params_);
    while (n > 0) {
        if (n & 1U) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::string WreathElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < vec_.size(); ++j) os << (j ? "," : "") << vec_[j];
    os << ")@" << shift_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const WreathElement& g) { return os << g.to_string(); }

// ---------------------------------------------------------------------------
// QuotientElement

QuotientElement::QuotientElement(GroupParams params, FqPoly poly, std::uint32_t shift)
    : params_(params), poly_(std::move(poly)), shift_(shift % params.p) {
    if (poly_.modulus() != params_.q) throw std::invalid_argument("polynomial over the wrong field");
    if (poly_.degree() >= static_cast<int>(params_.p) - 1) poly_ = reduce_mod_s(params_, poly_);
}

QuotientElement QuotientElement::identity(const GroupParams& params) { return {params, FqPoly(params.q), 0}; }

QuotientElement QuotientElement::shift_generator(const GroupParams& params) {
    return {params, FqPoly(params.q), 1};
}

QuotientElement QuotientElement::from_v(const GroupParams& params, FqPoly poly) {
    return {params, std::move(poly), 0};
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    check_params(a.params_, b.params_);
    return {a.params_, a.poly_ + mul_x_power_mod_s(a.params_, b.poly_, a.shift_),
            (a.shift_ + b.shift_) % a.params_.p};
}

QuotientElement QuotientElement::inverse() const {
    const std::uint32_t back = (params_.p - shift_) % params_.p;
    return {params_, -mul_x_power_mod_s(params_, poly_, back), back};
}

QuotientElement QuotientElement::pow(std::int64_t e) const {
    QuotientElement base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    QuotientElement result = identity(params_);
    while (n > 0) {
        if (n & 1U) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::string QuotientElement::to_string() const {
    std::ostringstream os;
    os << '[' << poly_.to_string() << "]@" << shift_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuotientElement& g) { return os << g.to_string(); }

// ---------------------------------------------------------------------------
// V-module helpers

FqPoly s_poly(const GroupParams& params) { return FqPoly::all_ones(params.q, params.p); }

FqPoly reduce_mod_s(const GroupParams& params, const FqPoly& f) {
    if (f.degree() < static_cast<int>(params.p) - 1) return f;
    if (f.degree() < static_cast<int>(params.p)) return reduce_dense(params, f.dense(params.p));
    return poly_mod(f, s_poly(params));
}

FqPoly mul_x_power_mod_s(const GroupParams& params, const FqPoly& f, std::int64_t k) {
    const FqPoly g = reduce_mod_s(params, f);
    if (g.is_zero()) return g;
    return reduce_dense(params, rotate(params, g.coeffs(), mod_p(k, params.p)));
}

FqPoly module_power(const GroupParams& params, const FqPoly& w, const FqPoly& f) {
    // f(x^-1) = sum_i f_i x^{p-i} mod x^p - 1
    std::vector<Residue> g(params.p, 0);
    const PrimeField field{params.q};
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const auto idx = (params.p - i % params.p) % params.p;
        g[idx] = field.add(g[idx], f.coeffs()[i]);
    }
    return reduce_mod_s(params, poly_mod(FqPoly(params.q, std::move(g)) * w, FqPoly::xn_minus_one(params.q, params.p)));
}

QuotientElement quotient_map(const WreathElement& a) {
    const auto& params = a.params();
    std::vector<Residue> v(a.vec().begin(), a.vec().end());
    return {params, reduce_dense(params, std::move(v)), a.shift()};
}

WreathElement lift(const QuotientElement& a) { return {a.params(), a.poly().dense(a.params().p), a.shift()}; }

Residue parity(const WreathElement& a) {
    const PrimeField f{a.params().q};
    Residue s = 0;
    for (auto c : a.vec()) s = f.add(s, c);
    return s;
}

// ---------------------------------------------------------------------------
// Automorphisms

PowerAutomorphism::PowerAutomorphism(GroupParams params, std::int64_t m) : params_(params), m_(mod_p(m, params.p)) {
    if (m_ == 0) throw std::invalid_argument("power automorphism multiplier must be a unit mod p");
}

WreathElement PowerAutomorphism::apply(const WreathElement& g) const {
    check_params(params_, g.params());
    std::vector<Residue> out(params_.p, 0);
    for (std::uint32_t j = 0; j < params_.p; ++j) {
        out[static_cast<std::uint64_t>(m_) * j % params_.p] = g.vec()[j];
    }
    return {params_, std::move(out), static_cast<std::uint32_t>(static_cast<std::uint64_t>(m_) * g.shift() % params_.p)};
}

QuotientElement PowerAutomorphism::apply(const QuotientElement& g) const {
    return quotient_map(apply(lift(g)));
}

FqPoly PowerAutomorphism::apply_v(const FqPoly& v) const {
    return apply(QuotientElement::from_v(params_, v)).poly();
}

PowerAutomorphism PowerAutomorphism::inverse() const { return {params_, inverse_mod_p(m_, params_.p)}; }

PowerAutomorphism PowerAutomorphism::compose(const PowerAutomorphism& other) const {
    check_params(params_, other.params_);
    return {params_, static_cast<std::int64_t>(static_cast<std::uint64_t>(m_) * other.m_ % params_.p)};
}

ConjugationAutomorphism::ConjugationAutomorphism(QuotientElement u) : u_(std::move(u)) {
    if (!u_.in_v()) throw std::invalid_argument("conjugator must lie in V");
}

QuotientElement ConjugationAutomorphism::apply(const QuotientElement& g) const {
    check_params(u_.params(), g.params());
    // u^-1 (v, i) u = (v + x^i u - u, i)
    const auto& params = u_.params();
    return {params, g.poly() + mul_x_power_mod_s(params, u_.poly(), g.shift()) - u_.poly(), g.shift()};
}

ConjugationAutomorphism ConjugationAutomorphism::inverse() const {
    return ConjugationAutomorphism(QuotientElement::from_v(u_.params(), -u_.poly()));
}

QuotientElement solve_normalizer(const QuotientElement& target) {
    if (target.shift() != 1) throw std::invalid_argument("solve_normalizer needs a target with shift 1");
    const auto& params = target.params();
    const Residue q = params.q;
    const FqPoly x_minus_one(q, {q - 1, 1});
    const FqPoly inv = invert_mod(x_minus_one, s_poly(params));
    return QuotientElement::from_v(params, poly_mod(-(target.poly() * inv), s_poly(params)));
}

NormalizingAutomorphism normalize_to_c(const QuotientElement& g) {
    if (g.shift() == 0) throw std::invalid_argument("normalize_to_c needs an element outside V");
    const auto& params = g.params();
    PowerAutomorphism power(params, inverse_mod_p(g.shift(), params.p));
    ConjugationAutomorphism conj(solve_normalizer(power.apply(g)));
    return {std::move(power), std::move(conj)};
}

}  // namespace wreathdiam
