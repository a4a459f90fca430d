#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wreathdiam/algebra.hpp"
#include "wreathdiam/fq_poly.hpp"

// Group arithmetic in W = C_q wr C_p and in G = W/T.
//
// An element of W is written v c^i with v in U = F_q^p. The multiplication is
//
//     (v, i) * (w, j) = (v + sigma^i(w), i + j)      sigma(w)_j = w_{j-1}
//
// so c acts on U as multiplication by x in F_q[x]/(x^p - 1), coordinate j
// being the coefficient of x^j. Consequences used throughout:
//
//     c w c^-1 = x w        c^-1 w c = x^-1 w
//
// and for a polynomial f we write w^f(c) for f(x^-1) w, the value of the word
// obtained by substituting conjugation by c for x.

namespace wreathdiam {

class WreathElement {
public:
    WreathElement(GroupParams params, std::vector<Residue> vec, std::uint32_t shift);

    static WreathElement identity(const GroupParams& params);
    /// c
    static WreathElement shift_generator(const GroupParams& params);
    /// e_j, shift 0
    static WreathElement basis(const GroupParams& params, std::uint32_t j);
    /// z^a: the constant vector (a, ..., a), shift 0
    static WreathElement central(const GroupParams& params, Residue a = 1);

    [[nodiscard]] const GroupParams& params() const noexcept { return params_; }
    [[nodiscard]] std::span<const Residue> vec() const noexcept { return vec_; }
    [[nodiscard]] std::uint32_t shift() const noexcept { return shift_; }
    [[nodiscard]] bool is_identity() const noexcept;
    /// Lies in T, the center.
    [[nodiscard]] bool is_central() const noexcept;

    [[nodiscard]] WreathElement inverse() const;
    [[nodiscard]] WreathElement pow(std::int64_t e) const;

    friend WreathElement operator*(const WreathElement& a, const WreathElement& b);
    friend bool operator==(const WreathElement&, const WreathElement&) = default;

    /// "(1,0,1)@2"
    [[nodiscard]] std::string to_string() const;

private:
    GroupParams params_;
    std::vector<Residue> vec_;
    std::uint32_t shift_;
};

std::ostream& operator<<(std::ostream& os, const WreathElement& g);

/// Element of G = W/T. The U-part is stored reduced modulo
/// s(x) = 1 + x + ... + x^{p-1}, i.e. as a polynomial of degree < p-1.
class QuotientElement {
public:
    QuotientElement(GroupParams params, FqPoly poly, std::uint32_t shift);

    static QuotientElement identity(const GroupParams& params);
    static QuotientElement shift_generator(const GroupParams& params);
    /// Element of V (shift 0).
    static QuotientElement from_v(const GroupParams& params, FqPoly poly);

    [[nodiscard]] const GroupParams& params() const noexcept { return params_; }
    [[nodiscard]] const FqPoly& poly() const noexcept { return poly_; }
    [[nodiscard]] std::uint32_t shift() const noexcept { return shift_; }
    [[nodiscard]] bool is_identity() const noexcept { return shift_ == 0 && poly_.is_zero(); }
    [[nodiscard]] bool in_v() const noexcept { return shift_ == 0; }

    [[nodiscard]] QuotientElement inverse() const;
    [[nodiscard]] QuotientElement pow(std::int64_t e) const;

    friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
    friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    GroupParams params_;
    FqPoly poly_;
    std::uint32_t shift_;
};

std::ostream& operator<<(std::ostream& os, const QuotientElement& g);

/// The central element a * (1, ..., 1).
struct CenterElement {
    GroupParams params;
    Residue scalar = 1;

    [[nodiscard]] WreathElement element() const { return WreathElement::central(params, scalar); }
};

/// s(x) = 1 + x + ... + x^{p-1}
FqPoly s_poly(const GroupParams& params);
/// f mod s(x), for any polynomial f (typically a U-vector of degree < p).
FqPoly reduce_mod_s(const GroupParams& params, const FqPoly& f);
/// x^k f mod s(x).
FqPoly mul_x_power_mod_s(const GroupParams& params, const FqPoly& f, std::int64_t k);
/// w^f(c) = f(x^-1) w mod s(x).
FqPoly module_power(const GroupParams& params, const FqPoly& w, const FqPoly& f);

/// W -> G: reduce the U-part modulo s(x). Kernel is T.
QuotientElement quotient_map(const WreathElement& a);
/// Section G -> W: the representative whose last coordinate is zero.
WreathElement lift(const QuotientElement& a);

/// epsilon: sum of the U-coordinates mod q; a homomorphism W -> F_q.
Residue parity(const WreathElement& a);

/// theta_m: v_j -> position m j, c^i -> c^{m i}. An automorphism of W and G.
class PowerAutomorphism {
public:
    /// Throws std::invalid_argument when m = 0 mod p.
    PowerAutomorphism(GroupParams params, std::int64_t m);

    [[nodiscard]] std::uint32_t multiplier() const noexcept { return m_; }
    [[nodiscard]] WreathElement apply(const WreathElement& g) const;
    [[nodiscard]] QuotientElement apply(const QuotientElement& g) const;
    [[nodiscard]] FqPoly apply_v(const FqPoly& v) const;
    [[nodiscard]] PowerAutomorphism inverse() const;
    /// (this o other)(g) = this(other(g))
    [[nodiscard]] PowerAutomorphism compose(const PowerAutomorphism& other) const;

private:
    GroupParams params_;
    std::uint32_t m_;
};

/// gamma_u: g -> u^-1 g u for u in V. On G this is (v, i) -> (v + (x^i - 1) u, i).
class ConjugationAutomorphism {
public:
    explicit ConjugationAutomorphism(QuotientElement u);

    [[nodiscard]] const QuotientElement& conjugator() const noexcept { return u_; }
    [[nodiscard]] QuotientElement apply(const QuotientElement& g) const;
    [[nodiscard]] ConjugationAutomorphism inverse() const;

private:
    QuotientElement u_;
};

/// gamma_u o theta_m.
class NormalizingAutomorphism {
public:
    NormalizingAutomorphism(PowerAutomorphism power, ConjugationAutomorphism conj)
        : power_(std::move(power)), conj_(std::move(conj)) {}

    [[nodiscard]] const PowerAutomorphism& power() const noexcept { return power_; }
    [[nodiscard]] const ConjugationAutomorphism& conjugation() const noexcept { return conj_; }
    [[nodiscard]] QuotientElement apply(const QuotientElement& g) const { return conj_.apply(power_.apply(g)); }
    [[nodiscard]] QuotientElement apply_inverse(const QuotientElement& g) const {
        return power_.inverse().apply(conj_.inverse().apply(g));
    }

private:
    PowerAutomorphism power_;
    ConjugationAutomorphism conj_;
};

/// u in V with gamma_u(target) = c, for a target with shift exactly 1:
/// u = -w (x - 1)^-1 mod s(x) where w is the V-part of the target.
QuotientElement solve_normalizer(const QuotientElement& target);

/// Automorphism sending g (nonzero shift e) to c: theta_m with the smallest
/// positive m, m e = 1 mod p, followed by the matching conjugation.
NormalizingAutomorphism normalize_to_c(const QuotientElement& g);

/// Inverse of a mod p for p prime, a != 0 mod p, as a value in [1, p).
std::uint32_t inverse_mod_p(std::int64_t a, std::uint32_t p);

}  // namespace wreathdiam
