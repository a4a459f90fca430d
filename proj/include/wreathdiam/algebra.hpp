#pragma once

#include <cstdint>
#include <vector>

#include "wreathdiam/fq_poly.hpp"

namespace wreathdiam {

bool is_prime(std::uint64_t n) noexcept;

/// Parameters of C_q wr C_p: p an odd prime, q a prime different from p.
struct GroupParams {
    std::uint32_t p = 3;
    std::uint32_t q = 2;

    /// Throws std::invalid_argument unless p is an odd prime and q a prime != p.
    static GroupParams make(std::uint32_t p, std::uint32_t q = 2);
    void validate() const;

    friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Smallest o >= 1 with q^o = 1 (mod p). Throws std::invalid_argument if p | q
/// or p is not prime.
std::uint32_t mult_order(std::uint64_t q, std::uint32_t p);

/// Cyclotomic cosets of q modulo p, excluding {0}. Each coset is sorted and
/// cosets are ordered by their smallest element.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t q, std::uint32_t p);

/// Irreducible factorization of x^p - 1 over F_q.
struct CyclotomicFactors {
    GroupParams params;
    std::uint32_t order = 0;          ///< o_p(q), the common degree of the simple factors
    FqPoly trivial_factor;            ///< x - 1
    std::vector<FqPoly> simple_factors;  ///< monic, sorted by canonical_less

    [[nodiscard]] std::size_t k() const noexcept { return simple_factors.size(); }
};

/// Splits s(x) = (x^p-1)/(x-1) using the Frobenius-fixed coset idempotents
/// sum_{j in C} x^j as separating elements (Berlekamp style), so the result is
/// deterministic. Factors are returned in canonical order.
CyclotomicFactors factor_xp_minus_1(const GroupParams& params);

bool is_mersenne(std::uint32_t p) noexcept;
bool is_primitive_root(std::uint64_t q, std::uint32_t p);

/// The rank r(G_p) = 1 + (p-1)/o_p(q) together with the bounds it is compared to.
struct RankReport {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t order = 0;
    std::uint32_t k = 0;
    std::uint32_t rank = 0;
    double lower_bound = 2.0;
    double upper_bound = 0.0;  ///< 1 + (p-1)/log2(p-1)
    bool within_bounds = false;
    bool primitive_root = false;
    bool mersenne = false;
    /// Mersenne case p = 2^s - 1 only: s, the exact rank 1 + (p-1)/s, and the
    /// closed-form expressions (p-1)/log2(p-1) and log2(p-1) quoted for this
    /// extreme. The closed forms do not match the integers exactly; both are kept.
    std::uint32_t mersenne_exponent = 0;
    std::uint32_t mersenne_exact_rank = 0;
    double quoted_extreme_rank = 0.0;
    double quoted_min_order = 0.0;
    bool quoted_forms_disagree = false;
};

RankReport rank_formula(const GroupParams& params);

}  // namespace wreathdiam
