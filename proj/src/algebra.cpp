#include "wreathdiam/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wreathdiam {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

GroupParams GroupParams::make(std::uint32_t p, std::uint32_t q) {
    GroupParams params{p, q};
    params.validate();
    return params;
}

void GroupParams::validate() const {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + std::to_string(q));
    if (q == p) throw std::invalid_argument("q must differ from p");
    if (q >= (1U << 16)) throw std::invalid_argument("q too large");
    if (p >= (1U << 20)) throw std::invalid_argument("p too large");
}

std::uint32_t mult_order(std::uint64_t q, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("mult_order: modulus must be prime");
    const std::uint64_t base = q % p;
    if (base == 0) throw std::invalid_argument("mult_order: p divides q");
    std::uint64_t x = base;
    std::uint32_t o = 1;
    while (x != 1) {
        x = (x * base) % p;
        ++o;
    }
    return o;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t q, std::uint32_t p) {
    std::vector<bool> seen(p, false);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t start = 1; start < p; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t j = start;
        while (!seen[j]) {
            seen[j] = true;
            coset.push_back(static_cast<std::uint32_t>(j));
            j = (j * q) % p;
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

CyclotomicFactors factor_xp_minus_1(const GroupParams& params) {
    params.validate();
    const Residue q = params.q;
    const std::uint32_t p = params.p;
    const std::uint32_t order = mult_order(q, p);
    const auto cosets = cyclotomic_cosets(q, p);

    // Each coset sum e_C satisfies e_C^q = e_C mod x^p-1, so for every factor f
    // of s(x) it is congruent to a constant, and prod_a gcd(f, e_C - a) = f.
    // The e_C span the Frobenius-fixed subalgebra, hence separate all factors.
    std::vector<FqPoly> pending{FqPoly::all_ones(q, p)};
    std::vector<FqPoly> done;
    for (const auto& coset : cosets) {
        if (pending.empty()) break;
        std::vector<Residue> e(p, 0);
        for (auto j : coset) e[j] = 1;
        const FqPoly idempotent(q, std::move(e));
        std::vector<FqPoly> next;
        for (const auto& f : pending) {
            const FqPoly reduced = poly_mod(idempotent, f);
            for (Residue a = 0; a < q; ++a) {
                FqPoly g = poly_gcd(f, reduced - FqPoly::constant(q, a));
                if (g.degree() <= 0) continue;
                if (static_cast<std::uint32_t>(g.degree()) == order) {
                    done.push_back(std::move(g));
                } else {
                    next.push_back(std::move(g));
                }
            }
        }
        pending = std::move(next);
    }
    if (!pending.empty()) throw std::logic_error("factor_xp_minus_1: splitting did not terminate");
    std::sort(done.begin(), done.end(), canonical_less);

    CyclotomicFactors out{params, order, FqPoly(q, {q - 1, 1}), std::move(done)};
    if (out.k() * order != p - 1) throw std::logic_error("factor_xp_minus_1: wrong factor count");
    return out;
}

bool is_mersenne(std::uint32_t p) noexcept {
    const std::uint64_t n = static_cast<std::uint64_t>(p) + 1;
    return p >= 3 && is_prime(p) && (n & (n - 1)) == 0;
}

bool is_primitive_root(std::uint64_t q, std::uint32_t p) { return mult_order(q, p) == p - 1; }

RankReport rank_formula(const GroupParams& params) {
    params.validate();
    RankReport r;
    r.p = params.p;
    r.q = params.q;
    r.order = mult_order(params.q, params.p);
    r.k = (params.p - 1) / r.order;
    r.rank = 1 + r.k;
    const double pm1 = params.p - 1.0;
    const double log_pm1 = std::log(pm1) / std::log(static_cast<double>(params.q));
    r.upper_bound = 1.0 + pm1 / log_pm1;
    r.within_bounds = r.rank >= r.lower_bound && r.rank <= r.upper_bound;
    r.primitive_root = r.order == params.p - 1;
    r.mersenne = params.q == 2 && is_mersenne(params.p);
    if (r.mersenne) {
        std::uint32_t s = 0;
        while ((1ULL << s) < params.p + 1ULL) ++s;
        r.mersenne_exponent = s;
        r.mersenne_exact_rank = 1 + (params.p - 1) / s;
        r.quoted_min_order = std::log2(pm1);
        r.quoted_extreme_rank = pm1 / std::log2(pm1);
        r.quoted_forms_disagree = static_cast<double>(r.order) != r.quoted_min_order ||
                                  static_cast<double>(r.rank) != r.quoted_extreme_rank;
    }
    return r;
}

}  // namespace wreathdiam
