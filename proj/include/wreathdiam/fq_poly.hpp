#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wreathdiam {

using Residue = std::uint32_t;

/// Arithmetic in the prime field F_q. q is assumed prime and small (< 2^16).
struct PrimeField {
    Residue q;

    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept { return (a + b) % q; }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept { return (a + q - b) % q; }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % q);
    }
    /// Throws std::domain_error on zero.
    [[nodiscard]] Residue inv(Residue a) const;
};

/// Dense polynomial over F_q, coefficients lowest degree first.
///
/// The coefficient vector is always trimmed: the zero polynomial has no
/// coefficients and any other polynomial has a nonzero leading coefficient.
class FqPoly {
public:
    explicit FqPoly(Residue q);
    FqPoly(Residue q, std::vector<Residue> coeffs);
    FqPoly(Residue q, std::initializer_list<Residue> coeffs);

    static FqPoly constant(Residue q, Residue c);
    static FqPoly monomial(Residue q, std::size_t degree, Residue c = 1);
    /// x^p - 1
    static FqPoly xn_minus_one(Residue q, std::size_t n);
    /// 1 + x + ... + x^{n-1}
    static FqPoly all_ones(Residue q, std::size_t n);

    [[nodiscard]] Residue modulus() const noexcept { return q_; }
    [[nodiscard]] PrimeField field() const noexcept { return PrimeField{q_}; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    [[nodiscard]] Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    [[nodiscard]] Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    [[nodiscard]] std::span<const Residue> coeffs() const noexcept { return coeffs_; }
    /// Coefficients padded with zeros to exactly n entries; throws if degree >= n.
    [[nodiscard]] std::vector<Residue> dense(std::size_t n) const;

    [[nodiscard]] FqPoly monic() const;
    [[nodiscard]] FqPoly scaled(Residue c) const;
    /// Multiplies by x^k.
    [[nodiscard]] FqPoly shifted(std::size_t k) const;

    FqPoly& operator+=(const FqPoly& rhs);
    FqPoly& operator-=(const FqPoly& rhs);
    FqPoly& operator*=(const FqPoly& rhs);

    friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
    friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
    friend FqPoly operator*(FqPoly a, const FqPoly& b) { return a *= b; }
    FqPoly operator-() const;

    friend bool operator==(const FqPoly&, const FqPoly&) = default;

    /// Compact text form, e.g. "x^3+x+1", "2x^2+1", "0".
    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    void check_same_field(const FqPoly& other) const;

    Residue q_;
    std::vector<Residue> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FqPoly& f);

/// Canonical order: by degree, then by coefficients from the highest power
/// down. For q = 2 this is the order of the polynomials read as binary numbers.
bool canonical_less(const FqPoly& a, const FqPoly& b);

struct PolyDivMod {
    FqPoly quotient;
    FqPoly remainder;
};

FqPoly poly_mul(const FqPoly& a, const FqPoly& b);
/// Throws std::domain_error when b is zero.
PolyDivMod poly_divmod(const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const FqPoly& a, const FqPoly& m);
/// Monic gcd; gcd(0, 0) = 0.
FqPoly poly_gcd(const FqPoly& a, const FqPoly& b);
/// a^e mod m by square-and-multiply.
FqPoly poly_powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m);

/// Inverse of a in F_q[x]/(m). Throws NotInvertible when gcd(a mod m, m) != 1.
FqPoly invert_mod(const FqPoly& a, const FqPoly& m);

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CrtResidue {
    FqPoly value;
    FqPoly modulus;
};

/// Unique r with r = value_i (mod modulus_i) and deg r < sum deg modulus_i.
/// Throws std::invalid_argument for non-coprime moduli or an empty list.
FqPoly crt_combine(std::span<const CrtResidue> residues);

}  // namespace wreathdiam
