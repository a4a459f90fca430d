#include "wreathdiam/fq_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace wreathdiam {

Residue PrimeField::inv(Residue a) const {
    a %= q;
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    // Fermat: a^(q-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (Residue e = q - 2; e > 0; e >>= 1) {
        if (e & 1U) result = (result * base) % q;
        base = (base * base) % q;
    }
    return static_cast<Residue>(result);
}

FqPoly::FqPoly(Residue q) : q_(q) {
    if (q < 2) throw std::invalid_argument("field modulus must be >= 2");
}

FqPoly::FqPoly(Residue q, std::vector<Residue> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    if (q < 2) throw std::invalid_argument("field modulus must be >= 2");
    for (auto& c : coeffs_) c %= q_;
    trim();
}

FqPoly::FqPoly(Residue q, std::initializer_list<Residue> coeffs)
    : FqPoly(q, std::vector<Residue>(coeffs)) {}

FqPoly FqPoly::constant(Residue q, Residue c) { return FqPoly(q, std::vector<Residue>{c}); }

FqPoly FqPoly::monomial(Residue q, std::size_t degree, Residue c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = c;
    return FqPoly(q, std::move(v));
}

FqPoly FqPoly::xn_minus_one(Residue q, std::size_t n) {
    std::vector<Residue> v(n + 1, 0);
    v[0] = q - 1;
    v[n] = 1;
    return FqPoly(q, std::move(v));
}

FqPoly FqPoly::all_ones(Residue q, std::size_t n) { return FqPoly(q, std::vector<Residue>(n, 1)); }

std::vector<Residue> FqPoly::dense(std::size_t n) const {
    if (coeffs_.size() > n) throw std::length_error("polynomial degree too large for dense form");
    std::vector<Residue> out(coeffs_);
    out.resize(n, 0);
    return out;
}

void FqPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void FqPoly::check_same_field(const FqPoly& other) const {
    if (q_ != other.q_) throw std::invalid_argument("polynomials over different fields");
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading()));
}

FqPoly FqPoly::scaled(Residue c) const {
    FqPoly out(*this);
    const auto f = field();
    for (auto& a : out.coeffs_) a = f.mul(a, c % q_);
    out.trim();
    return out;
}

FqPoly FqPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    FqPoly out(q_);
    out.coeffs_.assign(k, 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

FqPoly& FqPoly::operator+=(const FqPoly& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    const auto f = field();
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = f.add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    const auto f = field();
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = f.sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

FqPoly& FqPoly::operator*=(const FqPoly& rhs) {
    check_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    // Accumulate in 64 bits and reduce once per output coefficient.
    std::vector<std::uint64_t> acc(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            acc[i + j] += static_cast<std::uint64_t>(coeffs_[i]) * rhs.coeffs_[j];
            if (acc[i + j] >= (1ULL << 62)) acc[i + j] %= q_;
        }
    }
    coeffs_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) coeffs_[i] = static_cast<Residue>(acc[i] % q_);
    trim();
    return *this;
}

FqPoly FqPoly::operator-() const {
    FqPoly out(*this);
    const auto f = field();
    for (auto& a : out.coeffs_) a = f.neg(a);
    return out;
}

std::string FqPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Residue c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqPoly& f) { return os << f.to_string(); }

bool canonical_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto ai = a.coeff(static_cast<std::size_t>(i));
        const auto bi = b.coeff(static_cast<std::size_t>(i));
        if (ai != bi) return ai < bi;
    }
    return false;
}

FqPoly poly_mul(const FqPoly& a, const FqPoly& b) { return a * b; }

PolyDivMod poly_divmod(const FqPoly& a, const FqPoly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different fields");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto f = a.field();
    const Residue q = a.modulus();
    if (a.degree() < b.degree()) return {FqPoly(q), a};

    std::vector<Residue> rem(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Residue lead_inv = f.inv(bc.back());
    std::vector<Residue> quot(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const Residue c = rem[i];
        if (c == 0) continue;
        const Residue factor = f.mul(c, lead_inv);
        quot[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, bc[j]));
        }
    }
    rem.resize(db);
    return {FqPoly(q, std::move(quot)), FqPoly(q, std::move(rem))};
}

FqPoly poly_mod(const FqPoly& a, const FqPoly& m) { return poly_divmod(a, m).remainder; }

FqPoly poly_gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a;
    FqPoly y = b;
    while (!y.is_zero()) {
        FqPoly r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FqPoly poly_powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m) {
    FqPoly result = poly_mod(FqPoly::constant(m.modulus(), 1), m);
    FqPoly base = poly_mod(a, m);
    while (e > 0) {
        if (e & 1U) result = poly_mod(result * base, m);
        base = poly_mod(base * base, m);
        e >>= 1;
    }
    return result;
}

FqPoly invert_mod(const FqPoly& a, const FqPoly& m) {
    if (m.degree() < 1) throw std::domain_error("modulus must have positive degree");
    const Residue q = m.modulus();
    // Extended Euclid keeping only the coefficient of a.
    FqPoly r0 = m;
    FqPoly r1 = poly_mod(a, m);
    FqPoly s0(q);
    FqPoly s1 = FqPoly::constant(q, 1);
    while (!r1.is_zero()) {
        auto [quot, rem] = poly_divmod(r0, r1);
        FqPoly s2 = s0 - quot * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw NotInvertible("polynomial is not invertible modulo " + m.to_string());
    return poly_mod(s0.scaled(r0.field().inv(r0.leading())), m);
}

FqPoly crt_combine(std::span<const CrtResidue> residues) {
    if (residues.empty()) throw std::invalid_argument("crt_combine needs at least one residue");
    FqPoly value = poly_mod(residues[0].value, residues[0].modulus);
    FqPoly modulus = residues[0].modulus;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const auto& next = residues[i];
        if (poly_gcd(modulus, next.modulus).degree() != 0) {
            throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");
        }
        // value + modulus * t = next.value  (mod next.modulus)
        const FqPoly t = poly_mod((next.value - value) * invert_mod(modulus, next.modulus), next.modulus);
        value += modulus * t;
        modulus *= next.modulus;
        value = poly_mod(value, modulus);
    }
    return value;
}

}  // namespace wreathdiam
