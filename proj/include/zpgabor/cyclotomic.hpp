#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpgabor/rational.hpp"

namespace zpgabor {

/// Exact element of the cyclotomic field Q(zeta_p), p prime, zeta_p = e^{2*pi*i/p}.
///
/// Representation: coefficients on the power basis zeta^1 .. zeta^{p-1}, with the
/// constant term folded in via 1 + zeta + ... + zeta^{p-1} = 0. The form is
/// canonical: two elements are equal iff their coefficient vectors are equal,
/// and zero is the all-zeros vector. Immutable value; thread-safe to share.
class CycNum {
public:
    /// Zero element of Q(zeta_p).
    explicit CycNum(std::uint32_t p);

    static CycNum zero(std::uint32_t p) { return CycNum(p); }
    static CycNum one(std::uint32_t p) { return from_rational(p, Rational(1)); }
    static CycNum from_rational(std::uint32_t p, const Rational& q);

    /// zeta^k for 0 <= k < p. zeta^0 = 1 lands on the reduction relation.
    static CycNum root_power(std::uint32_t p, std::uint32_t k);

    /// Builds sum_{e=0}^{p-1} counts[e] * zeta^e and reduces to canonical form.
    static CycNum from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts);

    /// Same, with rational weights per exponent.
    static CycNum from_exponent_rationals(std::uint32_t p, std::span<const Rational> weights);

    /// Quadratic Gauss sum sum_{t in Z_p} zeta^{t^2}; |result|^2 = p. Odd p only.
    static CycNum gauss_sum(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    /// Coefficient of zeta^j, 1 <= j <= p-1.
    const Rational& coeff(std::uint32_t j) const { return c_[j - 1]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const { return *this == one(p_); }

    /// Rational value if the element lies in Q (iff all basis coefficients are
    /// equal; the common coefficient c encodes the rational -c).
    std::optional<Rational> as_rational() const;

    CycNum operator-() const;
    CycNum conj() const;  // zeta -> zeta^{-1}; ring automorphism
    CycNum abs_sq() const { return *this * conj(); }

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { a += b; return a; }
    friend CycNum operator-(CycNum a, const CycNum& b) { a -= b; return a; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);

    CycNum scalar_mul(const Rational& q) const;

    /// Multiplication by zeta^k: an index permutation plus constant folding, O(p).
    CycNum mul_root_power(std::uint32_t k) const;

    /// In-place a += b * zeta^k without building the intermediate, O(p).
    void add_mul_root_power(const CycNum& b, std::uint32_t k);

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Numerical embedding zeta -> e^{2*pi*i/p}. For coefficients of magnitude
    /// below ~2^40 the absolute error stays under p * 1e-12.
    std::complex<double> to_complex() const;

    std::string to_string() const;

private:
    void require_same_field(const CycNum& o) const;

    std::uint32_t p_;
    std::vector<Rational> c_;  // c_[j-1] is the coefficient of zeta^j
};

}  // namespace zpgabor
