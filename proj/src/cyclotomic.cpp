#include "zpgabor/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "zpgabor/numutil.hpp"

namespace zpgabor {

CycNum::CycNum(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::domain_error("CycNum: p must be prime");
    c_.resize(p - 1);
}

CycNum CycNum::from_rational(std::uint32_t p, const Rational& q) {
    // r * 1 = -r * (zeta + ... + zeta^{p-1})
    CycNum out(p);
    if (q.is_zero()) return out;
    const Rational neg = -q;
    for (auto& cj : out.c_) cj = neg;
    return out;
}

CycNum CycNum::root_power(std::uint32_t p, std::uint32_t k) {
    if (k >= p) throw std::invalid_argument("root_power: exponent out of range");
    if (k == 0) return one(p);
    CycNum out(p);
    out.c_[k - 1] = Rational(1);
    return out;
}

CycNum CycNum::from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
    if (counts.size() != p) throw std::invalid_argument("from_exponent_counts: need p entries");
    CycNum out(p);
    const std::int64_t c0 = counts[0];
    for (std::uint32_t j = 1; j < p; ++j) {
        const std::int64_t v = counts[j] - c0;
        if (v != 0) out.c_[j - 1] = Rational(v);
    }
    return out;
}

CycNum CycNum::from_exponent_rationals(std::uint32_t p, std::span<const Rational> weights) {
    if (weights.size() != p) throw std::invalid_argument("from_exponent_rationals: need p entries");
    CycNum out(p);
    const Rational& w0 = weights[0];
    for (std::uint32_t j = 1; j < p; ++j) out.c_[j - 1] = weights[j] - w0;
    return out;
}

CycNum CycNum::gauss_sum(std::uint32_t p) {
    if (!is_prime(p) || p == 2) throw std::domain_error("gauss_sum: odd prime required");
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint64_t t = 0; t < p; ++t) counts[(t * t) % p] += 1;
    return from_exponent_counts(p, counts);
}

bool CycNum::is_zero() const {
    for (const auto& cj : c_) {
        if (!cj.is_zero()) return false;
    }
    return true;
}

std::optional<Rational> CycNum::as_rational() const {
    const Rational& first = c_[0];
    for (std::size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != first) return std::nullopt;
    }
    return -first;
}

CycNum CycNum::operator-() const {
    CycNum out(p_);
    for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = -c_[j];
    return out;
}

CycNum CycNum::conj() const {
    CycNum out(p_);
    for (std::uint32_t j = 1; j < p_; ++j) out.c_[(p_ - j) - 1] = c_[j - 1];
    return out;
}

void CycNum::require_same_field(const CycNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycNum: mixed cyclotomic fields");
}

CycNum& CycNum::operator+=(const CycNum& o) {
    require_same_field(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    require_same_field(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    a.require_same_field(b);
    const std::uint32_t p = a.p_;

    // Rational factors reduce to an O(p) scalar multiple.
    if (auto qa = a.as_rational()) return b.scalar_mul(*qa);
    if (auto qb = b.as_rational()) return a.scalar_mul(*qb);

    // Accumulate over exponents 0..p-1, then fold the constant.
    std::vector<Rational> acc(p);
    for (std::uint32_t j = 1; j < p; ++j) {
        const Rational& aj = a.c_[j - 1];
        if (aj.is_zero()) continue;
        for (std::uint32_t k = 1; k < p; ++k) {
            const Rational& bk = b.c_[k - 1];
            if (bk.is_zero()) continue;
            acc[(j + k) % p] += aj * bk;
        }
    }
    return CycNum::from_exponent_rationals(p, acc);
}

CycNum CycNum::scalar_mul(const Rational& q) const {
    CycNum out(p_);
    if (q.is_zero()) return out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j].is_zero()) out.c_[j] = c_[j] * q;
    }
    return out;
}

CycNum CycNum::mul_root_power(std::uint32_t k) const {
    if (k >= p_) throw std::invalid_argument("mul_root_power: exponent out of range");
    if (k == 0) return *this;
    std::vector<Rational> acc(p_);
    for (std::uint32_t j = 1; j < p_; ++j) acc[(j + k) % p_] = c_[j - 1];
    return from_exponent_rationals(p_, acc);
}

void CycNum::add_mul_root_power(const CycNum& b, std::uint32_t k) {
    require_same_field(b);
    if (k >= p_) throw std::invalid_argument("add_mul_root_power: exponent out of range");
    if (k == 0) {
        *this += b;
        return;
    }
    // b * zeta^k sends zeta^j to zeta^{(j+k) mod p}; exponent 0 folds as -1 on every basis slot.
    const Rational& spill = b.c_[(p_ - k) - 1];  // lands on exponent 0
    const bool have_spill = !spill.is_zero();
    for (std::uint32_t j = 1; j < p_; ++j) {
        const std::uint32_t e = (j + k) % p_;
        if (e != 0) {
            const Rational& bj = b.c_[j - 1];
            if (!bj.is_zero()) c_[e - 1] += bj;
        }
    }
    if (have_spill) {
        for (std::uint32_t e = 1; e < p_; ++e) c_[e - 1] -= spill;
    }
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CycNum: mixed cyclotomic fields");
    return a.c_ == b.c_;
}

std::complex<double> CycNum::to_complex() const {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(p_);
    std::complex<double> acc(0.0, 0.0);
    for (std::uint32_t j = 1; j < p_; ++j) {
        const Rational& cj = c_[j - 1];
        if (cj.is_zero()) continue;
        const double angle = step * static_cast<double>(j);
        acc += cj.to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycNum::to_string() const {
    if (is_zero()) return "0";
    if (auto q = as_rational()) return q->to_string();
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t j = 1; j < p_; ++j) {
        const Rational& cj = c_[j - 1];
        if (cj.is_zero()) continue;
        if (!first) os << (cj.sign() > 0 ? "+" : "");
        os << cj.to_string() << "*z^" << j;
        first = false;
    }
    return os.str();
}

}  // namespace zpgabor
