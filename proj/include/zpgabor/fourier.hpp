#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zpgabor/group.hpp"
#include "zpgabor/verdict.hpp"
#include "zpgabor/window.hpp"

namespace zpgabor {

namespace detail {

template <typename S>
std::vector<S> zero_values(const GroupParams& gp);

template <>
inline std::vector<CycNum> zero_values<CycNum>(const GroupParams& gp) {
    return std::vector<CycNum>(static_cast<std::size_t>(gp.size), CycNum::zero(gp.p));
}

template <>
inline std::vector<std::complex<double>> zero_values<std::complex<double>>(const GroupParams& gp) {
    return std::vector<std::complex<double>>(static_cast<std::size_t>(gp.size));
}

/// g(x) * zeta^{sign * x.m} summed over the support, then scaled. Exact backend.
inline CycNum transform_entry(const Window& g, const std::vector<std::int64_t>& supp,
                              std::int64_t m, int sign, const Rational& norm) {
    const GroupParams& gp = g.params();
    const std::uint32_t p = gp.p;
    std::vector<Rational> acc(p);
    for (std::int64_t x : supp) {
        std::uint32_t e = dot_index(gp, x, m);
        if (sign < 0 && e != 0) e = p - e;
        const CycNum& v = g.value(x);
        for (std::uint32_t j = 1; j < p; ++j) {
            const Rational& cj = v.coeff(j);
            if (!cj.is_zero()) acc[(j + e) % p] += cj;
        }
    }
    CycNum out = CycNum::from_exponent_rationals(p, acc);
    return norm == Rational(1) ? out : out.scalar_mul(norm);
}

inline std::complex<double> transform_entry(const FloatWindow& g,
                                            const std::vector<std::int64_t>& supp,
                                            std::int64_t m, int sign, double norm) {
    const GroupParams& gp = g.params();
    const std::uint32_t p = gp.p;
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t x : supp) {
        std::uint32_t e = dot_index(gp, x, m);
        if (sign < 0 && e != 0) e = p - e;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(p);
        acc += g.value(x) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc * norm;
}

template <typename S, typename N>
WindowT<S> transform(const WindowT<S>& g, int sign, const N& norm, bool parallel) {
    const GroupParams& gp = g.params();
    const std::vector<std::int64_t> supp = g.support().indices();
    std::vector<S> out = zero_values<S>(gp);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t m = 0; m < gp.size; ++m) {
            out[static_cast<std::size_t>(m)] = transform_entry(g, supp, m, sign, norm);
        }
    } else {
        for (std::int64_t m = 0; m < gp.size; ++m) {
            out[static_cast<std::size_t>(m)] = transform_entry(g, supp, m, sign, norm);
        }
    }
    return WindowT<S>(gp, std::move(out));
}

}  // namespace detail

/// Forward transform: g_hat(m) = p^{-d} * sum_x zeta^{-x.m} g(x). Parallel over outputs.
Window dft(const Window& g);
FloatWindow dft(const FloatWindow& g);

/// Inverse transform: g(x) = sum_m G(m) zeta^{x.m}. No normalization factor;
/// the unique inverse of the forward convention above.
Window idft(const Window& g);
FloatWindow idft(const FloatWindow& g);

/// Single-threaded references for the kernels above; must agree bit-for-bit.
Window dft_serial(const Window& g);
Window idft_serial(const Window& g);
FloatWindow dft_serial(const FloatWindow& g);
FloatWindow idft_serial(const FloatWindow& g);

/// Exact check of sum_m |g_hat(m)|^2 = p^{-d} sum_x |g(x)|^2.
Verdict plancherel_check(const Window& g);

/// sum_x g(x-a) * conj(g(x)), exactly.
CycNum convolve_autocorrelation(const Window& g, const Point& a);
CycNum autocorrelation_index(const Window& g, std::int64_t a_idx);

}  // namespace zpgabor
