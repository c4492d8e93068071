#include "zpgabor/fourier.hpp"

namespace zpgabor {

Window dft(const Window& g) {
    return detail::transform(g, -1, Rational(1, g.params().size), true);
}

FloatWindow dft(const FloatWindow& g) {
    return detail::transform(g, -1, 1.0 / static_cast<double>(g.params().size), true);
}

Window idft(const Window& g) { return detail::transform(g, +1, Rational(1), true); }

FloatWindow idft(const FloatWindow& g) { return detail::transform(g, +1, 1.0, true); }

Window dft_serial(const Window& g) {
    return detail::transform(g, -1, Rational(1, g.params().size), false);
}

Window idft_serial(const Window& g) { return detail::transform(g, +1, Rational(1), false); }

FloatWindow dft_serial(const FloatWindow& g) {
    return detail::transform(g, -1, 1.0 / static_cast<double>(g.params().size), false);
}

FloatWindow idft_serial(const FloatWindow& g) { return detail::transform(g, +1, 1.0, false); }

Verdict plancherel_check(const Window& g) {
    const GroupParams& gp = g.params();
    const Window gh = dft(g);
    CycNum lhs = CycNum::zero(gp.p);
    for (const CycNum& v : gh.values()) {
        if (!v.is_zero()) lhs += v.abs_sq();
    }
    CycNum rhs = CycNum::zero(gp.p);
    for (const CycNum& v : g.values()) {
        if (!v.is_zero()) rhs += v.abs_sq();
    }
    rhs = rhs.scalar_mul(Rational(1, gp.size));
    if (lhs == rhs) {
        return Verdict::ok("Plancherel identity holds",
                           {{"both_sides", lhs.to_string()}});
    }
    return Verdict::failure("Plancherel identity violated",
                            {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
}

CycNum autocorrelation_index(const Window& g, std::int64_t a_idx) {
    const GroupParams& gp = g.params();
    CycNum acc = CycNum::zero(gp.p);
    g.support().for_each_index([&](std::int64_t x) {
        const std::int64_t xs = index_sub(gp, x, a_idx);
        if (!g.support().contains(xs)) return;
        acc += g.value(xs) * g.value(x).conj();
    });
    return acc;
}

CycNum convolve_autocorrelation(const Window& g, const Point& a) {
    return autocorrelation_index(g, point_to_index(g.params(), a));
}

}  // namespace zpgabor
