#include <stdexcept>

#include "zpgabor/fourier.hpp"
#include "zpgabor/gabor.hpp"
#include "zpgabor/numutil.hpp"
#include "zpgabor/search.hpp"

namespace zpgabor {

ParabolaDual make_parabola_dual_window(std::uint32_t p) {
    if (!is_prime(p) || p == 2) throw std::domain_error("make_parabola_dual_window: odd prime required");
    const GroupParams g(p, 2);

    std::vector<Point> pts;
    pts.reserve(p);
    for (std::uint64_t t = 0; t < p; ++t) {
        pts.push_back(make_point(g, {static_cast<std::int64_t>(t), static_cast<std::int64_t>((t * t) % p)}));
    }
    const PointSet parabola = PointSet::from_points(g, pts);

    const auto tiling = find_tiling_complement(parabola);
    const auto spectrum = find_spectrum(parabola);
    if (!tiling || !spectrum) {
        throw std::logic_error("make_parabola_dual_window: search failed on the parabola");
    }

    Window g_hat = dft(indicator_window(parabola));
    const std::int64_t expected_support = static_cast<std::int64_t>(p) * p - p + 1;
    if (g_hat.support().size() != expected_support) {
        throw std::logic_error("make_parabola_dual_window: unexpected dual support size");
    }
    ParabolaDual dual{std::move(g_hat), *spectrum, tiling->negate()};
    if (!is_orthonormal_basis(GaborSystem(dual.window, dual.b, dual.neg_a)).passed()) {
        throw std::logic_error("make_parabola_dual_window: dual system failed the basis check");
    }
    return dual;
}

}  // namespace zpgabor
