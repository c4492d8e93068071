#include "zpgabor/pairs.hpp"

#include <vector>

#include "zpgabor/fourier.hpp"
#include "zpgabor/json_io.hpp"

namespace zpgabor {

namespace {

nlohmann::json point_json(const GroupParams& g, std::int64_t idx) {
    return json_io::to_json(index_to_point(g, idx));
}

/// sum over x in E of zeta^{x.delta}: integer exponent counting, then one fold.
CycNum character_sum_over(const PointSet& e, std::int64_t delta_idx) {
    const GroupParams& g = e.params();
    std::vector<std::int64_t> counts(g.p, 0);
    e.for_each_index([&](std::int64_t x) { counts[dot_index(g, x, delta_idx)] += 1; });
    return CycNum::from_exponent_counts(g.p, counts);
}

CycNum weighted_character_sum(const WeightFn& w, std::int64_t delta_idx) {
    const GroupParams& g = w.params();
    std::vector<Rational> acc(g.p);
    w.support().for_each_index(
        [&](std::int64_t x) { acc[dot_index(g, x, delta_idx)] += w.value(x); });
    return CycNum::from_exponent_rationals(g.p, acc);
}

/// Pairwise orthogonality scan over b != b' in canonical order; nullopt on pass.
template <typename SumFn>
std::optional<std::pair<std::int64_t, std::int64_t>> first_nonorthogonal_pair(
    const GroupParams& g, const PointSet& b, const SumFn& char_sum) {
    const std::vector<std::int64_t> bs = b.indices();
    // The sum depends only on b - b'; cache verdicts per difference.
    std::vector<signed char> zero_by_delta(static_cast<std::size_t>(g.size), -1);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            const std::int64_t delta = index_sub(g, bs[i], bs[j]);
            signed char& memo = zero_by_delta[static_cast<std::size_t>(delta)];
            if (memo < 0) memo = char_sum(delta).is_zero() ? 1 : 0;
            if (memo == 0) return std::make_pair(bs[i], bs[j]);
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict is_spectral_pair(const PointSet& e, const PointSet& b) {
    if (e.params() != b.params()) throw std::invalid_argument("is_spectral_pair: parameter mismatch");
    if (e.is_empty()) return Verdict::precondition("is_spectral_pair: E must be nonempty");
    const GroupParams& g = e.params();
    if (b.size() != e.size()) {
        return Verdict::failure("|B| != |E|",
                                {{"kind", "size-mismatch"}, {"E_size", e.size()}, {"B_size", b.size()}});
    }
    auto bad = first_nonorthogonal_pair(g, b, [&](std::int64_t delta) {
        return character_sum_over(e, delta);
    });
    if (bad) {
        return Verdict::failure("nonzero character sum over E",
                                {{"kind", "non-orthogonal"},
                                 {"b", point_json(g, bad->first)},
                                 {"b_prime", point_json(g, bad->second)}});
    }
    return Verdict::ok("spectral pair", {{"size", e.size()}});
}

namespace {

Verdict cover_check(const PointSet& e, const PointSet& a, bool exact_cover) {
    if (e.params() != a.params()) throw std::invalid_argument("cover_check: parameter mismatch");
    const GroupParams& g = e.params();
    std::vector<std::int32_t> cover(static_cast<std::size_t>(g.size), 0);
    a.for_each_index([&](std::int64_t ai) {
        e.for_each_index([&](std::int64_t ei) { cover[static_cast<std::size_t>(index_add(g, ei, ai))] += 1; });
    });
    for (std::int64_t x = 0; x < g.size; ++x) {
        const std::int32_t c = cover[static_cast<std::size_t>(x)];
        if (c > 1 || (exact_cover && c != 1)) {
            return Verdict::failure(c > 1 ? "point covered more than once" : "point uncovered",
                                    {{"x", point_json(g, x)}, {"count", c}});
        }
    }
    nlohmann::json cert = {{"E_size", e.size()}, {"A_size", a.size()}};
    if (exact_cover) cert["cover"] = "each point exactly once";
    return Verdict::ok(exact_cover ? "tiling pair" : "packing", cert);
}

}  // namespace

Verdict is_tiling_pair(const PointSet& e, const PointSet& a) { return cover_check(e, a, true); }

Verdict is_packing(const PointSet& e, const PointSet& a) { return cover_check(e, a, false); }

Verdict weighted_spectrum_check(const WeightFn& w, const PointSet& b) {
    if (w.params() != b.params()) {
        throw std::invalid_argument("weighted_spectrum_check: parameter mismatch");
    }
    const GroupParams& g = w.params();
    if (w.support().is_empty()) {
        return Verdict::precondition("weighted_spectrum_check: supp(w) must be nonempty");
    }
    auto bad = first_nonorthogonal_pair(g, b, [&](std::int64_t delta) {
        return weighted_character_sum(w, delta);
    });
    if (bad) {
        return Verdict::failure("characters not orthogonal in L^2(w)",
                                {{"kind", "non-orthogonal"},
                                 {"b", point_json(g, bad->first)},
                                 {"b_prime", point_json(g, bad->second)}});
    }
    const std::int64_t dim = w.support().size();
    if (b.size() != dim) {
        return Verdict::failure("not complete in L^2(w): |B| != |supp(w)|",
                                {{"kind", "incomplete"}, {"B_size", b.size()}, {"dim", dim}});
    }
    return Verdict::ok("spectrum for L^2(w)", {{"dim", dim}});
}

namespace {

Verdict square_sum_identity_impl(const WeightFn& w, const PointSet& b, const Window& w_hat,
                                 std::int64_t x_idx) {
    const GroupParams& g = w.params();
    CycNum acc = CycNum::zero(g.p);
    b.for_each_index([&](std::int64_t bi) {
        const CycNum& v = w_hat.value(index_sub(g, x_idx, bi));
        if (!v.is_zero()) acc += v.abs_sq();
    });
    const CycNum expected =
        CycNum::from_rational(g.p, Rational(1, g.size) * Rational(1, g.size));
    if (acc == expected) return Verdict::ok("square-sum identity holds at x");
    return Verdict::failure("square-sum identity violated",
                            {{"x", point_json(g, x_idx)},
                             {"sum", acc.to_string()},
                             {"expected", expected.to_string()}});
}

std::optional<Verdict> square_sum_preconditions(const WeightFn& w, const PointSet& b) {
    if (w.mass() != Rational(1)) {
        return Verdict::precondition("square_sum_identity: total mass must be 1 (normalize first)",
                                     {{"kind", "mass"}, {"mass", w.mass().to_string()}});
    }
    const Verdict spec = weighted_spectrum_check(w, b);
    if (!spec.passed()) {
        return Verdict::precondition("square_sum_identity: (w, B) is not a weighted spectral pair",
                                     {{"kind", "not-a-spectrum"}, {"inner", spec.witness}});
    }
    return std::nullopt;
}

}  // namespace

Verdict square_sum_identity(const WeightFn& w, const PointSet& b, const Point& x) {
    if (auto pre = square_sum_preconditions(w, b)) return *pre;
    const Window w_hat = dft(w.window());
    return square_sum_identity_impl(w, b, w_hat, point_to_index(w.params(), x));
}

Verdict square_sum_identity_all(const WeightFn& w, const PointSet& b) {
    if (auto pre = square_sum_preconditions(w, b)) return *pre;
    const Window w_hat = dft(w.window());
    for (std::int64_t x = 0; x < w.params().size; ++x) {
        Verdict v = square_sum_identity_impl(w, b, w_hat, x);
        if (!v.passed()) return v;
    }
    return Verdict::ok("square-sum identity holds at every x", {{"points", w.params().size}});
}

}  // namespace zpgabor
