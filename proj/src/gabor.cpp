#include "zpgabor/gabor.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zpgabor/json_io.hpp"
#include "zpgabor/numutil.hpp"

namespace zpgabor {

namespace {

nlohmann::json atom_json(const GroupParams& g, std::int64_t a_idx, std::int64_t b_idx) {
    return {{"a", json_io::to_json(index_to_point(g, a_idx))},
            {"b", json_io::to_json(index_to_point(g, b_idx))}};
}

// ---- scalar helpers shared by the exact and float paths ----------------------

CycNum norm_sq(const Window& g) {
    CycNum acc = CycNum::zero(g.params().p);
    for (const CycNum& v : g.values()) {
        if (!v.is_zero()) acc += v.abs_sq();
    }
    return acc;
}

double norm_sq(const FloatWindow& g) {
    double acc = 0.0;
    for (const std::complex<double>& v : g.values()) acc += std::norm(v);
    return acc;
}

// ---- difference scan ---------------------------------------------------------
//
// <atom_s, atom_t> = zeta^{a_t.(b_s-b_t)} * T(a_s - a_t, b_s - b_t) with
// T(da, db) = sum_y g(y - da) conj(g(y)) zeta^{y.db}, so orthogonality is a
// property of the difference alone. Differences are scanned in the order they
// are first realized by the canonical atom-pair enumeration; the first
// violating difference therefore yields exactly the first violating atom pair.

struct DiffEntry {
    std::int64_t da = 0;
    std::int64_t db = 0;
    std::int64_t s = 0;  // first realizing pair, canonical atom indices
    std::int64_t t = 0;
};

std::vector<DiffEntry> difference_schedule(const GroupParams& g,
                                           const std::vector<std::int64_t>& a_idx,
                                           const std::vector<std::int64_t>& b_idx) {
    const std::int64_t nb = static_cast<std::int64_t>(b_idx.size());
    const std::int64_t atoms = static_cast<std::int64_t>(a_idx.size()) * nb;
    std::vector<DiffEntry> order;
    std::unordered_set<std::int64_t> seen;
    for (std::int64_t s = 0; s < atoms; ++s) {
        const std::int64_t as = a_idx[static_cast<std::size_t>(s / nb)];
        const std::int64_t bs = b_idx[static_cast<std::size_t>(s % nb)];
        for (std::int64_t t = s + 1; t < atoms; ++t) {
            const std::int64_t da = index_sub(g, as, a_idx[static_cast<std::size_t>(t / nb)]);
            const std::int64_t db = index_sub(g, bs, b_idx[static_cast<std::size_t>(t % nb)]);
            if (seen.insert(da * g.size + db).second) {
                order.push_back({da, db, s, t});
            }
        }
    }
    return order;
}

// g(y - da) * conj(g(y)) over y, as a dense value table. Exact path.
std::vector<CycNum> shifted_product(const Window& g, const Window& gconj, std::int64_t da) {
    const GroupParams& gp = g.params();
    std::vector<CycNum> h(static_cast<std::size_t>(gp.size), CycNum::zero(gp.p));
    g.support().for_each_index([&](std::int64_t y) {
        const std::int64_t ys = index_sub(gp, y, da);
        if (!g.support().contains(ys)) return;
        h[static_cast<std::size_t>(y)] = g.value(ys) * gconj.value(y);
    });
    return h;
}

std::vector<std::complex<double>> shifted_product(const FloatWindow& g, const FloatWindow& gconj,
                                                  std::int64_t da) {
    const GroupParams& gp = g.params();
    std::vector<std::complex<double>> h(static_cast<std::size_t>(gp.size));
    for (std::int64_t y = 0; y < gp.size; ++y) {
        const std::int64_t ys = index_sub(gp, y, da);
        h[static_cast<std::size_t>(y)] =
            g.value(ys) * gconj.value(y);
    }
    return h;
}

bool gram_entry_is_zero(const GroupParams& gp, const std::vector<CycNum>& h, std::int64_t db,
                        double /*tol*/) {
    std::vector<Rational> acc(gp.p);
    for (std::int64_t y = 0; y < gp.size; ++y) {
        const CycNum& v = h[static_cast<std::size_t>(y)];
        if (v.is_zero()) continue;
        const std::uint32_t e = dot_index(gp, y, db);
        for (std::uint32_t j = 1; j < gp.p; ++j) {
            const Rational& cj = v.coeff(j);
            if (!cj.is_zero()) acc[(j + e) % gp.p] += cj;
        }
    }
    return CycNum::from_exponent_rationals(gp.p, acc).is_zero();
}

bool gram_entry_is_zero(const GroupParams& gp, const std::vector<std::complex<double>>& h,
                        std::int64_t db, double tol) {
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t y = 0; y < gp.size; ++y) {
        const std::uint32_t e = dot_index(gp, y, db);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(gp.p);
        acc += h[static_cast<std::size_t>(y)] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return std::abs(acc) <= tol;
}

template <typename S>
WindowT<S> conj_window(const WindowT<S>& g) {
    std::vector<S> values;
    values.reserve(g.values().size());
    for (const S& v : g.values()) values.push_back(scalar_conj(v));
    return WindowT<S>(g.params(), std::move(values));
}

/// First violating difference in first-encounter order, or nullopt. Chunked:
/// entries inside a chunk are evaluated in parallel, chunks in sequence so a
/// violation found early skips the rest of the grid.
template <typename S>
std::optional<DiffEntry> scan_differences(const GaborSystemT<S>& sys, double tol) {
    const GroupParams& gp = sys.params();
    const WindowT<S> gconj = conj_window(sys.window());
    const std::vector<DiffEntry> order =
        difference_schedule(gp, sys.translations().indices(), sys.modulations().indices());
    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

    std::unordered_map<std::int64_t, std::vector<S>> h_cache;
    const std::size_t chunk = 64;
    for (std::size_t lo = 0; lo < order.size(); lo += chunk) {
        const std::size_t hi = std::min(order.size(), lo + chunk);

        std::vector<std::int64_t> missing;
        for (std::size_t i = lo; i < hi; ++i) {
            if (!h_cache.count(order[i].da)) {
                h_cache.emplace(order[i].da, std::vector<S>{});
                missing.push_back(order[i].da);
            }
        }
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t mi = 0; mi < static_cast<std::int64_t>(missing.size()); ++mi) {
            const std::int64_t da = missing[static_cast<std::size_t>(mi)];
            auto h = shifted_product(sys.window(), gconj, da);
            h_cache.at(da).swap(h);  // slot pre-created above; lookup only
        }

        std::int64_t first_bad = kNone;
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
        for (std::int64_t i = static_cast<std::int64_t>(lo); i < static_cast<std::int64_t>(hi); ++i) {
            const DiffEntry& e = order[static_cast<std::size_t>(i)];
            if (!gram_entry_is_zero(gp, h_cache.at(e.da), e.db, tol)) {
                if (i < first_bad) first_bad = i;
            }
        }
        if (first_bad != kNone) return order[static_cast<std::size_t>(first_bad)];
    }
    return std::nullopt;
}

}  // namespace

CycNum gabor_inner(const Window& g, const Atom& t1, const Atom& t2) {
    const GroupParams& gp = g.params();
    const std::int64_t a1 = point_to_index(gp, t1.a);
    const std::int64_t a2 = point_to_index(gp, t2.a);
    const std::int64_t db = index_sub(gp, point_to_index(gp, t1.b), point_to_index(gp, t2.b));
    std::vector<Rational> acc(gp.p);
    for (std::int64_t x = 0; x < gp.size; ++x) {
        const std::int64_t x1 = index_sub(gp, x, a1);
        const std::int64_t x2 = index_sub(gp, x, a2);
        if (!g.support().contains(x1) || !g.support().contains(x2)) continue;
        const CycNum prod = g.value(x1) * g.value(x2).conj();
        const std::uint32_t e = dot_index(gp, x, db);
        for (std::uint32_t j = 1; j < gp.p; ++j) {
            const Rational& cj = prod.coeff(j);
            if (!cj.is_zero()) acc[(j + e) % gp.p] += cj;
        }
    }
    return CycNum::from_exponent_rationals(gp.p, acc);
}

std::complex<double> gabor_inner(const FloatWindow& g, const Atom& t1, const Atom& t2) {
    const GroupParams& gp = g.params();
    const std::int64_t a1 = point_to_index(gp, t1.a);
    const std::int64_t a2 = point_to_index(gp, t2.a);
    const std::int64_t db = index_sub(gp, point_to_index(gp, t1.b), point_to_index(gp, t2.b));
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t x = 0; x < gp.size; ++x) {
        const std::uint32_t e = dot_index(gp, x, db);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(gp.p);
        acc += g.value(index_sub(gp, x, a1)) * std::conj(g.value(index_sub(gp, x, a2))) *
               std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

FloatGaborSystem to_float(const GaborSystem& sys) {
    return FloatGaborSystem(to_float(sys.window()), sys.translations(), sys.modulations());
}

namespace {

template <typename S>
std::optional<DiffEntry> scan_differences_serial(const GaborSystemT<S>& sys, double tol) {
    const GroupParams& gp = sys.params();
    const std::vector<std::int64_t> a_idx = sys.translations().indices();
    const std::vector<std::int64_t> b_idx = sys.modulations().indices();
    const std::int64_t nb = static_cast<std::int64_t>(b_idx.size());
    const std::int64_t atoms = sys.atom_count();
    std::unordered_map<std::int64_t, signed char> verdicts;  // diff key -> zero?
    const WindowT<S> gconj = conj_window(sys.window());
    for (std::int64_t s = 0; s < atoms; ++s) {
        for (std::int64_t t = s + 1; t < atoms; ++t) {
            const std::int64_t da =
                index_sub(gp, a_idx[static_cast<std::size_t>(s / nb)], a_idx[static_cast<std::size_t>(t / nb)]);
            const std::int64_t db =
                index_sub(gp, b_idx[static_cast<std::size_t>(s % nb)], b_idx[static_cast<std::size_t>(t % nb)]);
            const std::int64_t key = da * gp.size + db;
            auto it = verdicts.find(key);
            if (it == verdicts.end()) {
                const auto h = shifted_product(sys.window(), gconj, da);
                it = verdicts.emplace(key, gram_entry_is_zero(gp, h, db, tol) ? 1 : 0).first;
            }
            if (it->second == 0) return DiffEntry{da, db, s, t};
        }
    }
    return std::nullopt;
}

template <typename S>
Verdict orthonormal_basis_impl(const GaborSystemT<S>& sys, const BasisCheckOptions& opts,
                               bool serial, bool naive_pairs);

// Exact-path specifics live in small overloads so one template drives both backends.

bool norm_is_unit(const CycNum& nsq) { return nsq.is_one(); }
bool norm_is_unit(double nsq) { return std::abs(nsq - 1.0) <= 1e-9; }

bool norm_is_zero(const CycNum& nsq) { return nsq.is_zero(); }
bool norm_is_zero(double nsq) { return nsq == 0.0; }

nlohmann::json norm_json(const CycNum& nsq) { return nsq.to_string(); }
nlohmann::json norm_json(double nsq) { return nsq; }

}  // namespace

namespace {

template <typename S>
Verdict basis_check(const GaborSystemT<S>& sys, const BasisCheckOptions& opts, bool serial) {
    const GroupParams& gp = sys.params();
    const auto nsq = norm_sq(sys.window());

    nlohmann::json cert = {{"atoms", sys.atom_count()},
                           {"dimension", gp.size},
                           {"norm_sq", norm_json(nsq)}};
    if constexpr (std::is_same_v<S, std::complex<double>>) {
        cert["backend"] = "float";
        cert["authoritative"] = false;
        cert["tolerance"] = opts.float_tolerance;
    } else {
        cert["backend"] = "exact";
    }

    if (norm_is_zero(nsq)) {
        return Verdict::failure("zero window", {{"kind", "zero-window"}}, cert);
    }
    if (!opts.normalization_insensitive && !norm_is_unit(nsq)) {
        return Verdict::precondition("window norm is not 1 (normalization-insensitive mode not requested)",
                                     {{"kind", "norm"}, {"norm_sq", norm_json(nsq)}});
    }
    if (sys.atom_count() != gp.size) {
        return Verdict::failure("not complete: |A| * |B| != p^d",
                                {{"kind", "count"},
                                 {"A_size", sys.translations().size()},
                                 {"B_size", sys.modulations().size()},
                                 {"dimension", gp.size}},
                                cert);
    }

    double tol = 0.0;
    if constexpr (std::is_same_v<S, std::complex<double>>) tol = opts.float_tolerance;

    std::optional<DiffEntry> bad;
    if constexpr (std::is_same_v<S, std::complex<double>>) {
        // Normalize so the tolerance is absolute on unit-norm atoms.
        std::vector<std::complex<double>> scaled = sys.window().values();
        const double scale = 1.0 / std::sqrt(norm_sq(sys.window()));
        for (auto& v : scaled) v *= scale;
        FloatGaborSystem unit(FloatWindow(gp, std::move(scaled)), sys.translations(), sys.modulations());
        bad = serial ? scan_differences_serial(unit, tol) : scan_differences(unit, tol);
    } else {
        bad = serial ? scan_differences_serial(sys, tol) : scan_differences(sys, tol);
    }

    if (bad) {
        const std::vector<std::int64_t> a_idx = sys.translations().indices();
        const std::vector<std::int64_t> b_idx = sys.modulations().indices();
        const std::int64_t nb = static_cast<std::int64_t>(b_idx.size());
        nlohmann::json witness = {
            {"kind", "non-orthogonal"},
            {"atom", atom_json(gp, a_idx[static_cast<std::size_t>(bad->s / nb)],
                               b_idx[static_cast<std::size_t>(bad->s % nb)])},
            {"atom_prime", atom_json(gp, a_idx[static_cast<std::size_t>(bad->t / nb)],
                                     b_idx[static_cast<std::size_t>(bad->t % nb)])}};
        return Verdict::failure("atoms not pairwise orthogonal", witness, cert);
    }
    return Verdict::ok("orthonormal basis (scale-free)", cert);
}

}  // namespace

Verdict is_orthonormal_basis(const GaborSystem& sys, const BasisCheckOptions& opts) {
    return basis_check(sys, opts, false);
}

Verdict is_orthonormal_basis(const FloatGaborSystem& sys, const BasisCheckOptions& opts) {
    return basis_check(sys, opts, false);
}

namespace {

template <typename S>
Verdict naive_basis_check(const GaborSystemT<S>& sys, const BasisCheckOptions& opts) {
    // Same contract as basis_check but scanning atom pairs directly.
    const GroupParams& gp = sys.params();
    const auto nsq = norm_sq(sys.window());
    nlohmann::json cert = {{"atoms", sys.atom_count()},
                           {"dimension", gp.size},
                           {"norm_sq", norm_json(nsq)}};

    if (norm_is_zero(nsq)) return Verdict::failure("zero window", {{"kind", "zero-window"}}, cert);
    if (!opts.normalization_insensitive && !norm_is_unit(nsq)) {
        return Verdict::precondition("window norm is not 1 (normalization-insensitive mode not requested)",
                                     {{"kind", "norm"}, {"norm_sq", norm_json(nsq)}});
    }
    if (sys.atom_count() != gp.size) {
        return Verdict::failure("not complete: |A| * |B| != p^d",
                                {{"kind", "count"},
                                 {"A_size", sys.translations().size()},
                                 {"B_size", sys.modulations().size()},
                                 {"dimension", gp.size}},
                                cert);
    }

    WindowT<S> win = sys.window();
    if constexpr (std::is_same_v<S, std::complex<double>>) {
        std::vector<std::complex<double>> scaled = win.values();
        const double scale = 1.0 / std::sqrt(nsq);
        for (auto& v : scaled) v *= scale;
        win = FloatWindow(gp, std::move(scaled));
    }

    const std::vector<Point> as = sys.translations().points();
    const std::vector<Point> bs = sys.modulations().points();
    const std::int64_t nb = static_cast<std::int64_t>(bs.size());
    const std::int64_t atoms = sys.atom_count();
    for (std::int64_t s = 0; s < atoms; ++s) {
        const Atom at_s{as[static_cast<std::size_t>(s / nb)], bs[static_cast<std::size_t>(s % nb)]};
        for (std::int64_t t = s + 1; t < atoms; ++t) {
            const Atom at_t{as[static_cast<std::size_t>(t / nb)], bs[static_cast<std::size_t>(t % nb)]};
            const auto ip = gabor_inner(win, at_s, at_t);
            bool zero;
            if constexpr (std::is_same_v<S, std::complex<double>>) {
                zero = std::abs(ip) <= opts.float_tolerance;
            } else {
                zero = ip.is_zero();
            }
            if (!zero) {
                nlohmann::json witness = {{"kind", "non-orthogonal"},
                                          {"atom", {{"a", json_io::to_json(at_s.a)}, {"b", json_io::to_json(at_s.b)}}},
                                          {"atom_prime", {{"a", json_io::to_json(at_t.a)}, {"b", json_io::to_json(at_t.b)}}}};
                return Verdict::failure("atoms not pairwise orthogonal", witness, cert);
            }
        }
    }
    return Verdict::ok("orthonormal basis (scale-free)", cert);
}

}  // namespace

Verdict is_orthonormal_basis_serial(const GaborSystem& sys, const BasisCheckOptions& opts) {
    return naive_basis_check(sys, opts);
}

Verdict is_orthonormal_basis_serial(const FloatGaborSystem& sys, const BasisCheckOptions& opts) {
    return naive_basis_check(sys, opts);
}

GaborSystem fourier_dual(const GaborSystem& sys) {
    return GaborSystem(dft(sys.window()), sys.modulations(), sys.translations().negate());
}

Verdict indicator_equivalence_check(const PointSet& e, const PointSet& a, const PointSet& b) {
    if (e.params() != a.params() || e.params() != b.params()) {
        throw std::invalid_argument("indicator_equivalence_check: parameter mismatch");
    }
    if (e.is_empty()) return Verdict::precondition("indicator_equivalence_check: E must be nonempty");

    const Verdict basis = is_orthonormal_basis(GaborSystem(indicator_window(e), a, b));
    const Verdict spectral = is_spectral_pair(e, b);
    const Verdict tiling = is_tiling_pair(e, a);
    const bool rhs = spectral.passed() && tiling.passed();

    nlohmann::json cert = {{"basis", basis.passed()},
                           {"spectral", spectral.passed()},
                           {"tiling", tiling.passed()}};
    if (basis.passed() == rhs) {
        return Verdict::ok(rhs ? "both sides hold" : "both sides fail", cert);
    }
    return Verdict::failure("equivalence violated: basis and spectral+tiling disagree",
                            {{"kind", "disagreement"},
                             {"basis", json_io::to_json(basis)},
                             {"spectral", json_io::to_json(spectral)},
                             {"tiling", json_io::to_json(tiling)}},
                            cert);
}

namespace {

/// |g(x)|^2 * |E| == ||g||^2 for every x in the support (scale-free constant
/// modulus); returns the first violating x on failure.
std::optional<std::int64_t> modulus_nonconstant_at(const Window& g) {
    const CycNum nsq = norm_sq(g);
    const Rational esize(g.support().size());
    std::optional<std::int64_t> bad;
    for (std::int64_t x : g.support().indices()) {
        if (!(g.value(x).abs_sq().scalar_mul(esize) == nsq)) {
            bad = x;
            break;
        }
    }
    return bad;
}

}  // namespace

Verdict theorem15_check(const Window& g, const PointSet& a, const PointSet& b) {
    if (g.params() != a.params() || g.params() != b.params()) {
        throw std::invalid_argument("theorem15_check: parameter mismatch");
    }
    const PointSet& e = g.support();
    if (e.is_empty()) return Verdict::precondition("theorem15_check: zero window");
    if (e.size() != b.size()) {
        return Verdict::precondition("theorem15_check requires |supp(g)| = |B|",
                                     {{"kind", "size"}, {"E_size", e.size()}, {"B_size", b.size()}});
    }

    const GroupParams& gp = g.params();
    const Verdict basis = is_orthonormal_basis(GaborSystem(g, a, b));
    const auto bad_modulus = modulus_nonconstant_at(g);
    const Verdict spectral = is_spectral_pair(e, b);
    const Verdict tiling = is_tiling_pair(e, a);

    const bool modulus_ok = !bad_modulus.has_value();
    const bool conclusions = modulus_ok && spectral.passed() && tiling.passed();

    bool graph_applicable = false;
    Verdict graph = Verdict::ok("not applicable");
    if (gp.d == 2 && a.size() > 1 && a.size() < gp.size && b.size() > 1 && b.size() < gp.size) {
        graph_applicable = true;
        graph = is_graph(e);
    }

    nlohmann::json cert = {{"basis", basis.passed()},
                           {"modulus_constant_on_support", modulus_ok},
                           {"spectral", spectral.passed()},
                           {"tiling", tiling.passed()},
                           {"graph_applicable", graph_applicable}};
    if (graph_applicable) cert["graph"] = graph.passed();

    if (basis.passed() != conclusions) {
        return Verdict::failure("equivalence violated",
                                {{"kind", "disagreement"}, {"basis", basis.passed()},
                                 {"conclusions", conclusions}},
                                cert);
    }
    if (basis.passed() && graph_applicable && !graph.passed()) {
        return Verdict::failure("support of a verified basis window is not a graph",
                                {{"kind", "graph"}, {"inner", graph.witness}}, cert);
    }
    return Verdict::ok(basis.passed() ? "basis and all conclusions hold" : "both sides fail", cert);
}

Verdict theorem16_check(const Window& g, const PointSet& a, const PointSet& b) {
    if (g.params() != a.params() || g.params() != b.params()) {
        throw std::invalid_argument("theorem16_check: parameter mismatch");
    }
    const PointSet& e = g.support();
    if (e.is_empty()) return Verdict::precondition("theorem16_check: zero window");

    // Positivity: every value rational and > 0 on the support.
    for (std::int64_t x : e.indices()) {
        const auto q = g.value(x).as_rational();
        if (!q || !q->is_positive()) {
            return Verdict::precondition("theorem16_check: window must be positive on its support",
                                         {{"kind", "not-positive"},
                                          {"x", json_io::to_json(index_to_point(g.params(), x))}});
        }
    }

    const Verdict basis = is_orthonormal_basis(GaborSystem(g, a, b));
    // g constant on the support (exact rational equality).
    bool constant = true;
    nlohmann::json const_witness;
    const auto idx = e.indices();
    const Rational first = *g.value(idx.front()).as_rational();
    for (std::int64_t x : idx) {
        if (*g.value(x).as_rational() != first) {
            constant = false;
            const_witness = {{"kind", "non-constant"},
                             {"x", json_io::to_json(index_to_point(g.params(), x))}};
            break;
        }
    }
    const Verdict spectral = is_spectral_pair(e, b);
    const Verdict tiling = is_tiling_pair(e, a);
    const bool conclusions = constant && spectral.passed() && tiling.passed();

    nlohmann::json cert = {{"basis", basis.passed()},
                           {"constant_on_support", constant},
                           {"spectral", spectral.passed()},
                           {"tiling", tiling.passed()}};
    if (basis.passed() == conclusions) {
        return Verdict::ok(basis.passed() ? "basis and all conclusions hold" : "both sides fail", cert);
    }
    return Verdict::failure("equivalence violated",
                            {{"kind", "disagreement"}, {"basis", basis.passed()},
                             {"conclusions", conclusions}, {"constantness", const_witness}},
                            cert);
}

Verdict theorem17_check(const Window& g, std::uint32_t k) {
    const GroupParams& gp = g.params();
    if (gp.d < 2) throw std::invalid_argument("theorem17_check: requires d >= 2");
    if (g.support().is_empty()) return Verdict::precondition("theorem17_check: zero window");
    const auto [a, b] = subgroup_and_complement(gp, k);

    const GroupParams head(gp.p, k);
    const std::int64_t tail_size = gp.size / head.size;

    // (a): within each slice x2, |slice_hat(m)| is constant over m.
    bool cond_a = true;
    nlohmann::json witness_a;
    // (b): slice energies sum_{x1} |g(x1,x2)|^2 agree across slices.
    bool cond_b = true;
    nlohmann::json witness_b;
    CycNum first_energy = CycNum::zero(gp.p);

    for (std::int64_t x2 = 0; x2 < tail_size && (cond_a || cond_b); ++x2) {
        std::vector<CycNum> slice;
        slice.reserve(static_cast<std::size_t>(head.size));
        CycNum energy = CycNum::zero(gp.p);
        for (std::int64_t x1 = 0; x1 < head.size; ++x1) {
            const CycNum& v = g.value(x1 * tail_size + x2);
            slice.push_back(v);
            if (!v.is_zero()) energy += v.abs_sq();
        }
        if (cond_b) {
            if (x2 == 0) {
                first_energy = energy;
            } else if (!(energy == first_energy)) {
                cond_b = false;
                witness_b = {{"kind", "slice-energy"}, {"x2", x2}};
            }
        }
        if (cond_a) {
            const Window sw(head, std::move(slice));
            const Window sh = dft(sw);
            const CycNum ref = sh.value(0).is_zero() ? CycNum::zero(gp.p) : sh.value(0).abs_sq();
            for (std::int64_t m = 1; m < head.size; ++m) {
                const CycNum& v = sh.value(m);
                const CycNum mag = v.is_zero() ? CycNum::zero(gp.p) : v.abs_sq();
                if (!(mag == ref)) {
                    cond_a = false;
                    witness_a = {{"kind", "slice-dft-modulus"}, {"x2", x2}, {"m", m}};
                    break;
                }
            }
        }
    }

    const Verdict basis = is_orthonormal_basis(GaborSystem(g, a, b));
    const bool conditions = cond_a && cond_b;
    nlohmann::json cert = {{"condition_a", cond_a},
                           {"condition_b", cond_b},
                           {"basis", basis.passed()},
                           {"k", k}};
    if (conditions == basis.passed()) {
        return Verdict::ok(conditions ? "conditions and basis all hold" : "both sides fail", cert);
    }
    nlohmann::json witness = {{"kind", "disagreement"}, {"basis", basis.passed()}};
    if (!cond_a) witness["condition_a"] = witness_a;
    if (!cond_b) witness["condition_b"] = witness_b;
    return Verdict::failure("equivalence violated", witness, cert);
}

Window make_gauss_window(std::uint32_t p) {
    if (!is_prime(p) || p == 2) throw std::domain_error("make_gauss_window: odd prime required");
    const GroupParams g(p, 1);
    std::vector<CycNum> spectrum;
    spectrum.reserve(p);
    spectrum.push_back(CycNum::gauss_sum(p));
    for (std::uint32_t m = 1; m < p; ++m) {
        std::vector<std::int64_t> counts(p, 0);
        for (std::uint64_t t = 0; t < p; ++t) {
            counts[(p - (m * ((t * t) % p)) % p) % p] += 1;  // exponent of zeta^{-m t^2}
        }
        spectrum.push_back(CycNum::from_exponent_counts(p, counts));
    }
    return idft(Window(g, std::move(spectrum)));
}

Window make_flat_window(std::uint32_t p) {
    if (!is_prime(p)) throw std::domain_error("make_flat_window: prime required");
    const GroupParams g(p, 1);
    std::vector<CycNum> spectrum(p, CycNum::one(p));
    spectrum[0] = CycNum::from_rational(p, Rational(-1));
    return idft(Window(g, std::move(spectrum)));
}

Window make_product_window(const Window& f, const Window& h) {
    if (f.params().p != h.params().p) throw std::invalid_argument("make_product_window: mixed p");
    if (f.params().d != 1 || h.params().d != 1) {
        throw std::invalid_argument("make_product_window: factors must be 1-dimensional");
    }
    const std::uint32_t p = f.params().p;
    const GroupParams g2(p, 2);
    std::vector<CycNum> values;
    values.reserve(static_cast<std::size_t>(g2.size));
    for (std::uint32_t x1 = 0; x1 < p; ++x1) {
        for (std::uint32_t x2 = 0; x2 < p; ++x2) {
            values.push_back(f.value(x1) * h.value(x2));
        }
    }
    return Window(g2, std::move(values));
}

Window make_qr_row_window(std::uint32_t p) {
    if (!is_prime(p) || p % 4 != 1) {
        throw std::domain_error(
            "make_qr_row_window: requires p = 1 (mod 4), where sqrt(p) = gauss_sum(p) is exact");
    }
    const GroupParams g(p, 2);
    const CycNum root = CycNum::gauss_sum(p);  // real sqrt(p) for p = 1 (mod 4)
    const CycNum one = CycNum::one(p);
    std::vector<bool> is_qr(p, false);
    for (std::uint64_t t = 1; t < p; ++t) is_qr[(t * t) % p] = true;

    std::vector<CycNum> values;
    values.reserve(static_cast<std::size_t>(g.size));
    for (std::uint32_t k = 0; k < p; ++k) {
        CycNum v = one;
        if (k != 0) v = is_qr[k] ? one + root : one - root;
        for (std::uint32_t r = 0; r < p; ++r) values.push_back(v);
    }
    return Window(g, std::move(values));
}

}  // namespace zpgabor
