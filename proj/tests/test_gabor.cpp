#include <doctest.h>

#include <algorithm>
#include <random>

#include "zpgabor/gabor.hpp"
#include "zpgabor/search.hpp"

using namespace zpgabor;

namespace {

PointSet parabola_set(const GroupParams& g) {
    std::vector<Point> pts;
    for (std::int64_t t = 0; t < g.p; ++t) pts.push_back(make_point(g, {t, t * t}));
    return PointSet::from_points(g, pts);
}

PointSet random_subset(const GroupParams& g, std::int64_t size, std::mt19937& rng) {
    std::vector<std::int64_t> all(static_cast<std::size_t>(g.size));
    for (std::int64_t i = 0; i < g.size; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    return PointSet::from_indices(g, all);
}

Window random_int_window(const GroupParams& g, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<long long> v(lo, hi);
    std::vector<Rational> values(static_cast<std::size_t>(g.size));
    for (auto& q : values) q = Rational(v(rng));
    return window_from_rationals(g, values);
}

/// h of flat modulus whose transform modulus is NOT constant: all ones except
/// a sign flip at the last point.
Window sign_flip_window(std::uint32_t p) {
    const GroupParams g(p, 1);
    std::vector<Rational> values(p, Rational(1));
    values[p - 1] = Rational(-1);
    return window_from_rationals(g, values);
}

}  // namespace

TEST_CASE("gabor_inner basics") {
    const GroupParams g(5, 1);
    const Window f = make_gauss_window(5);
    const Atom a0{make_point(g, {0}), make_point(g, {0})};
    const Atom a1{make_point(g, {1}), make_point(g, {0})};
    const Atom a2{make_point(g, {0}), make_point(g, {2})};

    // <atom, atom> = ||g||^2
    CycNum nsq = CycNum::zero(5);
    for (const CycNum& v : f.values()) nsq += v.abs_sq();
    CHECK(gabor_inner(f, a0, a0) == nsq);

    // gauss window: distinct translations, equal modulations -> 0
    CHECK(gabor_inner(f, a1, a0).is_zero());
    // distinct modulations, equal translation -> 0 needs |f|^2 flat; not true here
    CHECK_FALSE(gabor_inner(f, a2, a0).is_zero());

    // disjoint indicator supports -> 0
    PointSet e(g);
    e.insert(0);
    e.insert(1);
    const Window ind = indicator_window(e);
    CHECK(gabor_inner(ind, Atom{make_point(g, {2}), make_point(g, {1})},
                      Atom{make_point(g, {0}), make_point(g, {3})})
              .is_zero());
}

TEST_CASE("lemma-style degenerate bases") {
    // |A| = 1, B = Z_p^d, |g| constant: orthonormal basis
    const GroupParams g(3, 2);
    std::vector<Rational> vals;
    for (std::int64_t i = 0; i < g.size; ++i) vals.push_back(Rational(i % 2 == 0 ? 1 : -1));
    const Window uni = window_from_rationals(g, vals);
    CHECK(is_orthonormal_basis(
              GaborSystem(uni, PointSet::singleton(g, make_point(g, {0, 0})), PointSet::full(g)))
              .passed());

    // |B| = 1, A = Z_p^d, |g_hat| constant: orthonormal basis (gauss window x constant)
    const GroupParams g1(5, 1);
    const Window f = make_gauss_window(5);
    CHECK(is_orthonormal_basis(
              GaborSystem(f, PointSet::full(g1), PointSet::singleton(g1, make_point(g1, {0}))))
              .passed());

    // orthogonality alone is not enough: |A||B| != p^d fails as incomplete
    const GroupParams g2(2, 2);
    const PointSet e2 = PointSet::from_indices(g2, {0, 2});
    const Verdict v = is_orthonormal_basis(
        GaborSystem(indicator_window(e2), PointSet::singleton(g2, make_point(g2, {0, 0})),
                    PointSet::from_indices(g2, {0, 2})));
    CHECK_FALSE(v.passed());
    CHECK(v.witness.at("kind") == "count");
}

TEST_CASE("strict norm mode rejects unnormalized windows") {
    const GroupParams g(3, 1);
    BasisCheckOptions strict;
    strict.normalization_insensitive = false;
    const Verdict v = is_orthonormal_basis(
        GaborSystem(make_constant_window(g, Rational(1)), PointSet::full(g),
                    PointSet::singleton(g, make_point(g, {0}))),
        strict);
    CHECK(v.status == VerdictStatus::precondition);
}

TEST_CASE("fast and naive basis checks agree, including witnesses") {
    std::mt19937 rng(51);
    const GroupParams g(3, 2);
    int pass_seen = 0;
    for (int i = 0; i < 60; ++i) {
        const Window w = random_int_window(g, rng, -2, 2);
        const std::int64_t asz = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
        const std::int64_t bsz = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
        const GaborSystem sys(w, random_subset(g, asz, rng), random_subset(g, bsz, rng));
        const Verdict fast = is_orthonormal_basis(sys);
        const Verdict naive = is_orthonormal_basis_serial(sys);
        CHECK(fast.passed() == naive.passed());
        CHECK(fast.witness == naive.witness);
        pass_seen += fast.passed();
    }
    // structured instances where the check passes, same agreement
    const Window f = make_gauss_window(5);
    const Window prod = make_product_window(f, sign_flip_window(5));
    const auto [a, b] = subgroup_and_complement(GroupParams(5, 2), 1);
    const GaborSystem sys(prod, a, b);
    CHECK(is_orthonormal_basis(sys).passed());
    CHECK(is_orthonormal_basis_serial(sys).passed());
}

TEST_CASE("gauss window values and flat spectrum modulus") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        const GroupParams g(p, 1);
        const Window f = make_gauss_window(p);
        const CycNum gs = CycNum::gauss_sum(p);
        std::vector<bool> is_qr(p, false);
        for (std::uint64_t t = 1; t < p; ++t) is_qr[(t * t) % p] = true;

        // f(0) = G, f(qr) = G + p, f(nqr) = G - p
        CHECK(f.value(0) == gs);
        for (std::uint32_t x = 1; x < p; ++x) {
            const CycNum expected =
                is_qr[x] ? gs + CycNum::from_rational(p, Rational(p))
                         : gs - CycNum::from_rational(p, Rational(p));
            CHECK(f.value(x) == expected);
        }

        // |f_hat|^2 is the same for every m (flat modulus), any odd p
        const Window f_hat = dft(f);
        const CycNum ref = f_hat.value(0).abs_sq();
        for (std::int64_t m = 1; m < g.size; ++m) CHECK(f_hat.value(m).abs_sq() == ref);

        // |f|^2 takes the three exact values p * {1, (1 +- sqrt p)^2} when sqrt p is exact
        if (p % 4 == 1) {
            const CycNum psq = CycNum::from_rational(p, Rational(p));
            const CycNum p2 = CycNum::from_rational(p, Rational(static_cast<long long>(p) * p));
            const CycNum cross = gs.scalar_mul(Rational(2 * static_cast<long long>(p)));
            CHECK(f.value(0).abs_sq() == psq);
            for (std::uint32_t x = 1; x < p; ++x) {
                const CycNum expected = is_qr[x] ? psq + p2 + cross : psq + p2 - cross;
                CHECK(f.value(x).abs_sq() == expected);
            }
        }
    }
    CHECK_THROWS_AS(make_gauss_window(2), std::domain_error);
}

TEST_CASE("flat window: frozen value assignment and unimodular spectrum") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const Window f = make_flat_window(p);
        CHECK(f.value(0) == CycNum::from_rational(p, Rational(static_cast<long long>(p) - 2)));
        for (std::uint32_t x = 1; x < p; ++x) {
            CHECK(f.value(x) == CycNum::from_rational(p, Rational(-2)));
        }
        const Window f_hat = dft(f);
        for (std::int64_t m = 0; m < p; ++m) {
            CHECK(f_hat.value(m).abs_sq() == CycNum::one(p));
        }
        // neither f nor f_hat is a constant multiple of an indicator
        CHECK(f_hat.value(0) == CycNum::from_rational(p, Rational(-1)));
        CHECK(f_hat.value(1) == CycNum::one(p));
    }
    // p = 5 explicitly: f(0) = 3, f(x != 0) = -2
    const Window f5 = make_flat_window(5);
    CHECK(f5.value(0) == CycNum::from_rational(5, Rational(3)));
    CHECK(f5.value(3) == CycNum::from_rational(5, Rational(-2)));
}

TEST_CASE("product windows") {
    const Window f = make_gauss_window(5);
    const Window h = sign_flip_window(5);
    const Window g2 = make_product_window(f, h);
    const GroupParams gp(5, 2);
    CHECK(g2.support().size() == 25);  // both factors fully supported

    // dft of the product is the product of the dfts, axis by axis
    const Window fh = dft(f);
    const Window hh = dft(h);
    const Window g2h = dft(g2);
    for (std::int64_t m1 = 0; m1 < 5; ++m1) {
        for (std::int64_t m2 = 0; m2 < 5; ++m2) {
            CHECK(g2h.value(m1 * 5 + m2) == fh.value(m1) * hh.value(m2));
        }
    }

    // the product system over the coordinate lattices is an orthonormal basis
    const auto [a, b] = subgroup_and_complement(gp, 1);
    CHECK(is_orthonormal_basis(GaborSystem(g2, a, b)).passed());

    // a constant-modulus second factor works just as well
    const Window with_const = make_product_window(f, make_constant_window(GroupParams(5, 1), Rational(1)));
    CHECK(is_orthonormal_basis(GaborSystem(with_const, a, b)).passed());

    // neither |g| nor |g_hat| is constant on its support
    const auto distinct_mods = [](const Window& w) {
        std::vector<std::string> mods;
        for (std::int64_t x : w.support().indices()) {
            const std::string s = w.value(x).abs_sq().to_string();
            if (std::find(mods.begin(), mods.end(), s) == mods.end()) mods.push_back(s);
        }
        return mods.size();
    };
    CHECK(distinct_mods(g2) >= 2);
    CHECK(distinct_mods(g2h) >= 2);

    CHECK_THROWS_AS(make_product_window(f, make_gauss_window(7)), std::invalid_argument);
}

TEST_CASE("qr-row window") {
    const Window g = make_qr_row_window(5);
    const GroupParams gp(5, 2);
    // constant along each row k, with the 1 / 1 +- sqrt(p) pattern down the rows
    const CycNum gs = CycNum::gauss_sum(5);
    CHECK(g.value(0 * 5 + 3) == CycNum::one(5));
    CHECK(g.value(1 * 5 + 2) == CycNum::one(5) + gs);   // 1 is a QR mod 5
    CHECK(g.value(2 * 5 + 4) == CycNum::one(5) - gs);   // 2 is not
    for (std::uint32_t k = 0; k < 5; ++k) {
        for (std::uint32_t r = 1; r < 5; ++r) CHECK(g.value(k * 5 + r) == g.value(k * 5));
    }

    // g_hat is supported on {(0,0)} union {(m, 0) : m != 0}; zero elsewhere; g_hat(0,0) = 1
    const Window gh = dft(g);
    CHECK(gh.value(0) == CycNum::one(5));
    for (std::int64_t m = 0; m < 5; ++m) {
        for (std::int64_t n = 1; n < 5; ++n) CHECK(gh.value(m * 5 + n).is_zero());
    }
    for (std::int64_t m = 1; m < 5; ++m) CHECK_FALSE(gh.value(m * 5).is_zero());

    CHECK_THROWS_AS(make_qr_row_window(7), std::domain_error);
    CHECK_THROWS_AS(make_qr_row_window(2), std::domain_error);
}

TEST_CASE("theorem17 check") {
    // (i) qr-row window: conditions and basis all hold
    const Verdict qr = theorem17_check(make_qr_row_window(5), 1);
    CHECK(qr.passed());
    CHECK(qr.certificate.at("condition_a") == true);
    CHECK(qr.certificate.at("condition_b") == true);
    CHECK(qr.certificate.at("basis") == true);

    // (ii) product windows with flat-modulus factors
    const Verdict prod =
        theorem17_check(make_product_window(make_gauss_window(5), sign_flip_window(5)), 1);
    CHECK(prod.passed());
    CHECK(prod.certificate.at("basis") == true);

    // (iii) g = 1_{(0,0)}: slice masses differ, so (b) fails and so does the basis
    const GroupParams gp(5, 2);
    const Verdict point =
        theorem17_check(indicator_window(PointSet::singleton(gp, make_point(gp, {0, 0}))), 1);
    CHECK(point.passed());  // both sides fail -> equivalence holds
    CHECK(point.certificate.at("condition_b") == false);
    CHECK(point.certificate.at("basis") == false);

    // agreement on random windows
    std::mt19937 rng(52);
    const GroupParams g3(3, 2);
    for (int i = 0; i < 40; ++i) {
        Window w = random_int_window(g3, rng, -2, 2);
        if (w.support().is_empty()) continue;
        CHECK(theorem17_check(w, 1).passed());
    }
}

TEST_CASE("theorem17 in three dimensions") {
    // g(x1, x2, x3) = f(x1) with the gauss window f: for k = 1 the slice
    // transforms are flat and the slice energies equal, and the lattice system
    // is an orthonormal basis
    const GroupParams g3(3, 3);
    const Window f = make_gauss_window(3);
    std::vector<CycNum> values;
    values.reserve(static_cast<std::size_t>(g3.size));
    for (std::int64_t i = 0; i < g3.size; ++i) values.push_back(f.value(i / 9));
    const Window w(g3, values);

    const Verdict k1 = theorem17_check(w, 1);
    CHECK(k1.passed());
    CHECK(k1.certificate.at("condition_a") == true);
    CHECK(k1.certificate.at("condition_b") == true);
    CHECK(k1.certificate.at("basis") == true);

    // for k = 2 the slice transform over (x1, x2) vanishes off m2 = 0, so (a)
    // fails; the corresponding lattice system is not a basis either
    const Verdict k2 = theorem17_check(w, 2);
    CHECK(k2.passed());
    CHECK(k2.certificate.at("condition_a") == false);
    CHECK(k2.certificate.at("basis") == false);
}

TEST_CASE("higher-dimensional groups stay exact") {
    // d = 4 over p = 2 and d = 3 over p = 3: round trips and a degenerate basis
    for (const auto& [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}}) {
        const GroupParams g(p, d);
        std::mt19937 rng(55 + p);
        std::uniform_int_distribution<long long> v(-3, 3);
        std::vector<Rational> values(static_cast<std::size_t>(g.size));
        for (auto& q : values) q = Rational(v(rng));
        const Window w = window_from_rationals(g, values);
        CHECK(idft(dft(w)).values() == w.values());
        CHECK(plancherel_check(w).passed());
    }
    // unimodular window, A = {0}, B = full group: orthonormal basis in d = 4
    const GroupParams g(2, 4);
    std::vector<Rational> signs(static_cast<std::size_t>(g.size));
    for (std::int64_t i = 0; i < g.size; ++i) signs[static_cast<std::size_t>(i)] = Rational(i % 3 == 0 ? -1 : 1);
    const Window um = window_from_rationals(g, signs);
    CHECK(is_orthonormal_basis(
              GaborSystem(um, PointSet::singleton(g, make_point(g, {0, 0, 0, 0})), PointSet::full(g)))
              .passed());
}

TEST_CASE("fourier duality of gabor systems") {
    // parabola indicator system and its dual
    for (std::uint32_t p : {3u, 5u}) {
        const GroupParams g(p, 2);
        const PointSet f = parabola_set(g);
        const auto a = find_tiling_complement(f);
        const auto b = find_spectrum(f);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        const GaborSystem sys(indicator_window(f), *a, *b);
        CHECK(is_orthonormal_basis(sys).passed());
        const GaborSystem dual = fourier_dual(sys);
        CHECK(dual.translations() == *b);
        CHECK(dual.modulations() == a->negate());
        CHECK(is_orthonormal_basis(dual).passed());
        // double dual still decides the same
        CHECK(is_orthonormal_basis(fourier_dual(dual)).passed());
    }

    // the dual of the |A| = 1 degenerate case lands on the |B| = 1 case
    {
        const GroupParams gd(3, 2);
        std::vector<Rational> vals;
        for (std::int64_t i = 0; i < gd.size; ++i) vals.push_back(Rational(i % 2 == 0 ? 1 : -1));
        const GaborSystem one_a(window_from_rationals(gd, vals),
                                PointSet::singleton(gd, make_point(gd, {0, 0})), PointSet::full(gd));
        CHECK(is_orthonormal_basis(one_a).passed());
        const GaborSystem dual = fourier_dual(one_a);
        CHECK(dual.modulations().size() == 1);
        CHECK(is_orthonormal_basis(dual).passed());
    }

    // duality preserves failure too
    const GroupParams g(3, 2);
    std::mt19937 rng(53);
    for (int i = 0; i < 10; ++i) {
        const Window w = random_int_window(g, rng, -2, 2);
        if (w.support().is_empty()) continue;
        const GaborSystem sys(w, random_subset(g, 3, rng), random_subset(g, 3, rng));
        CHECK(is_orthonormal_basis(sys).passed() == is_orthonormal_basis(fourier_dual(sys)).passed());
    }
}

TEST_CASE("indicator equivalence check") {
    const GroupParams g(3, 2);
    const PointSet f = parabola_set(g);
    const auto a = find_tiling_complement(f);
    const auto b = find_spectrum(f);
    REQUIRE((a && b));
    const Verdict both = indicator_equivalence_check(f, *a, *b);
    CHECK(both.passed());
    CHECK(both.certificate.at("basis") == true);

    // E = {0, 1} in Z_3, A = {0, 1}: not a packing, both sides false
    const GroupParams g1(3, 1);
    const PointSet e = PointSet::from_indices(g1, {0, 1});
    const Verdict neither = indicator_equivalence_check(e, e, e);
    CHECK(neither.passed());
    CHECK(neither.certificate.at("basis") == false);
    CHECK(neither.certificate.at("tiling") == false);

    CHECK(indicator_equivalence_check(PointSet::empty(g1), e, e).status ==
          VerdictStatus::precondition);
}

TEST_CASE("theorem15 check") {
    const GroupParams g(3, 2);
    const PointSet f = parabola_set(g);
    const auto a = find_tiling_complement(f);
    const auto b = find_spectrum(f);
    REQUIRE((a && b));

    // indicator window on the parabola: everything passes, including the graph claim
    const Verdict v = theorem15_check(indicator_window(f), *a, *b);
    CHECK(v.passed());
    CHECK(v.certificate.at("graph_applicable") == true);
    CHECK(v.certificate.at("graph") == true);

    // unimodular phases on 1_F keep all conclusions
    std::vector<CycNum> vals(static_cast<std::size_t>(g.size), CycNum::zero(3));
    int k = 0;
    for (std::int64_t i : f.indices()) {
        vals[static_cast<std::size_t>(i)] = CycNum::root_power(3, static_cast<std::uint32_t>(k++ % 3));
    }
    const Verdict phased = theorem15_check(Window(g, vals), *a, *b);
    CHECK(phased.passed());
    CHECK(phased.certificate.at("basis") == true);
    CHECK(phased.certificate.at("modulus_constant_on_support") == true);

    // parabola dual window: |E| = p^2 - p + 1 != |B|, precondition rejection
    const ParabolaDual dual = make_parabola_dual_window(3);
    CHECK(theorem15_check(dual.window, dual.b, dual.neg_a).status == VerdictStatus::precondition);
}

TEST_CASE("theorem16: exhaustive positive grid over Z_2^2 admits only constant windows") {
    // every positive rational window with an orthonormal (A, B) is constant on
    // its support; the grid sweep must come up empty of counterexamples
    const GroupParams g(2, 2);
    const std::vector<Rational> alphabet = {Rational(0), Rational(1), Rational(2), Rational(1, 2)};
    std::int64_t bases_seen = 0;
    for (std::int64_t cand = 1; cand < 256; ++cand) {
        std::vector<Rational> values(4);
        std::int64_t digits = cand;
        for (int i = 0; i < 4; ++i) {
            values[static_cast<std::size_t>(i)] = alphabet[static_cast<std::size_t>(digits % 4)];
            digits /= 4;
        }
        const Window w = window_from_rationals(g, values);
        if (w.support().is_empty()) continue;
        for (std::uint64_t am = 1; am < 16; ++am) {
            const PointSet a = PointSet::from_mask64(g, am);
            if (g.size % a.size() != 0) continue;
            for (std::uint64_t bm = 1; bm < 16; ++bm) {
                const PointSet b = PointSet::from_mask64(g, bm);
                if (a.size() * b.size() != g.size) continue;
                if (!is_orthonormal_basis(GaborSystem(w, a, b)).passed()) continue;
                ++bases_seen;
                const auto idx = w.support().indices();
                const Rational first = *w.value(idx.front()).as_rational();
                for (std::int64_t x : idx) CHECK(*w.value(x).as_rational() == first);
                // and the full checker agrees with itself on this instance
                CHECK(theorem16_check(w, a, b).passed());
            }
        }
    }
    CHECK(bases_seen > 0);
}

TEST_CASE("theorem15: graph claim is out of range for degenerate lattices") {
    // A = {0}, B = Z_p^2, E = Z_p^2: basis holds, support is not a graph, but
    // the graph conclusion does not apply at |A| = 1
    const GroupParams g(3, 2);
    const Window w = make_constant_window(g, Rational(1));
    const Verdict v = theorem15_check(w, PointSet::singleton(g, make_point(g, {0, 0})),
                                      PointSet::full(g));
    CHECK(v.passed());
    CHECK(v.certificate.at("basis") == true);
    CHECK(v.certificate.at("graph_applicable") == false);
}

TEST_CASE("theorem16 check") {
    const GroupParams g(3, 2);
    const PointSet f = parabola_set(g);
    const auto a = find_tiling_complement(f);
    const auto b = find_spectrum(f);
    REQUIRE((a && b));

    // positive constant indicator: passes (both directions hold)
    const Verdict v = theorem16_check(indicator_window(f), *a, *b);
    CHECK(v.passed());
    CHECK(v.certificate.at("basis") == true);

    // negative value -> precondition
    std::vector<Rational> neg(static_cast<std::size_t>(g.size));
    neg[0] = Rational(-1);
    CHECK(theorem16_check(window_from_rationals(g, neg), *a, *b).status ==
          VerdictStatus::precondition);

    // positive but non-constant window cannot be a basis; both sides fail, still equivalent
    std::vector<Rational> bumpy(static_cast<std::size_t>(g.size));
    f.for_each_index([&](std::int64_t i) { bumpy[static_cast<std::size_t>(i)] = Rational(1); });
    bumpy[static_cast<std::size_t>(f.indices()[0])] = Rational(2);
    const Verdict nc = theorem16_check(window_from_rationals(g, bumpy), *a, *b);
    CHECK(nc.passed());
    CHECK(nc.certificate.at("basis") == false);
    CHECK(nc.certificate.at("constant_on_support") == false);
}

TEST_CASE("parabola dual window") {
    for (std::uint32_t p : {3u, 5u}) {
        const ParabolaDual dual = make_parabola_dual_window(p);
        CHECK(dual.window.support().size() == static_cast<std::int64_t>(p) * p - p + 1);
        CHECK(is_orthonormal_basis(GaborSystem(dual.window, dual.b, dual.neg_a)).passed());
    }
    CHECK_THROWS_AS(make_parabola_dual_window(2), std::domain_error);
}

TEST_CASE("float backend agrees with the exact backend") {
    const Window f = make_gauss_window(5);
    const Window prod = make_product_window(f, sign_flip_window(5));
    const auto [a, b] = subgroup_and_complement(GroupParams(5, 2), 1);
    const GaborSystem sys(prod, a, b);
    CHECK(is_orthonormal_basis(sys).passed());
    const Verdict fv = is_orthonormal_basis(to_float(sys));
    CHECK(fv.passed());
    CHECK(fv.certificate.at("authoritative") == false);

    // and on failing systems
    std::mt19937 rng(54);
    const GroupParams g(3, 2);
    for (int i = 0; i < 20; ++i) {
        const Window w = random_int_window(g, rng, -2, 2);
        if (w.support().is_empty()) continue;
        const GaborSystem s(w, random_subset(g, 3, rng), random_subset(g, 3, rng));
        CHECK(is_orthonormal_basis(s).passed() == is_orthonormal_basis(to_float(s)).passed());
    }
}
