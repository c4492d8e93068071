#include "zpgabor/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zpgabor/fourier.hpp"
#include "zpgabor/gabor.hpp"
#include "zpgabor/json_io.hpp"
#include "zpgabor/numutil.hpp"
#include "zpgabor/pairs.hpp"

namespace zpgabor {

namespace {

constexpr std::int64_t kMaxEnumerableBits = 24;

void require_enumerable(const GroupParams& g) {
    if (g.size > kMaxEnumerableBits) {
        throw std::domain_error("subset enumeration cap exceeded (p^d must be <= 24)");
    }
}

/// Wall-clock side of a SearchBudget; the node side is checked at call sites.
class TimeBudget {
public:
    explicit TimeBudget(double max_seconds)
        : limited_(max_seconds >= 0.0),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(limited_ ? max_seconds : 0.0))) {}

    bool exceeded() const { return limited_ && std::chrono::steady_clock::now() > deadline_; }

private:
    bool limited_;
    std::chrono::steady_clock::time_point deadline_;
};

/// Lexicographically smallest ascending index tuple of the target size whose
/// pairwise differences are all allowed. DFS in tuple order; the first hit is
/// the lex-minimal valid set.
std::optional<std::vector<std::int64_t>> lex_min_clique(const GroupParams& g,
                                                        std::int64_t target,
                                                        const std::vector<char>& allowed) {
    std::vector<std::int64_t> cur;
    cur.reserve(static_cast<std::size_t>(target));

    std::function<bool(std::int64_t)> dfs = [&](std::int64_t start) -> bool {
        if (static_cast<std::int64_t>(cur.size()) == target) return true;
        const std::int64_t remaining = target - static_cast<std::int64_t>(cur.size());
        for (std::int64_t c = start; c <= g.size - remaining; ++c) {
            bool ok = true;
            for (std::int64_t m : cur) {
                if (!allowed[static_cast<std::size_t>(index_sub(g, c, m))]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(c);
            if (dfs(c + 1)) return true;
            cur.pop_back();
        }
        return false;
    };

    if (dfs(0)) return cur;
    return std::nullopt;
}

std::vector<char> spectral_allowed_differences(const PointSet& e) {
    const GroupParams& g = e.params();
    std::vector<char> allowed(static_cast<std::size_t>(g.size), 0);
    allowed[0] = 1;  // never queried for distinct elements; keep symmetric
    for (std::int64_t delta = 1; delta < g.size; ++delta) {
        std::vector<std::int64_t> counts(g.p, 0);
        e.for_each_index([&](std::int64_t x) { counts[dot_index(g, x, delta)] += 1; });
        allowed[static_cast<std::size_t>(delta)] =
            CycNum::from_exponent_counts(g.p, counts).is_zero() ? 1 : 0;
    }
    return allowed;
}

std::vector<char> tiling_allowed_differences(const PointSet& e) {
    const GroupParams& g = e.params();
    std::vector<char> allowed(static_cast<std::size_t>(g.size), 1);
    const auto idx = e.indices();
    for (std::int64_t x : idx) {
        for (std::int64_t y : idx) {
            allowed[static_cast<std::size_t>(index_sub(g, x, y))] = 0;
        }
    }
    allowed[0] = 1;
    return allowed;
}

}  // namespace

std::optional<PointSet> find_spectrum(const PointSet& e) {
    const GroupParams& g = e.params();
    if (e.is_empty()) return std::nullopt;
    const auto allowed = spectral_allowed_differences(e);
    const auto tuple = lex_min_clique(g, e.size(), allowed);
    if (!tuple) return std::nullopt;
    return PointSet::from_indices(g, *tuple);
}

std::optional<PointSet> find_tiling_complement(const PointSet& e) {
    const GroupParams& g = e.params();
    if (e.is_empty() || g.size % e.size() != 0) return std::nullopt;
    const auto allowed = tiling_allowed_differences(e);
    const auto tuple = lex_min_clique(g, g.size / e.size(), allowed);
    if (!tuple) return std::nullopt;
    return PointSet::from_indices(g, *tuple);
}

namespace {

EnumerationReport enumerate_sets(const GroupParams& g, SearchBudget budget, ShardSpec shard,
                                 const std::string& kind,
                                 const std::function<std::optional<PointSet>(const PointSet&)>& witness_for) {
    require_enumerable(g);
    if (shard.count == 0 || shard.index >= shard.count) {
        throw std::invalid_argument("enumerate: invalid shard");
    }
    EnumerationReport report;
    report.kind = kind;
    report.shard = shard;

    const std::uint64_t limit = (std::uint64_t(1) << g.size);

    if (budget.bounded()) {
        // Serial scan: the truncation point is part of the report's contract.
        const TimeBudget clock_budget(budget.max_seconds);
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            if (mask % shard.count != shard.index) continue;
            if ((budget.max_nodes >= 0 && report.nodes_visited >= budget.max_nodes) ||
                clock_budget.exceeded()) {
                report.exhausted = false;
                break;
            }
            report.nodes_visited += 1;
            const PointSet e = PointSet::from_mask64(g, mask);
            if (auto w = witness_for(e)) report.found.push_back({mask, w->mask64()});
        }
        return report;
    }

    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    std::vector<std::vector<EnumerationEntry>> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t mask = 1; mask < static_cast<std::int64_t>(limit); ++mask) {
        if (static_cast<std::uint64_t>(mask) % shard.count != shard.index) continue;
        const PointSet e = PointSet::from_mask64(g, static_cast<std::uint64_t>(mask));
        if (auto w = witness_for(e)) {
            std::size_t tid = 0;
#ifdef _OPENMP
            tid = static_cast<std::size_t>(omp_get_thread_num());
#endif
            partial[tid].push_back({static_cast<std::uint64_t>(mask), w->mask64()});
        }
    }

    for (auto& part : partial) {
        report.found.insert(report.found.end(), part.begin(), part.end());
    }
    std::sort(report.found.begin(), report.found.end(),
              [](const EnumerationEntry& a, const EnumerationEntry& b) { return a.mask < b.mask; });
    std::uint64_t in_shard = 0;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (mask % shard.count == shard.index) ++in_shard;
    }
    report.nodes_visited = static_cast<std::int64_t>(in_shard);
    return report;
}

}  // namespace

EnumerationReport enumerate_tiles(const GroupParams& g, SearchBudget budget, ShardSpec shard) {
    return enumerate_sets(g, budget, shard, "tiles",
                          [](const PointSet& e) { return find_tiling_complement(e); });
}

EnumerationReport enumerate_spectral(const GroupParams& g, SearchBudget budget, ShardSpec shard) {
    return enumerate_sets(g, budget, shard, "spectral",
                          [](const PointSet& e) { return find_spectrum(e); });
}

Verdict fuglede_compare(const GroupParams& g,
                        const std::function<bool(const PointSet&)>& spectral_pred) {
    if (g.d != 2 || (g.p != 2 && g.p != 3)) {
        return Verdict::precondition("fuglede_compare: supported instances are Z_p^2 with p in {2, 3}");
    }
    const std::uint64_t limit = (std::uint64_t(1) << g.size);
    std::vector<std::uint64_t> tiles;
    std::vector<std::uint64_t> spectra;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        const PointSet e = PointSet::from_mask64(g, mask);
        if (find_tiling_complement(e)) tiles.push_back(mask);
        const bool spectral = spectral_pred ? spectral_pred(e) : find_spectrum(e).has_value();
        if (spectral) spectra.push_back(mask);
    }
    if (tiles == spectra) {
        return Verdict::ok("tiles and spectral sets coincide",
                           {{"subsets_checked", limit - 1},
                            {"tile_count", tiles.size()},
                            {"spectral_count", spectra.size()}});
    }
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(tiles.begin(), tiles.end(), spectra.begin(), spectra.end(),
                                  std::back_inserter(diff));
    const PointSet bad = PointSet::from_mask64(g, diff.front());
    const bool is_tile = std::binary_search(tiles.begin(), tiles.end(), diff.front());
    return Verdict::failure("tiles and spectral sets differ",
                            {{"set", json_io::to_json(bad)},
                             {"tiles", is_tile},
                             {"spectral", !is_tile}},
                            {{"tile_count", tiles.size()}, {"spectral_count", spectra.size()}});
}

// ---- Question 1 hunt ----------------------------------------------------------

namespace {

struct AbCandidate {
    std::uint64_t a_mask;
    std::uint64_t b_mask;
};

std::vector<AbCandidate> ab_candidates(const GroupParams& g) {
    std::vector<AbCandidate> out;
    const std::uint64_t limit = (std::uint64_t(1) << g.size);
    for (std::uint64_t am = 1; am < limit; ++am) {
        const int asz = std::popcount(am);
        if (g.size % asz != 0) continue;
        const std::int64_t bsz = g.size / asz;
        for (std::uint64_t bm = 1; bm < limit; ++bm) {
            if (std::popcount(bm) == bsz) out.push_back({am, bm});
        }
    }
    return out;
}

/// rank <= 1 test of the p x p value matrix over Q(zeta_p), exact.
bool is_rank_one(const Window& g) {
    const GroupParams& gp = g.params();
    const std::int64_t p = gp.p;
    // pivot = first nonzero entry
    std::int64_t pi = -1, pj = -1;
    for (std::int64_t i = 0; i < p && pi < 0; ++i) {
        for (std::int64_t j = 0; j < p; ++j) {
            if (!g.value(i * p + j).is_zero()) {
                pi = i;
                pj = j;
                break;
            }
        }
    }
    if (pi < 0) return true;  // zero matrix
    const CycNum& pivot = g.value(pi * p + pj);
    for (std::int64_t i = 0; i < p; ++i) {
        for (std::int64_t j = 0; j < p; ++j) {
            const CycNum lhs = pivot * g.value(i * p + j);
            const CycNum rhs = g.value(pi * p + j) * g.value(i * p + pj);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

bool modulus_takes_two_values(const Window& g) {
    const auto idx = g.support().indices();
    if (idx.empty()) return false;
    const CycNum first = g.value(idx.front()).abs_sq();
    for (std::int64_t x : idx) {
        if (!(g.value(x).abs_sq() == first)) return true;
    }
    return false;
}

}  // namespace

Question1Report question1_hunt(const Question1Config& cfg) {
    const GroupParams& g = cfg.params;
    if (g.d != 2) throw std::invalid_argument("question1_hunt: d = 2 (rank-one window test)");
    if (g.size > 16) throw std::domain_error("question1_hunt: p^d must be <= 16");
    if (cfg.alphabet.empty()) throw std::invalid_argument("question1_hunt: empty alphabet");
    if (cfg.shard.count == 0 || cfg.shard.index >= cfg.shard.count) {
        throw std::invalid_argument("question1_hunt: invalid shard");
    }

    const std::int64_t asize = static_cast<std::int64_t>(cfg.alphabet.size());
    const std::int64_t total = checked_pow(static_cast<std::uint32_t>(asize),
                                           static_cast<std::uint32_t>(g.size),
                                           std::int64_t(1) << 56);

    Question1Report report;
    std::int64_t start = 0;

    if (!cfg.resume_path.empty()) {
        const auto cp = json_io::read_json_file(cfg.resume_path);
        if (cp.at("job") != to_json(cfg)) {
            throw std::invalid_argument("question1_hunt: checkpoint does not match this job");
        }
        const auto& partial = cp.at("partial");
        report.examined = partial.at("examined").get<std::int64_t>();
        report.skipped_zero = partial.at("skipped_zero").get<std::int64_t>();
        report.window_property_pass = partial.at("window_property_pass").get<std::int64_t>();
        report.basis_found = partial.at("basis_found").get<std::int64_t>();
        report.float_screen_rejects = partial.at("float_screen_rejects").get<std::int64_t>();
        report.exact_confirms = partial.at("exact_confirms").get<std::int64_t>();
        for (const auto& h : partial.at("hits")) report.hits.push_back(h);
        start = cp.at("last_candidate").get<std::int64_t>() + 1;
    }

    report.candidates_total =
        total / cfg.shard.count + (cfg.shard.index < total % cfg.shard.count ? 1 : 0);

    const std::vector<AbCandidate> systems = ab_candidates(g);
    const TimeBudget clock_budget(cfg.budget.max_seconds);
    std::int64_t since_checkpoint = 0;

    auto write_checkpoint = [&](std::int64_t last) {
        if (cfg.checkpoint_path.empty()) return;
        nlohmann::json cp = {{"job", to_json(cfg)},
                             {"last_candidate", last},
                             {"partial",
                              {{"examined", report.examined},
                               {"skipped_zero", report.skipped_zero},
                               {"window_property_pass", report.window_property_pass},
                               {"basis_found", report.basis_found},
                               {"float_screen_rejects", report.float_screen_rejects},
                               {"exact_confirms", report.exact_confirms},
                               {"hits", report.hits}}}};
        json_io::write_json_file_atomic(cfg.checkpoint_path, cp);
    };

    for (std::int64_t cand = start; cand < total; ++cand) {
        if (cand % cfg.shard.count != cfg.shard.index) continue;
        if ((cfg.budget.max_nodes >= 0 && report.examined >= cfg.budget.max_nodes) ||
            clock_budget.exceeded()) {
            report.exhausted = false;
            break;
        }
        report.examined += 1;
        report.last_candidate = cand;
        since_checkpoint += 1;

        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(g.size));
        bool all_zero = true;
        std::int64_t digits = cand;
        for (std::int64_t i = 0; i < g.size; ++i) {
            const Rational& v = cfg.alphabet[static_cast<std::size_t>(digits % asize)];
            digits /= asize;
            all_zero &= v.is_zero();
            values.push_back(v);
        }
        if (all_zero) {
            report.skipped_zero += 1;
            continue;
        }

        const Window win = window_from_rationals(g, values);
        const PointSet& e = win.support();

        bool has_negative = false;
        for (std::int64_t x : e.indices()) {
            if (win.value(x).as_rational()->sign() < 0) {
                has_negative = true;
                break;
            }
        }
        if (!has_negative) continue;              // property: g not positive
        if (is_rank_one(win)) continue;           // property: not a product window
        if (!modulus_takes_two_values(win)) continue;  // |g| != c 1_E
        const Window win_hat = dft(win);
        if (!modulus_takes_two_values(win_hat)) continue;  // |g_hat| != c 1_F
        report.window_property_pass += 1;

        const FloatWindow fwin = to_float(win);
        bool any_basis = false;
        for (const AbCandidate& ab : systems) {
            const PointSet a = PointSet::from_mask64(g, ab.a_mask);
            const PointSet b = PointSet::from_mask64(g, ab.b_mask);
            if (cfg.float_prefilter) {
                BasisCheckOptions fopts;
                fopts.float_tolerance = 1e-6;
                if (!is_orthonormal_basis(FloatGaborSystem(fwin, a, b), fopts).passed()) {
                    report.float_screen_rejects += 1;
                    continue;
                }
            }
            report.exact_confirms += 1;
            if (!is_orthonormal_basis(GaborSystem(win, a, b)).passed()) continue;
            any_basis = true;

            const bool size_differs = (e.size() != b.size());
            const bool does_not_tile = !find_tiling_complement(e).has_value();
            if (size_differs && does_not_tile) {
                report.hits.push_back({{"candidate", cand},
                                       {"window", json_io::to_json(win)},
                                       {"A", json_io::to_json(a)},
                                       {"B", json_io::to_json(b)},
                                       {"E_size", e.size()},
                                       {"B_size", b.size()}});
            }
        }
        if (any_basis) report.basis_found += 1;

        if (!cfg.checkpoint_path.empty() && since_checkpoint >= cfg.checkpoint_every) {
            write_checkpoint(cand);
            since_checkpoint = 0;
        }
    }

    if (report.exhausted) report.last_candidate = total - 1;
    write_checkpoint(report.last_candidate);
    return report;
}

NonseparableReport nonseparable_hunt(const Window& g, SearchBudget budget) {
    const GroupParams& gp = g.params();
    const std::int64_t n = gp.size;          // atoms live on Z_p^d x Z_p^d
    const std::int64_t atoms_space = n * n;
    if (atoms_space > 36) throw std::domain_error("nonseparable_hunt: p^{2d} must be <= 36");
    if (g.support().is_empty()) throw std::invalid_argument("nonseparable_hunt: zero window");

    NonseparableReport report;
    const TimeBudget clock_budget(budget.max_seconds);

    // lex-order combinations of size n out of the n^2 atom pairs
    std::vector<std::int64_t> combo(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) combo[static_cast<std::size_t>(i)] = i;

    const auto advance = [&]() -> bool {
        std::int64_t i = n - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == atoms_space - n + i) --i;
        if (i < 0) return false;
        combo[static_cast<std::size_t>(i)] += 1;
        for (std::int64_t j = i + 1; j < n; ++j) {
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
        return true;
    };

    do {
        if ((budget.max_nodes >= 0 && report.subsets_checked >= budget.max_nodes) ||
            clock_budget.exceeded()) {
            report.exhausted = false;
            break;
        }
        report.subsets_checked += 1;

        bool orthogonal = true;
        for (std::int64_t i = 0; i < n && orthogonal; ++i) {
            const Atom s{index_to_point(gp, combo[static_cast<std::size_t>(i)] / n),
                         index_to_point(gp, combo[static_cast<std::size_t>(i)] % n)};
            for (std::int64_t j = i + 1; j < n && orthogonal; ++j) {
                const Atom t{index_to_point(gp, combo[static_cast<std::size_t>(j)] / n),
                             index_to_point(gp, combo[static_cast<std::size_t>(j)] % n)};
                orthogonal = gabor_inner(g, s, t).is_zero();
            }
        }
        if (!orthogonal) continue;

        // separable iff S equals the product of its two projections
        std::vector<char> a_seen(static_cast<std::size_t>(n), 0), b_seen(static_cast<std::size_t>(n), 0);
        for (std::int64_t i = 0; i < n; ++i) {
            a_seen[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)] / n)] = 1;
            b_seen[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)] % n)] = 1;
        }
        std::int64_t na = 0, nb = 0;
        for (char c : a_seen) na += c;
        for (char c : b_seen) nb += c;
        const bool separable = (na * nb == n);

        nlohmann::json pairs = nlohmann::json::array();
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t idx = combo[static_cast<std::size_t>(i)];
            pairs.push_back({json_io::to_json(index_to_point(gp, idx / n)),
                             json_io::to_json(index_to_point(gp, idx % n))});
        }
        report.bases.push_back({{"pairs", pairs}, {"separable", separable}});
        report.separable_count += separable;
        report.nonseparable_count += !separable;
    } while (advance());

    return report;
}

nlohmann::json to_json(const NonseparableReport& r) {
    return {{"kind", "nonseparable"},
            {"exploratory", true},
            {"subsets_checked", r.subsets_checked},
            {"bases", r.bases},
            {"basis_count", r.bases.size()},
            {"separable_count", r.separable_count},
            {"nonseparable_count", r.nonseparable_count},
            {"exhausted", r.exhausted}};
}

nlohmann::json to_json(const EnumerationReport& r) {
    nlohmann::json found = nlohmann::json::array();
    for (const EnumerationEntry& e : r.found) {
        found.push_back({{"mask", e.mask}, {"witness_mask", e.witness_mask}});
    }
    return {{"kind", r.kind},
            {"found", found},
            {"found_count", r.found.size()},
            {"nodes_visited", r.nodes_visited},
            {"exhausted", r.exhausted},
            {"shard", {{"index", r.shard.index}, {"count", r.shard.count}}}};
}

nlohmann::json to_json(const Question1Report& r) {
    return {{"candidates_total", r.candidates_total},
            {"examined", r.examined},
            {"skipped_zero", r.skipped_zero},
            {"window_property_pass", r.window_property_pass},
            {"basis_found", r.basis_found},
            {"float_screen_rejects", r.float_screen_rejects},
            {"exact_confirms", r.exact_confirms},
            {"hits", r.hits},
            {"hit_count", r.hits.size()},
            {"exhausted", r.exhausted},
            {"last_candidate", r.last_candidate}};
}

nlohmann::json to_json(const Question1Config& cfg) {
    nlohmann::json alphabet = nlohmann::json::array();
    for (const Rational& q : cfg.alphabet) alphabet.push_back(q.to_string());
    return {{"kind", "question1"},
            {"p", cfg.params.p},
            {"d", cfg.params.d},
            {"alphabet", alphabet},
            {"shard", {{"index", cfg.shard.index}, {"count", cfg.shard.count}}},
            {"float_prefilter", cfg.float_prefilter}};
}

}  // namespace zpgabor
