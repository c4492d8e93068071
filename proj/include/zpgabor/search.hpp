#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zpgabor/group.hpp"
#include "zpgabor/rational.hpp"
#include "zpgabor/verdict.hpp"
#include "zpgabor/window.hpp"

namespace zpgabor {

/// Residue-class split of a candidate space: this run owns candidates with
/// candidate % count == index. Shards are disjoint and their union is the
/// full space, which makes runs stateless-resumable and mergeable.
struct ShardSpec {
    std::uint32_t index = 0;
    std::uint32_t count = 1;
};

struct SearchBudget {
    std::int64_t max_nodes = -1;  // -1 = unlimited
    double max_seconds = -1.0;    // wall-clock limit, -1 = unlimited
    bool bounded() const { return max_nodes >= 0 || max_seconds >= 0.0; }
};

struct EnumerationEntry {
    std::uint64_t mask = 0;          // the set E over the canonical bitset order
    std::uint64_t witness_mask = 0;  // one witness (tiling complement / spectrum)
};

struct EnumerationReport {
    std::string kind;  // "tiles" | "spectral"
    std::vector<EnumerationEntry> found;
    std::int64_t nodes_visited = 0;
    bool exhausted = true;
    ShardSpec shard;
};

/// All E that tile (resp. are spectral), each with one witness; subsets are
/// enumerated as integers over the canonical bitset order. Group size must be
/// <= 24 bits. A bounded budget forces a deterministic serial scan.
EnumerationReport enumerate_tiles(const GroupParams& g, SearchBudget budget = {},
                                  ShardSpec shard = {});
EnumerationReport enumerate_spectral(const GroupParams& g, SearchBudget budget = {},
                                     ShardSpec shard = {});

/// Desk-scale Fuglede comparison in Z_p^2, p in {2, 3}: tiles == spectral sets
/// by exhaustive enumeration. The optional predicate override replaces the
/// spectral test (used by the harness self-test).
Verdict fuglede_compare(const GroupParams& g,
                        const std::function<bool(const PointSet&)>& spectral_pred = {});

/// Lexicographically smallest B making (E, B) a spectral pair, or nullopt.
std::optional<PointSet> find_spectrum(const PointSet& e);

/// Lexicographically smallest A making (E, A) a tiling pair, or nullopt.
std::optional<PointSet> find_tiling_complement(const PointSet& e);

struct Question1Config {
    GroupParams params{2, 2};
    std::vector<Rational> alphabet;
    SearchBudget budget;
    ShardSpec shard;
    bool float_prefilter = true;
    std::string checkpoint_path;          // empty disables checkpointing
    std::int64_t checkpoint_every = 4096; // examined windows between checkpoints
    std::string resume_path;              // empty = fresh run
};

/// Hunt for a window meeting all six open-question properties at once:
/// non-product, not positive, |g| and |g_hat| not constant multiples of
/// indicators, |E| != |B|, and E not a tile. Windows range over
/// alphabet^(p^d) by candidate integer; every reported hit is confirmed by
/// the exact backend regardless of the float prefilter.
struct Question1Report {
    std::int64_t candidates_total = 0;  // candidates in this shard's space
    std::int64_t examined = 0;
    std::int64_t skipped_zero = 0;
    std::int64_t window_property_pass = 0;  // properties of g alone (1-4)
    std::int64_t basis_found = 0;           // windows with >= 1 orthonormal (A,B)
    std::int64_t float_screen_rejects = 0;
    std::int64_t exact_confirms = 0;
    std::vector<nlohmann::json> hits;       // all six properties satisfied
    bool exhausted = true;
    std::int64_t last_candidate = -1;
};

Question1Report question1_hunt(const Question1Config& cfg);

/// Exploratory hook, bounded budget: enumerate general atom sets
/// S subset of Z_p^d x Z_p^d with |S| = p^d and report which make
/// {g(x-a) zeta^{x.b} : (a,b) in S} an orthonormal basis, flagging the
/// separable ones (S = A x B). Full classification of the non-separable
/// case is out of scope; this only gathers instances.
struct NonseparableReport {
    std::int64_t subsets_checked = 0;
    bool exhausted = true;
    std::vector<nlohmann::json> bases;  // {pairs, separable}
    std::int64_t separable_count = 0;
    std::int64_t nonseparable_count = 0;
};

NonseparableReport nonseparable_hunt(const WindowT<CycNum>& g, SearchBudget budget = {});

nlohmann::json to_json(const EnumerationReport& r);
nlohmann::json to_json(const Question1Report& r);
nlohmann::json to_json(const Question1Config& cfg);
nlohmann::json to_json(const NonseparableReport& r);

}  // namespace zpgabor
