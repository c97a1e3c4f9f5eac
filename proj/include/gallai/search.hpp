#pragma once

#include <cstdint>
#include <optional>

#include "gallai/coloring.hpp"

namespace gallai {

struct SearchProblem {
    int order;
    int color_count;
    DoubleStarSpec spec;
    bool forbid_rainbow_triangle;
};

struct SearchBudget {
    std::uint64_t max_nodes = UINT64_MAX; // per shard in multi-threaded runs; deterministic
    double max_seconds = 0.0;             // advisory wall-clock limit; 0 disables it
};

struct SearchOptions {
    int threads = 1;
    int split_prefix_edges = 6; // shard depth for multi-threaded runs
    bool canonical_colors = true;
    // Test hooks: with a prune disabled the corresponding pattern is only
    // checked at the leaves, which must not change any outcome.
    bool prune_rainbow = true;
    bool prune_double_star = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes_rainbow = 0;
    std::uint64_t prunes_double_star = 0;
    std::uint64_t leaf_rejects = 0; // only with prunes disabled
    std::uint64_t shards = 0;
    double wall_seconds = 0.0;

    bool operator==(const SearchStats& o) const
    {
        return nodes == o.nodes && prunes_rainbow == o.prunes_rainbow
               && prunes_double_star == o.prunes_double_star && leaf_rejects == o.leaf_rejects
               && shards == o.shards;
    }
};

enum class SearchStatus {
    witness,      // a valid coloring exists (attached)
    exhausted,    // the full canonical tree was covered: none exists
    inconclusive, // budget ran out first
};

struct SearchOutcome {
    SearchStatus status;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

// Decides whether a k-coloring of K_N avoiding a monochromatic S(n,m) in
// every color (and, optionally, rainbow triangles) exists, by depth-first
// search over the fixed edge enumeration with canonical color ordering.
// Witnesses are re-validated with the detectors before being returned; in
// single-threaded mode the witness is the lexicographically least valid
// coloring and the statistics are reproducible bit for bit.
SearchOutcome search_valid_coloring(const SearchProblem& problem, const SearchBudget& budget = {},
                                    const SearchOptions& options = {});

struct NumberResult {
    std::optional<int> value;                    // set when determined
    std::optional<EdgeColoring> witness_below;   // valid coloring at value-1
    SearchStats stats;                           // accumulated over all orders
    int last_order_searched = 0;

    bool determined() const { return value.has_value(); }
};

// Smallest N <= max_order whose search is Exhausted, with the stored witness
// for N-1. Undetermined (budget or max_order hit) leaves value empty.
NumberResult compute_ramsey(const DoubleStarSpec& spec, int color_count, int max_order,
                            const SearchBudget& budget = {}, const SearchOptions& options = {});

// Same scan with rainbow triangles forbidden.
NumberResult compute_gallai_ramsey(const DoubleStarSpec& spec, int color_count, int max_order,
                                   const SearchBudget& budget = {},
                                   const SearchOptions& options = {});

} // namespace gallai
