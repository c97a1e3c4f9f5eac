#include "gallai/search.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gallai/detectors.hpp"

namespace gallai {

namespace {

struct Shared {
    std::atomic<bool> cancel{false};
    std::mutex result_mutex;
    std::optional<EdgeColoring> witness; // write-once
};

// One worker's depth-first search over the edge enumeration. The incremental
// checks rely on monotonicity: a monochromatic double star or a rainbow
// triangle in a partial coloring survives every extension, so a violating
// prefix can be cut immediately.
struct Dfs {
    const SearchProblem& problem;
    const SearchOptions& opts;
    std::uint64_t max_nodes;
    double deadline = 0.0; // advisory; 0 = none
    std::chrono::steady_clock::time_point started;
    PartialColoring pc;
    SearchStats stats;
    Shared* shared; // may be null (single-threaded fast path)
    std::optional<EdgeColoring> witness;
    bool aborted = false;
    bool found = false;

    Dfs(const SearchProblem& p, const SearchOptions& o, const SearchBudget& budget, Shared* sh)
        : problem(p), opts(o), max_nodes(budget.max_nodes), deadline(budget.max_seconds),
          started(std::chrono::steady_clock::now()), pc(p.order, p.color_count), shared(sh)
    {
    }

    bool out_of_time() const
    {
        if (deadline <= 0.0)
            return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()
               > deadline;
    }

    // Rainbow check for the just-colored edge (v,u): only vertices w < u have
    // both touching edges colored.
    bool makes_rainbow(Vertex v, Vertex u, Color c) const
    {
        for (Vertex w = 0; w < u; ++w) {
            Color a = pc.color_of(v, w);
            Color b = pc.color_of(u, w);
            if (a != c && b != c && a != b)
                return true;
        }
        return false;
    }

    bool star_at(Vertex a, Vertex b, Color c) const
    {
        const int n = problem.spec.n;
        const int m = problem.spec.m;
        int da = pc.color_degree(a, c) - 1;
        int db = pc.color_degree(b, c) - 1;
        if (da < m || db < m)
            return false;
        if (da < n && db < n)
            return false;
        auto na = pc.neighbors(a, c);
        auto nb = pc.neighbors(b, c);
        int unioned =
            static_cast<int>(bits::active().popcount_or(na.data(), nb.data(), na.size())) - 2;
        return unioned >= n + m;
    }

    // A double star completed by edge (v,u) in color c must use (v,u) either
    // as its center edge or as a leaf edge of a star centered at v or u, so
    // rechecking the c-colored edges incident to v and u suffices.
    bool makes_double_star(Vertex v, Vertex u, Color c) const
    {
        if (star_at(v, u, c))
            return true;
        const int order = problem.order;
        auto nv = pc.neighbors(v, c);
        for (Vertex x = 0; x < order; ++x)
            if (x != u && bits::test_bit(nv.data(), static_cast<std::size_t>(x))
                && star_at(v, x, c))
                return true;
        auto nu = pc.neighbors(u, c);
        for (Vertex x = 0; x < order; ++x)
            if (x != v && bits::test_bit(nu.data(), static_cast<std::size_t>(x))
                && star_at(u, x, c))
                return true;
        return false;
    }

    bool leaf_valid()
    {
        EdgeColoring g = pc.to_coloring();
        if (problem.forbid_rainbow_triangle && find_rainbow_triangle(g))
            return false;
        if (find_mono_double_star(g, problem.spec))
            return false;
        return true;
    }

    void record_witness()
    {
        found = true;
        witness = pc.to_coloring();
        if (shared != nullptr) {
            std::lock_guard<std::mutex> lock(shared->result_mutex);
            if (!shared->witness)
                shared->witness = *witness;
            shared->cancel.store(true, std::memory_order_relaxed);
        }
    }

    // Returns true when the caller should unwind (witness found or aborted).
    bool run(int edge_index)
    {
        if (edge_index == pc.edge_count()) {
            if (opts.prune_rainbow && opts.prune_double_star) {
                record_witness();
                return true;
            }
            if (leaf_valid()) {
                record_witness();
                return true;
            }
            ++stats.leaf_rejects;
            return false;
        }

        auto [v, u] = PartialColoring::edge_at(edge_index);
        int cmax = problem.color_count - 1;
        if (opts.canonical_colors)
            cmax = std::min(cmax, pc.distinct_colors());
        for (Color c = 0; c <= cmax; ++c) {
            if (++stats.nodes > max_nodes) {
                aborted = true;
                return true;
            }
            if ((stats.nodes & 0x3ff) == 0) {
                if (out_of_time()) {
                    aborted = true;
                    return true;
                }
                if (shared != nullptr && shared->cancel.load(std::memory_order_relaxed))
                    return true;
            }
            pc.push(c);
            bool pruned = false;
            if (opts.prune_rainbow && problem.forbid_rainbow_triangle && makes_rainbow(v, u, c)) {
                ++stats.prunes_rainbow;
                pruned = true;
            }
            if (!pruned && opts.prune_double_star && makes_double_star(v, u, c)) {
                ++stats.prunes_double_star;
                pruned = true;
            }
            if (!pruned && run(edge_index + 1)) {
                pc.pop();
                return true;
            }
            pc.pop();
        }
        return false;
    }
};

SearchOutcome finish(SearchStatus status, std::optional<EdgeColoring> witness, SearchStats stats,
                     const SearchProblem& problem,
                     std::chrono::steady_clock::time_point start)
{
    if (witness) {
        if (problem.forbid_rainbow_triangle && find_rainbow_triangle(*witness))
            throw std::logic_error("search produced a witness with a rainbow triangle");
        if (find_mono_double_star(*witness, problem.spec))
            throw std::logic_error("search produced a witness with a forbidden double star");
    }
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {status, std::move(witness), stats};
}

// Enumerate the surviving depth-P prefixes; each one seeds an independent
// worker. Prefix enumeration itself counts toward the statistics.
void collect_shards(Dfs& dfs, int edge_index, int depth_limit,
                    std::vector<std::vector<Color>>& shards, std::vector<Color>& prefix)
{
    if (edge_index == depth_limit) {
        shards.push_back(prefix);
        return;
    }
    auto [v, u] = PartialColoring::edge_at(edge_index);
    int cmax = dfs.problem.color_count - 1;
    if (dfs.opts.canonical_colors)
        cmax = std::min(cmax, dfs.pc.distinct_colors());
    for (Color c = 0; c <= cmax; ++c) {
        ++dfs.stats.nodes;
        dfs.pc.push(c);
        prefix.push_back(c);
        bool pruned = false;
        if (dfs.opts.prune_rainbow && dfs.problem.forbid_rainbow_triangle
            && dfs.makes_rainbow(v, u, c)) {
            ++dfs.stats.prunes_rainbow;
            pruned = true;
        }
        if (!pruned && dfs.opts.prune_double_star && dfs.makes_double_star(v, u, c)) {
            ++dfs.stats.prunes_double_star;
            pruned = true;
        }
        if (!pruned)
            collect_shards(dfs, edge_index + 1, depth_limit, shards, prefix);
        prefix.pop_back();
        dfs.pc.pop();
    }
}

} // namespace

SearchOutcome search_valid_coloring(const SearchProblem& problem, const SearchBudget& budget,
                                    const SearchOptions& options)
{
    if (problem.order < 1)
        throw std::invalid_argument("search: order must be >= 1");
    if (problem.color_count < 1)
        throw std::invalid_argument("search: color count must be >= 1");
    if (budget.max_nodes == 0)
        throw std::invalid_argument("search: budget must be positive");

    const auto start = std::chrono::steady_clock::now();
    const int edges = problem.order * (problem.order - 1) / 2;

    if (options.threads <= 1 || edges <= options.split_prefix_edges) {
        Dfs dfs(problem, options, budget, nullptr);
        dfs.run(0);
        dfs.stats.shards = 1;
        if (dfs.found)
            return finish(SearchStatus::witness, std::move(dfs.witness), dfs.stats, problem, start);
        if (dfs.aborted)
            return finish(SearchStatus::inconclusive, std::nullopt, dfs.stats, problem, start);
        return finish(SearchStatus::exhausted, std::nullopt, dfs.stats, problem, start);
    }

    Dfs prefix_dfs(problem, options, SearchBudget{}, nullptr);
    std::vector<std::vector<Color>> shards;
    std::vector<Color> prefix;
    collect_shards(prefix_dfs, 0, options.split_prefix_edges, shards, prefix);

    Shared shared;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> any_budget_hit{false};
    std::mutex stats_mutex;
    SearchStats total = prefix_dfs.stats;
    total.shards = shards.size();

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= shards.size() || shared.cancel.load(std::memory_order_relaxed))
                return;
            Dfs dfs(problem, options, budget, &shared);
            for (Color c : shards[i])
                dfs.pc.push(c);
            dfs.run(options.split_prefix_edges);
            if (dfs.aborted)
                any_budget_hit.store(true, std::memory_order_relaxed);
            std::lock_guard<std::mutex> lock(stats_mutex);
            total.nodes += dfs.stats.nodes;
            total.prunes_rainbow += dfs.stats.prunes_rainbow;
            total.prunes_double_star += dfs.stats.prunes_double_star;
            total.leaf_rejects += dfs.stats.leaf_rejects;
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    if (shared.witness)
        return finish(SearchStatus::witness, std::move(shared.witness), total, problem, start);
    if (any_budget_hit.load())
        return finish(SearchStatus::inconclusive, std::nullopt, total, problem, start);
    return finish(SearchStatus::exhausted, std::nullopt, total, problem, start);
}

namespace {

NumberResult scan(const DoubleStarSpec& spec, int color_count, int max_order, bool rainbow,
                  const SearchBudget& budget, const SearchOptions& options)
{
    NumberResult result;
    std::optional<EdgeColoring> prev;
    for (int n = 1; n <= max_order; ++n) {
        SearchProblem problem{n, color_count, spec, rainbow};
        SearchOutcome out = search_valid_coloring(problem, budget, options);
        result.stats.nodes += out.stats.nodes;
        result.stats.prunes_rainbow += out.stats.prunes_rainbow;
        result.stats.prunes_double_star += out.stats.prunes_double_star;
        result.stats.leaf_rejects += out.stats.leaf_rejects;
        result.stats.shards += out.stats.shards;
        result.stats.wall_seconds += out.stats.wall_seconds;
        result.last_order_searched = n;
        if (out.status == SearchStatus::witness) {
            prev = std::move(out.witness);
            continue;
        }
        if (out.status == SearchStatus::exhausted) {
            result.value = n;
            result.witness_below = std::move(prev);
            return result;
        }
        return result; // inconclusive
    }
    return result; // max_order reached without an exhausted order
}

} // namespace

NumberResult compute_ramsey(const DoubleStarSpec& spec, int color_count, int max_order,
                            const SearchBudget& budget, const SearchOptions& options)
{
    return scan(spec, color_count, max_order, false, budget, options);
}

NumberResult compute_gallai_ramsey(const DoubleStarSpec& spec, int color_count, int max_order,
                                   const SearchBudget& budget, const SearchOptions& options)
{
    return scan(spec, color_count, max_order, true, budget, options);
}

} // namespace gallai
