#include "gallai/partition.hpp"

#include <algorithm>
#include <numeric>

namespace gallai {

std::vector<Color> GallaiPartition::used_colors() const
{
    std::vector<Color> used;
    const int t = part_count();
    if (pair_colors.size() != static_cast<std::size_t>(t) * static_cast<std::size_t>(t))
        return used;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            used.push_back(pair_color(i, j));
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

namespace {

GallaiPartition assemble(const EdgeColoring& g, std::vector<std::vector<Vertex>> parts)
{
    for (auto& part : parts)
        std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    GallaiPartition p;
    p.parts = std::move(parts);
    const int t = p.part_count();
    p.pair_colors.assign(static_cast<std::size_t>(t) * t, -1);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            Color c = g.color_of(p.parts[i].front(), p.parts[j].front());
            p.pair_colors[static_cast<std::size_t>(i) * t + j] = c;
            p.pair_colors[static_cast<std::size_t>(j) * t + i] = c;
        }
    return p;
}

// Connected components of the graph formed by the edges NOT colored c.
std::vector<std::vector<Vertex>> components_avoiding(const EdgeColoring& g, Color c)
{
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (Vertex u = 0; u < n; ++u) {
                if (u == v || comp[static_cast<std::size_t>(u)] != -1)
                    continue;
                if (g.color_of(u, v) != c) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    return out;
}

// Partition refinement anchored at vertex 0: starting from {{0}, V\{0}},
// repeatedly split any part by the colors an outside vertex shows into it.
// At the fixpoint the parts are exactly {0} plus the maximal modules of g
// avoiding 0 (splits never cut a module whose splitter lies outside it).
std::vector<std::vector<Vertex>> refine_avoiding_zero(const EdgeColoring& g)
{
    const int n = g.order();
    std::vector<std::vector<Vertex>> parts;
    parts.push_back({0});
    std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    parts.push_back(std::move(rest));

    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex z = 0; z < n; ++z) {
            std::vector<std::vector<Vertex>> next;
            next.reserve(parts.size());
            for (auto& part : parts) {
                bool z_inside = std::binary_search(part.begin(), part.end(), z);
                if (z_inside || part.size() == 1) {
                    next.push_back(std::move(part));
                    continue;
                }
                Color first = g.color_of(z, part.front());
                bool uniform = true;
                for (Vertex x : part)
                    if (g.color_of(z, x) != first) {
                        uniform = false;
                        break;
                    }
                if (uniform) {
                    next.push_back(std::move(part));
                    continue;
                }
                // Split by color class, classes ordered by color index.
                std::vector<std::vector<Vertex>> classes(
                    static_cast<std::size_t>(g.color_count()));
                for (Vertex x : part)
                    classes[static_cast<std::size_t>(g.color_of(z, x))].push_back(x);
                for (auto& cls : classes)
                    if (!cls.empty())
                        next.push_back(std::move(cls));
                changed = true;
            }
            parts = std::move(next);
        }
    }
    return parts;
}

} // namespace

std::vector<Vertex> smallest_module(const EdgeColoring& g, const std::vector<Vertex>& seed)
{
    const int n = g.order();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> members;
    std::vector<Vertex> queue;

    auto add = [&](Vertex v) {
        if (!in[static_cast<std::size_t>(v)]) {
            in[static_cast<std::size_t>(v)] = 1;
            members.push_back(v);
            queue.push_back(v);
        }
    };
    for (Vertex v : seed)
        add(v);
    if (members.empty())
        return {};

    // color seen from each outside vertex into the set so far; -1 = unknown
    std::vector<Color> seen(static_cast<std::size_t>(n), -1);
    std::size_t head = 0;
    while (head < queue.size()) {
        Vertex w = queue[head++];
        for (Vertex z = 0; z < n; ++z) {
            if (in[static_cast<std::size_t>(z)] || z == w)
                continue;
            Color c = g.color_of(z, w);
            if (seen[static_cast<std::size_t>(z)] == -1)
                seen[static_cast<std::size_t>(z)] = c;
            else if (seen[static_cast<std::size_t>(z)] != c)
                add(z); // z distinguishes two members, so any module holding them holds z
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

GallaiPartition find_gallai_partition(const EdgeColoring& g)
{
    const int n = g.order();
    if (n < 2)
        throw std::invalid_argument("Gallai partition requires order >= 2");
    if (auto w = find_rainbow_triangle(g))
        throw RainbowTriangleError(*w);

    // Degenerate root: some color c disconnects the graph of non-c edges.
    // The components are modules joined pairwise in c, so any grouping of
    // them is a valid partition; only a 2-part grouping is unmergeable.
    for (Color c = 0; c < g.color_count(); ++c) {
        auto comps = components_avoiding(g, c);
        if (comps.size() < 2)
            continue;
        std::vector<Vertex> rest;
        std::size_t zero_comp = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (std::find(comps[i].begin(), comps[i].end(), 0) != comps[i].end())
                zero_comp = i;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (i != zero_comp)
                rest.insert(rest.end(), comps[i].begin(), comps[i].end());
        return assemble(g, {comps[zero_comp], std::move(rest)});
    }

    // Prime root: the quotient into maximal strong modules is unique. The
    // part holding vertex 0 is {0} plus every x whose smallest module with 0
    // stays proper; the remaining parts are read off the refinement anchored
    // at 0 (parts inside the 0-part get absorbed, the rest are exactly the
    // quotient parts avoiding 0).
    std::vector<char> in_q0(static_cast<std::size_t>(n), 0);
    in_q0[0] = 1;
    for (Vertex x = 1; x < n; ++x) {
        auto closure = smallest_module(g, {0, x});
        if (static_cast<int>(closure.size()) < n)
            in_q0[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<Vertex> q0;
    for (Vertex v = 0; v < n; ++v)
        if (in_q0[static_cast<std::size_t>(v)])
            q0.push_back(v);

    std::vector<std::vector<Vertex>> parts{q0};
    for (auto& part : refine_avoiding_zero(g))
        if (!in_q0[static_cast<std::size_t>(part.front())])
            parts.push_back(std::move(part));
    return assemble(g, std::move(parts));
}

VerifyResult verify_partition(const EdgeColoring& g, const GallaiPartition& p)
{
    const int n = g.order();
    const int t = p.part_count();

    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < t; ++i) {
        if (p.parts[static_cast<std::size_t>(i)].empty())
            throw std::invalid_argument("partition has an empty part");
        for (Vertex v : p.parts[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition names a vertex out of range");
            if (owner[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("partition parts overlap");
            owner[static_cast<std::size_t>(v)] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (owner[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("partition does not cover all vertices");

    if (t < 2)
        return {PartitionViolation{PartitionViolation::Kind::trivial,
                                   "partition is trivial (one part)"}};

    // A partition may arrive without pair colors (e.g. parsed from JSON that
    // lists parts only); then the colors are derived from the coloring. When
    // declared, they are part of what gets verified.
    const bool declared =
        p.pair_colors.size() == static_cast<std::size_t>(t) * static_cast<std::size_t>(t);
    if (declared)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (p.pair_color(i, j) < 0 || p.pair_color(i, j) >= g.color_count())
                    throw std::invalid_argument("partition declares an out-of-range pair color");

    const std::size_t words = static_cast<std::size_t>(g.words_per_set());
    std::vector<bits::Word> masks(static_cast<std::size_t>(t) * words, 0);
    for (int i = 0; i < t; ++i)
        for (Vertex v : p.parts[static_cast<std::size_t>(i)])
            bits::set_bit(masks.data() + static_cast<std::size_t>(i) * words,
                          static_cast<std::size_t>(v));

    const auto& kn = bits::active();
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            Color expected = declared
                                 ? p.pair_color(i, j)
                                 : g.color_of(p.parts[static_cast<std::size_t>(i)].front(),
                                              p.parts[static_cast<std::size_t>(j)].front());
            const bits::Word* mask_j = masks.data() + static_cast<std::size_t>(j) * words;
            for (Vertex u : p.parts[static_cast<std::size_t>(i)]) {
                auto nbrs = g.neighbors(u, expected);
                if (kn.popcount_and(nbrs.data(), mask_j, words)
                    == p.parts[static_cast<std::size_t>(j)].size())
                    continue;
                for (Vertex v : p.parts[static_cast<std::size_t>(j)]) {
                    Color c = g.color_of(u, v);
                    if (c != expected)
                        return {PartitionViolation{PartitionViolation::Kind::mixed_pair,
                                                   "parts " + std::to_string(i) + " and "
                                                       + std::to_string(j)
                                                       + " are not joined monochromatically",
                                                   u, v, expected, c}};
                }
            }
        }
    }

    std::vector<Color> used;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            used.push_back(g.color_of(p.parts[static_cast<std::size_t>(i)].front(),
                                      p.parts[static_cast<std::size_t>(j)].front()));
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.size() > 2) {
        std::string msg = "more than two colors between parts:";
        for (Color c : used)
            msg += " " + std::to_string(c);
        return {PartitionViolation{PartitionViolation::Kind::too_many_colors, msg}};
    }
    return {};
}

EdgeColoring reduced_graph(const EdgeColoring& g, const GallaiPartition& p)
{
    auto check = verify_partition(g, p);
    if (!check.valid())
        throw std::invalid_argument("reduced_graph: invalid partition: "
                                    + check.violation->message);
    // Verification confirmed each pair is monochromatic (and matches any
    // declared pair colors), so representatives are authoritative.
    const int t = p.part_count();
    auto rep = [&](int i) { return p.parts[static_cast<std::size_t>(i)].front(); };
    EdgeColoring r(t, g.color_count(), g.color_of(rep(0), rep(1)));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            r.set_color(i, j, g.color_of(rep(i), rep(j)));
    return r;
}

} // namespace gallai
