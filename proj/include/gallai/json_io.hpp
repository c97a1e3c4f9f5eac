#pragma once

// JSON views of the library's result objects, shared by the CLI and the
// tests. Shapes are pinned by the schemas under schemas/.

#include "json.hpp"

#include "gallai/detectors.hpp"
#include "gallai/formulas.hpp"
#include "gallai/generator.hpp"
#include "gallai/partition.hpp"
#include "gallai/search.hpp"

namespace gallai {

inline nlohmann::json to_json(const RainbowTriangleWitness& w)
{
    return {{"type", "rainbowTriangle"},
            {"vertices", {w.a, w.b, w.c}},
            {"colors", {w.ab, w.bc, w.ac}}};
}

inline nlohmann::json to_json(const DoubleStarWitness& w)
{
    return {{"type", "doubleStar"},
            {"color", w.color},
            {"centers", {w.center_n, w.center_m}},
            {"leavesN", w.leaves_n},
            {"leavesM", w.leaves_m}};
}

inline nlohmann::json to_json(const GallaiPartition& p)
{
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : p.parts)
        parts.push_back(part);
    nlohmann::json pair_colors = nlohmann::json::array();
    for (int i = 0; i < p.part_count(); ++i)
        for (int j = i + 1; j < p.part_count(); ++j)
            pair_colors.push_back({i, j, p.pair_color(i, j)});
    return {{"parts", parts}, {"pairColors", pair_colors}};
}

inline nlohmann::json to_json(const ModuleTreeNode& node)
{
    const char* kind = node.kind == ModuleTreeNode::Kind::leaf      ? "leaf"
                       : node.kind == ModuleTreeNode::Kind::clique ? "clique"
                                                                   : "blowup";
    nlohmann::json children = nlohmann::json::array();
    for (const auto& child : node.children)
        children.push_back(to_json(child));
    return {{"kind", kind}, {"lo", node.lo}, {"hi", node.hi}, {"children", children}};
}

inline nlohmann::json to_json(const BoundReport& r)
{
    nlohmann::json j{{"query", r.query},
                     {"n", r.n},
                     {"m", r.m},
                     {"k", r.k},
                     {"status", bound_status_name(r.status)},
                     {"citations", r.citations}};
    if (r.lower)
        j["lower"] = *r.lower;
    if (r.upper)
        j["upper"] = *r.upper;
    if (r.stated_lower)
        j["statedLower"] = *r.stated_lower;
    if (r.proven_lower)
        j["provenLower"] = *r.proven_lower;
    if (r.alt_upper)
        j["altUpper"] = *r.alt_upper;
    return j;
}

inline nlohmann::json to_json(const SearchStats& s)
{
    return {{"nodes", s.nodes},
            {"prunesRainbow", s.prunes_rainbow},
            {"prunesDoubleStar", s.prunes_double_star},
            {"leafRejects", s.leaf_rejects},
            {"shards", s.shards},
            {"wallSeconds", s.wall_seconds}};
}

inline const char* search_status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::witness: return "witness";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace gallai
