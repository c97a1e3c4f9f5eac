#pragma once

#include <cstdint>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

struct GeneratorConfig {
    int max_base_order = 5; // base complete graphs use 2..max_base_order vertices
    int max_depth = 6;      // parts at this depth become monochromatic cliques
};

// One node of the substitution tree. Vertex sets are the contiguous ranges
// [lo, hi); every node's range is a module of the generated coloring.
struct ModuleTreeNode {
    enum class Kind { leaf, clique, blowup };
    Kind kind;
    int lo;
    int hi;
    int base_order = 0; // blowup nodes only
    std::vector<ModuleTreeNode> children;
};

struct GeneratedColoring {
    EdgeColoring coloring;
    ModuleTreeNode tree;
};

// Random rainbow-triangle-free coloring built by recursive substitution into
// 2-colored base graphs (the C5/C5 split when the base has 5 vertices, so no
// base ever contains a monochromatic triangle with a third color available).
// Deterministic for a given (order, color_count, seed, config).
GeneratedColoring generate_random_gallai(int order, int color_count, std::uint64_t seed,
                                         const GeneratorConfig& config = {});

} // namespace gallai
