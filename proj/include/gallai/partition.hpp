#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/detectors.hpp"

namespace gallai {

// Nontrivial vertex partition with one color per part pair and at most two
// colors overall between parts. Parts are sorted internally and ordered by
// their minimum vertex.
struct GallaiPartition {
    std::vector<std::vector<Vertex>> parts;
    std::vector<Color> pair_colors; // t*t, diagonal entries -1

    int part_count() const { return static_cast<int>(parts.size()); }
    Color pair_color(int i, int j) const
    {
        return pair_colors[static_cast<std::size_t>(i) * parts.size() + j];
    }
    std::vector<Color> used_colors() const;
};

struct PartitionViolation {
    enum class Kind { trivial, mixed_pair, too_many_colors };
    Kind kind;
    std::string message;
    // For mixed_pair: an offending edge and the clashing colors.
    Vertex u = -1, v = -1;
    Color expected = -1, found = -1;
};

struct VerifyResult {
    std::optional<PartitionViolation> violation;
    bool valid() const { return !violation.has_value(); }
};

// Raised when a Gallai-partition pipeline is handed a coloring that is not a
// Gallai coloring; carries the offending triangle.
struct RainbowTriangleError : std::runtime_error {
    RainbowTriangleWitness witness;
    explicit RainbowTriangleError(const RainbowTriangleWitness& w)
        : std::runtime_error("coloring contains a rainbow triangle"), witness(w)
    {
    }
};

// Coarsest Gallai partition of a rainbow-triangle-free coloring with N >= 2.
// Every returned part is a module (each outside vertex sees it in one color)
// and no two parts can be merged without breaking the partition invariants.
GallaiPartition find_gallai_partition(const EdgeColoring& g);

// Checks nontriviality, per-pair monochromaticity and the two-color limit, in
// that order, reporting the first violation. Malformed partitions (overlap,
// gap, empty part, bad vertex) throw std::invalid_argument.
VerifyResult verify_partition(const EdgeColoring& g, const GallaiPartition& p);

// The coloring induced on one representative per part. Same palette as the
// source; uses at most two distinct colors.
EdgeColoring reduced_graph(const EdgeColoring& g, const GallaiPartition& p);

// The smallest module of g containing seed vertices; V itself when the seeds
// force everything. Exposed for tests.
std::vector<Vertex> smallest_module(const EdgeColoring& g, const std::vector<Vertex>& seed);

} // namespace gallai
