#pragma once

#include <optional>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

struct RainbowTriangleWitness {
    Vertex a, b, c;
    Color ab, bc, ac;
};

// A concrete monochromatic double-star embedding. center_n carries the n
// leaves, center_m the m leaves; all n+m+2 vertices are distinct and every
// listed edge has the witness color.
struct DoubleStarWitness {
    Color color;
    Vertex center_n;
    Vertex center_m;
    std::vector<Vertex> leaves_n;
    std::vector<Vertex> leaves_m;
};

std::optional<RainbowTriangleWitness> find_rainbow_triangle(const EdgeColoring& g);

// Containment test for one edge uv of color c with A = N_c(u)\{v} and
// B = N_c(v)\{u}: an S(n,m) centered on uv exists iff |A| >= n, |B| >= m and
// |A u B| >= n+m (or the same with n and m swapped). Feasibility: give u the
// vertices of A\B first and v those of B\A first; the union bound guarantees
// the intersection covers both remaining deficits.
std::optional<DoubleStarWitness> find_mono_double_star(const EdgeColoring& g,
                                                       const DoubleStarSpec& spec);

struct MonoDegree {
    Vertex vertex;
    Color color;
    int degree;
};

// Argmax of color_degree over (vertex, color); lowest vertex then lowest
// color on ties. Requires N >= 2.
MonoDegree max_mono_degree(const EdgeColoring& g);

// Witness re-validation (used by tests and by everything that persists one).
bool validate_witness(const EdgeColoring& g, const RainbowTriangleWitness& w);
bool validate_witness(const EdgeColoring& g, const DoubleStarSpec& spec,
                      const DoubleStarWitness& w);

} // namespace gallai
