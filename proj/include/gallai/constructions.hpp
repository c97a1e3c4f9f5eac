#pragma once

#include <stdexcept>
#include <string>

#include "gallai/coloring.hpp"

namespace gallai {

// The strategy ladder for the two-color lower-bound coloring ran dry. This is
// a search outcome, distinct from parameter errors.
struct NotFoundError : std::runtime_error {
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// Order of the 3-color blow-up coloring: five red cliques of size n/2 joined
// by the two edge-disjoint 5-cycles of K5. Odd n uses four cliques of size
// (n-1)/2 plus one of size (n+1)/2 at part index 0.
int k3_lower_order(int n);

// Blow-up construction above, validated against S(n,m) and rainbow triangles
// before being returned. Even n requires n >= 2; odd n >= 1 gives K1 at n=1.
EdgeColoring build_k3_lower(int n, int m);

// base plus m new vertices forming a clique in clique_color, joined to all of
// base in new_color. new_color must not occur in base; rainbow-freeness is
// preserved structurally, double-star-freeness is the caller's to validate.
EdgeColoring extend_with_clique(const EdgeColoring& base, int m, Color new_color,
                                Color clique_color);

int ramsey_lower_order(int n, int m); // n + 2m + 1

// A 2-coloring of K_{n+2m+1} with no monochromatic S(n,m) in either color.
// Tries circulants first (connection set {1..m}, then an n-regular set), each
// gated by the detector, then falls back to exhaustive search. Results are
// cached per (n,m). Throws NotFoundError when everything fails.
EdgeColoring build_ramsey_lower(int n, int m);

// Order of whichever composed pipeline build_gallai_lower(n, m, k) picks.
int gallai_lower_order(int n, int m, int k);

// The larger of the two composed lower-bound pipelines: the 3-color blow-up
// extended with colors 3..k-1, or the 2-color Ramsey coloring extended with
// colors 2..k-1 (clique color 0 and m new vertices per step either way).
// Validated before being returned.
EdgeColoring build_gallai_lower(int n, int m, int k);

} // namespace gallai
