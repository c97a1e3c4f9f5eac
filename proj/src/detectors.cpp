#include "gallai/detectors.hpp"

#include <algorithm>

namespace gallai {

std::optional<RainbowTriangleWitness> find_rainbow_triangle(const EdgeColoring& g)
{
    const int n = g.order();
    if (g.color_count() < 3)
        return std::nullopt;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            Color ab = g.color_of(a, b);
            for (Vertex c = b + 1; c < n; ++c) {
                Color bc = g.color_of(b, c);
                if (bc == ab)
                    continue;
                Color ac = g.color_of(a, c);
                if (ac != ab && ac != bc)
                    return RainbowTriangleWitness{a, b, c, ab, bc, ac};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Deterministic leaf assignment: A\B to the n-center first, B\A to the
// m-center first, then the intersection fills the n-center's deficit before
// the m-center's, all in ascending vertex order.
DoubleStarWitness make_witness(const EdgeColoring& g, Color c, Vertex cn, Vertex cm, int n, int m)
{
    const int order = g.order();
    auto an = g.neighbors(cn, c);
    auto am = g.neighbors(cm, c);

    DoubleStarWitness w;
    w.color = c;
    w.center_n = cn;
    w.center_m = cm;

    std::vector<Vertex> shared;
    for (Vertex x = 0; x < order; ++x) {
        if (x == cn || x == cm)
            continue;
        bool in_a = bits::test_bit(an.data(), static_cast<std::size_t>(x));
        bool in_b = bits::test_bit(am.data(), static_cast<std::size_t>(x));
        if (in_a && in_b)
            shared.push_back(x);
        else if (in_a && static_cast<int>(w.leaves_n.size()) < n)
            w.leaves_n.push_back(x);
        else if (in_b && static_cast<int>(w.leaves_m.size()) < m)
            w.leaves_m.push_back(x);
    }
    for (Vertex x : shared) {
        if (static_cast<int>(w.leaves_n.size()) < n)
            w.leaves_n.push_back(x);
        else if (static_cast<int>(w.leaves_m.size()) < m)
            w.leaves_m.push_back(x);
        else
            break;
    }
    std::sort(w.leaves_n.begin(), w.leaves_n.end());
    std::sort(w.leaves_m.begin(), w.leaves_m.end());
    return w;
}

} // namespace

std::optional<DoubleStarWitness> find_mono_double_star(const EdgeColoring& g,
                                                       const DoubleStarSpec& spec)
{
    const int order = g.order();
    const int n = spec.n;
    const int m = spec.m;
    if (order < spec.order())
        return std::nullopt;

    const auto& kn = bits::active();
    for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) {
            Color c = g.color_of(u, v);
            int du = g.color_degree(u, c) - 1; // |A|, v excluded
            int dv = g.color_degree(v, c) - 1; // |B|, u excluded
            if (du < m || dv < m)
                continue;
            auto nu = g.neighbors(u, c);
            auto nv = g.neighbors(v, c);
            // u and v each sit in the other's set, never in their own.
            int union_size =
                static_cast<int>(kn.popcount_or(nu.data(), nv.data(), nu.size())) - 2;
            if (union_size < n + m)
                continue;
            if (du >= n && dv >= m)
                return make_witness(g, c, u, v, n, m);
            if (du >= m && dv >= n)
                return make_witness(g, c, v, u, n, m);
        }
    }
    return std::nullopt;
}

MonoDegree max_mono_degree(const EdgeColoring& g)
{
    if (g.order() < 2)
        throw std::invalid_argument("max_mono_degree requires order >= 2");
    MonoDegree best{0, 0, -1};
    for (Vertex v = 0; v < g.order(); ++v)
        for (Color c = 0; c < g.color_count(); ++c)
            if (g.color_degree(v, c) > best.degree)
                best = {v, c, g.color_degree(v, c)};
    return best;
}

bool validate_witness(const EdgeColoring& g, const RainbowTriangleWitness& w)
{
    if (w.a == w.b || w.b == w.c || w.a == w.c)
        return false;
    if (w.a < 0 || w.b < 0 || w.c < 0 || w.a >= g.order() || w.b >= g.order() || w.c >= g.order())
        return false;
    Color ab = g.color_of(w.a, w.b);
    Color bc = g.color_of(w.b, w.c);
    Color ac = g.color_of(w.a, w.c);
    return ab == w.ab && bc == w.bc && ac == w.ac && ab != bc && bc != ac && ab != ac;
}

bool validate_witness(const EdgeColoring& g, const DoubleStarSpec& spec,
                      const DoubleStarWitness& w)
{
    if (w.center_n == w.center_m)
        return false;
    if (static_cast<int>(w.leaves_n.size()) != spec.n
        || static_cast<int>(w.leaves_m.size()) != spec.m)
        return false;

    std::vector<Vertex> all{w.center_n, w.center_m};
    all.insert(all.end(), w.leaves_n.begin(), w.leaves_n.end());
    all.insert(all.end(), w.leaves_m.begin(), w.leaves_m.end());
    for (Vertex x : all)
        if (x < 0 || x >= g.order())
            return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;

    if (g.color_of(w.center_n, w.center_m) != w.color)
        return false;
    for (Vertex x : w.leaves_n)
        if (g.color_of(w.center_n, x) != w.color)
            return false;
    for (Vertex x : w.leaves_m)
        if (g.color_of(w.center_m, x) != w.color)
            return false;
    return true;
}

} // namespace gallai
