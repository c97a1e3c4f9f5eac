#include "gallai/constructions.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "gallai/detectors.hpp"
#include "gallai/search.hpp"

namespace gallai {

namespace {

void certify(const EdgeColoring& g, const DoubleStarSpec& spec, const char* what)
{
    if (find_rainbow_triangle(g))
        throw std::logic_error(std::string(what) + ": construction has a rainbow triangle");
    if (auto w = find_mono_double_star(g, spec))
        throw std::logic_error(std::string(what) + ": construction contains S("
                               + std::to_string(spec.n) + "," + std::to_string(spec.m)
                               + ") in color " + std::to_string(w->color));
}

} // namespace

int k3_lower_order(int n)
{
    if (n % 2 == 0)
        return 5 * (n / 2);
    return 4 * ((n - 1) / 2) + (n + 1) / 2;
}

EdgeColoring build_k3_lower(int n, int m)
{
    DoubleStarSpec spec(n, m);
    if (n < 1)
        throw std::invalid_argument("build_k3_lower requires n >= 1");

    int sizes[5];
    if (n % 2 == 0) {
        for (int i = 0; i < 5; ++i)
            sizes[i] = n / 2;
    } else {
        sizes[0] = (n + 1) / 2; // the one larger clique sits at part 0
        for (int i = 1; i < 5; ++i)
            sizes[i] = (n - 1) / 2;
    }

    int offsets[5];
    int order = 0;
    for (int i = 0; i < 5; ++i) {
        offsets[i] = order;
        order += sizes[i];
    }

    EdgeColoring g(order, 3, 0);
    // Color 0 fills the cliques (already the default). Between parts, the two
    // edge-disjoint 5-cycles of K5: ring distance 1 -> color 1, distance 2 ->
    // color 2. Neither between-color class contains a triangle.
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            int d = std::min(j - i, 5 - (j - i));
            Color c = d == 1 ? 1 : 2;
            for (int x = offsets[i]; x < offsets[i] + sizes[i]; ++x)
                for (int y = offsets[j]; y < offsets[j] + sizes[j]; ++y)
                    g.set_color(x, y, c);
        }

    certify(g, spec, "build_k3_lower");
    return g;
}

EdgeColoring extend_with_clique(const EdgeColoring& base, int m, Color new_color,
                                Color clique_color)
{
    if (m < 1)
        throw std::invalid_argument("extend_with_clique requires m >= 1");
    if (new_color < 0)
        throw std::invalid_argument("extend_with_clique: bad new color");
    if (new_color < base.color_count())
        for (Vertex v = 0; v < base.order(); ++v)
            if (base.color_degree(v, new_color) > 0)
                throw std::invalid_argument("extend_with_clique: color "
                                            + std::to_string(new_color)
                                            + " already used in base");
    int k = std::max(base.color_count(), new_color + 1);
    if (clique_color < 0 || clique_color >= k)
        throw std::invalid_argument("extend_with_clique: bad clique color");

    const int n0 = base.order();
    EdgeColoring g(n0 + m, k, new_color);
    for (Vertex v = 1; v < n0; ++v)
        for (Vertex u = 0; u < v; ++u)
            g.set_color(v, u, base.color_of(v, u));
    for (Vertex v = n0; v < n0 + m; ++v)
        for (Vertex u = n0; u < v; ++u)
            g.set_color(v, u, clique_color);
    // Edges from the new clique to the base keep the default new_color.
    return g;
}

int ramsey_lower_order(int n, int m)
{
    return n + 2 * m + 1;
}

namespace {

// Circulant 2-coloring of K_N: color 0 where the ring distance lies in the
// connection set, color 1 elsewhere.
EdgeColoring circulant(int order, const std::vector<int>& connection)
{
    EdgeColoring g(order, 2, 1);
    std::vector<char> in_set(static_cast<std::size_t>(order / 2 + 1), 0);
    for (int d : connection)
        in_set[static_cast<std::size_t>(d)] = 1;
    for (Vertex v = 1; v < order; ++v)
        for (Vertex u = 0; u < v; ++u) {
            int d = std::min(v - u, order - (v - u));
            if (in_set[static_cast<std::size_t>(d)])
                g.set_color(v, u, 0);
        }
    return g;
}

bool star_free(const EdgeColoring& g, const DoubleStarSpec& spec)
{
    return !find_rainbow_triangle(g) && !find_mono_double_star(g, spec);
}

} // namespace

EdgeColoring build_ramsey_lower(int n, int m)
{
    if (m < 1 || n < m)
        throw std::invalid_argument("build_ramsey_lower requires n >= m >= 1");
    DoubleStarSpec spec(n, m);
    const int order = ramsey_lower_order(n, m);

    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, EdgeColoring> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, m});
        if (it != cache.end())
            return it->second;
    }

    auto done = [&](EdgeColoring g) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::make_pair(n, m), g);
        return g;
    };

    // Connection set {1..m}: color 0 is 2m-regular, color 1 n-regular, so
    // neither color has a vertex with n+1 same-color neighbors once 2m < n.
    // The detector gate still decides; near-tight cases fall through.
    if (2 * m < n) {
        std::vector<int> conn;
        for (int d = 1; d <= m; ++d)
            conn.push_back(d);
        EdgeColoring g = circulant(order, conn);
        if (star_free(g, spec))
            return done(std::move(g));
    }

    // n-regular color 0 (antipodal connection added when n is odd, in which
    // case the order is even); color 1 is 2m-regular.
    if (n >= 2 * m) {
        std::vector<int> conn;
        for (int d = 1; d <= n / 2; ++d)
            conn.push_back(d);
        if (n % 2 != 0)
            conn.push_back(order / 2);
        EdgeColoring g = circulant(order, conn);
        if (star_free(g, spec))
            return done(std::move(g));
    }

    // Exhaustive fallback at small orders.
    SearchProblem problem{order, 2, spec, false};
    SearchOutcome out = search_valid_coloring(problem, {}, {});
    if (out.status == SearchStatus::witness)
        return done(std::move(*out.witness));
    throw NotFoundError("no S(" + std::to_string(n) + "," + std::to_string(m)
                        + ")-free 2-coloring of K_" + std::to_string(order) + " found");
}

int gallai_lower_order(int n, int m, int k)
{
    int a = k3_lower_order(n) + m * (k - 3);
    int b = ramsey_lower_order(n, m) + m * (k - 2);
    return std::max(a, b);
}

EdgeColoring build_gallai_lower(int n, int m, int k)
{
    if (k < 3)
        throw std::invalid_argument("build_gallai_lower requires k >= 3");
    if (m < 1 || n < m)
        throw std::invalid_argument("build_gallai_lower requires n >= m >= 1");
    DoubleStarSpec spec(n, m);

    const int order_a = k3_lower_order(n) + m * (k - 3);
    const int order_b = ramsey_lower_order(n, m) + m * (k - 2);

    EdgeColoring g = [&] {
        if (order_a >= order_b) {
            EdgeColoring base = build_k3_lower(n, m);
            for (Color c = 3; c < k; ++c)
                base = extend_with_clique(base, m, c, 0);
            return base;
        }
        EdgeColoring base = build_ramsey_lower(n, m);
        for (Color c = 2; c < k; ++c)
            base = extend_with_clique(base, m, c, 0);
        return base;
    }();

    certify(g, spec, "build_gallai_lower");
    return g;
}

} // namespace gallai
