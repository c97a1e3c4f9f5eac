#include "gallai/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gallai {

namespace {

// mt19937_64 gives a standard-specified stream; bounded draws go through a
// plain modulo so the output never depends on the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    return rng() % bound;
}

struct Gen {
    EdgeColoring& g;
    std::mt19937_64 rng;
    GeneratorConfig cfg;
    int k;

    Color random_color() { return static_cast<Color>(draw(rng, static_cast<std::uint64_t>(k))); }

    std::pair<Color, Color> random_color_pair()
    {
        if (k < 2)
            return {0, 0};
        Color c1 = random_color();
        Color c2 = static_cast<Color>(draw(rng, static_cast<std::uint64_t>(k - 1)));
        if (c2 >= c1)
            ++c2;
        return {c1, c2};
    }

    // Composition of `total` into `count` positive parts, uniform over
    // compositions: sample count-1 distinct cut points from {1..total-1}.
    std::vector<int> split_sizes(int total, int count)
    {
        std::vector<int> cuts(static_cast<std::size_t>(total - 1));
        for (int i = 0; i < total - 1; ++i)
            cuts[static_cast<std::size_t>(i)] = i + 1;
        for (int i = 0; i < count - 1; ++i) {
            std::size_t j = static_cast<std::size_t>(i)
                            + static_cast<std::size_t>(draw(
                                rng, static_cast<std::uint64_t>(total - 1 - i)));
            std::swap(cuts[static_cast<std::size_t>(i)], cuts[j]);
        }
        cuts.resize(static_cast<std::size_t>(count - 1));
        std::sort(cuts.begin(), cuts.end());
        std::vector<int> sizes;
        int prev = 0;
        for (int cut : cuts) {
            sizes.push_back(cut - prev);
            prev = cut;
        }
        sizes.push_back(total - prev);
        return sizes;
    }

    // 2-coloring of the base K_b with colors (c1, c2). For b == 5 only the
    // monochromatic-triangle-free split exists once three or more colors are
    // in play: both classes are 5-cycles. Uniform over the 12 labeled cycles.
    std::vector<std::vector<Color>> base_coloring(int b, Color c1, Color c2)
    {
        std::vector<std::vector<Color>> col(static_cast<std::size_t>(b),
                                            std::vector<Color>(static_cast<std::size_t>(b), c2));
        if (b == 5) {
            std::vector<int> perm{0, 1, 2, 3, 4};
            for (int i = 0; i < 4; ++i) {
                std::size_t j = static_cast<std::size_t>(i)
                                + static_cast<std::size_t>(draw(
                                    rng, static_cast<std::uint64_t>(5 - i)));
                std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
            }
            for (int i = 0; i < 5; ++i) {
                int a = perm[static_cast<std::size_t>(i)];
                int bb = perm[static_cast<std::size_t>((i + 1) % 5)];
                col[static_cast<std::size_t>(a)][static_cast<std::size_t>(bb)] = c1;
                col[static_cast<std::size_t>(bb)][static_cast<std::size_t>(a)] = c1;
            }
        } else {
            for (int i = 0; i < b; ++i)
                for (int j = i + 1; j < b; ++j) {
                    Color c = draw(rng, 2) == 0 ? c1 : c2;
                    col[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
                    col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
                }
        }
        return col;
    }

    ModuleTreeNode build(int lo, int size, int depth)
    {
        if (size == 1)
            return {ModuleTreeNode::Kind::leaf, lo, lo + 1, 0, {}};
        if (depth >= cfg.max_depth) {
            Color c = random_color();
            for (int i = lo; i < lo + size; ++i)
                for (int j = i + 1; j < lo + size; ++j)
                    g.set_color(i, j, c);
            return {ModuleTreeNode::Kind::clique, lo, lo + size, 0, {}};
        }

        int max_base = std::min(cfg.max_base_order, size);
        int b = 2 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_base - 1)));
        auto [c1, c2] = random_color_pair();
        auto base = base_coloring(b, c1, c2);
        auto sizes = split_sizes(size, b);

        std::vector<int> offsets(static_cast<std::size_t>(b));
        int at = lo;
        for (int i = 0; i < b; ++i) {
            offsets[static_cast<std::size_t>(i)] = at;
            at += sizes[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < b; ++i)
            for (int j = i + 1; j < b; ++j) {
                Color c = base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int x = offsets[static_cast<std::size_t>(i)];
                     x < offsets[static_cast<std::size_t>(i)] + sizes[static_cast<std::size_t>(i)];
                     ++x)
                    for (int y = offsets[static_cast<std::size_t>(j)];
                         y < offsets[static_cast<std::size_t>(j)]
                                 + sizes[static_cast<std::size_t>(j)];
                         ++y)
                        g.set_color(x, y, c);
            }

        ModuleTreeNode node{ModuleTreeNode::Kind::blowup, lo, lo + size, b, {}};
        for (int i = 0; i < b; ++i)
            node.children.push_back(
                build(offsets[static_cast<std::size_t>(i)], sizes[static_cast<std::size_t>(i)],
                      depth + 1));
        return node;
    }
};

} // namespace

GeneratedColoring generate_random_gallai(int order, int color_count, std::uint64_t seed,
                                         const GeneratorConfig& config)
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    if (config.max_base_order < 2 || config.max_base_order > 5)
        throw std::invalid_argument("max_base_order must be in [2, 5]");

    EdgeColoring g(order, color_count, 0);
    if (order == 1)
        return {std::move(g), {ModuleTreeNode::Kind::leaf, 0, 1, 0, {}}};

    Gen gen{g, std::mt19937_64(seed), config, color_count};
    ModuleTreeNode tree = gen.build(0, order, 0);
    return {std::move(g), std::move(tree)};
}

} // namespace gallai
