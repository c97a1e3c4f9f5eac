#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gallai/bitkernels.hpp"

namespace gallai {

using Vertex = int;
using Color = int;

// The forbidden pattern S(n,m): stars K_{1,n} and K_{1,m} joined by an edge
// between their centers. n >= m >= 0; S(n,0) is the star K_{1,n+1} and S(0,0)
// a single edge.
struct DoubleStarSpec {
    int n;
    int m;

    DoubleStarSpec(int n_, int m_) : n(n_), m(m_)
    {
        if (m < 0 || n < m)
            throw std::invalid_argument("double star requires n >= m >= 0");
    }

    int order() const { return n + m + 2; }
};

// A k-edge-coloring of the complete graph K_N. Stores a symmetric color
// matrix plus one word-packed neighbor bitset per (vertex, color), so color
// degrees are O(1) and neighborhood unions/intersections are O(N/64) through
// the bit kernels. Value type: copy freely, mutate single-owner.
class EdgeColoring {
public:
    EdgeColoring(int order, int color_count, Color default_color);

    int order() const { return n_; }
    int color_count() const { return k_; }
    int words_per_set() const { return words_; }

    Color color_of(Vertex u, Vertex v) const
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("color_of: self-loop");
        return colors_[static_cast<std::size_t>(u) * n_ + v];
    }

    void set_color(Vertex u, Vertex v, Color c);

    int color_degree(Vertex v, Color c) const
    {
        check_vertex(v);
        check_color(c);
        return degrees_[static_cast<std::size_t>(v) * k_ + c];
    }

    std::span<const bits::Word> neighbors(Vertex v, Color c) const
    {
        check_vertex(v);
        check_color(c);
        return {nbr_.data() + (static_cast<std::size_t>(v) * k_ + c) * words_,
                static_cast<std::size_t>(words_)};
    }

    bool operator==(const EdgeColoring& other) const
    {
        return n_ == other.n_ && k_ == other.k_ && colors_ == other.colors_;
    }

private:
    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex out of range");
    }
    void check_color(Color c) const
    {
        if (c < 0 || c >= k_)
            throw std::invalid_argument("color out of range");
    }

    int n_;
    int k_;
    int words_;
    std::vector<std::uint8_t> colors_; // n*n, diagonal unused
    std::vector<bits::Word> nbr_;      // n*k*words
    std::vector<int> degrees_;         // n*k
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format, bit-exact (LF endings):
//   gallai-coloring v1
//   <N> <k>
//   rows v = 1..N-1, each with colorOf(v,0) ... colorOf(v,v-1)
std::string to_text(const EdgeColoring& g);
EdgeColoring parse_text(std::string_view text); // throws ParseError
EdgeColoring load_coloring_file(const std::string& path);
void save_coloring_file(const EdgeColoring& g, const std::string& path);

// Search state: a coloring whose colored edges form an exact prefix of the
// fixed edge enumeration (1,0),(2,0),(2,1),(3,0),... Only push/pop mutate it,
// which keeps the prefix invariant by construction.
class PartialColoring {
public:
    static constexpr Color uncolored = -1;

    PartialColoring(int order, int color_count);

    int order() const { return n_; }
    int color_count() const { return k_; }
    int colored_edges() const { return static_cast<int>(stack_.size()); }
    int edge_count() const { return n_ * (n_ - 1) / 2; }
    bool complete() const { return colored_edges() == edge_count(); }

    static std::pair<Vertex, Vertex> edge_at(int index); // (v,u) with u < v
    Color color_of(Vertex u, Vertex v) const
    {
        return colors_[static_cast<std::size_t>(u) * n_ + v];
    }
    std::pair<Vertex, Vertex> next_edge() const { return edge_at(colored_edges()); }

    void push(Color c);
    void pop();

    int color_degree(Vertex v, Color c) const
    {
        return degrees_[static_cast<std::size_t>(v) * k_ + c];
    }
    std::span<const bits::Word> neighbors(Vertex v, Color c) const
    {
        return {nbr_.data() + (static_cast<std::size_t>(v) * k_ + c) * words_,
                static_cast<std::size_t>(words_)};
    }

    // Number of distinct colors in the prefix. Canonical colorings use exactly
    // colors 0..distinct_colors()-1.
    int distinct_colors() const { return distinct_; }

    EdgeColoring to_coloring() const; // requires complete()

private:
    int n_;
    int k_;
    int words_;
    int distinct_ = 0;
    std::vector<std::int8_t> colors_;
    std::vector<bits::Word> nbr_;
    std::vector<int> degrees_;
    std::vector<int> color_use_; // per color, number of prefix edges using it
    std::vector<std::pair<Vertex, Vertex>> stack_;
};

} // namespace gallai
