#include "gallai/coloring.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gallai {

EdgeColoring::EdgeColoring(int order, int color_count, Color default_color)
    : n_(order), k_(color_count), words_(static_cast<int>(bits::words_for(static_cast<std::size_t>(order))))
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    if (color_count < 1 || color_count > 254)
        throw std::invalid_argument("color count must be in [1, 254]");
    if (default_color < 0 || default_color >= color_count)
        throw std::invalid_argument("default color out of range");

    colors_.assign(static_cast<std::size_t>(n_) * n_, static_cast<std::uint8_t>(default_color));
    nbr_.assign(static_cast<std::size_t>(n_) * k_ * words_, 0);
    degrees_.assign(static_cast<std::size_t>(n_) * k_, 0);

    bits::Word* base = nbr_.data() + static_cast<std::size_t>(default_color) * words_;
    for (Vertex v = 0; v < n_; ++v) {
        bits::Word* row = base + static_cast<std::size_t>(v) * k_ * words_;
        for (Vertex u = 0; u < n_; ++u)
            if (u != v)
                bits::set_bit(row, static_cast<std::size_t>(u));
        degrees_[static_cast<std::size_t>(v) * k_ + default_color] = n_ - 1;
    }
}

void EdgeColoring::set_color(Vertex u, Vertex v, Color c)
{
    check_vertex(u);
    check_vertex(v);
    check_color(c);
    if (u == v)
        throw std::invalid_argument("set_color: self-loop");

    Color old = colors_[static_cast<std::size_t>(u) * n_ + v];
    if (old == c)
        return;

    colors_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(c);
    colors_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::uint8_t>(c);

    auto row = [&](Vertex x, Color col) {
        return nbr_.data() + (static_cast<std::size_t>(x) * k_ + col) * words_;
    };
    bits::clear_bit(row(u, old), static_cast<std::size_t>(v));
    bits::clear_bit(row(v, old), static_cast<std::size_t>(u));
    bits::set_bit(row(u, c), static_cast<std::size_t>(v));
    bits::set_bit(row(v, c), static_cast<std::size_t>(u));
    --degrees_[static_cast<std::size_t>(u) * k_ + old];
    --degrees_[static_cast<std::size_t>(v) * k_ + old];
    ++degrees_[static_cast<std::size_t>(u) * k_ + c];
    ++degrees_[static_cast<std::size_t>(v) * k_ + c];
}

std::string to_text(const EdgeColoring& g)
{
    std::string out;
    out.reserve(static_cast<std::size_t>(g.order()) * g.order() * 2 + 32);
    out += "gallai-coloring v1\n";
    out += std::to_string(g.order());
    out += ' ';
    out += std::to_string(g.color_count());
    out += '\n';
    for (Vertex v = 1; v < g.order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (u > 0)
                out += ' ';
            out += std::to_string(g.color_of(v, u));
        }
        out += '\n';
    }
    return out;
}

namespace {

// Strict integer token: nonempty, decimal digits only.
int parse_int(std::string_view tok, const char* what)
{
    int value = 0;
    if (tok.empty())
        throw ParseError(std::string("empty ") + what);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("bad ") + what + ": '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        std::size_t j = line.find(' ', i);
        if (j == std::string_view::npos)
            j = line.size();
        toks.push_back(line.substr(i, j - i));
        i = j + 1;
    }
    if (!line.empty() && line.back() == ' ')
        toks.push_back(std::string_view{});
    return toks;
}

} // namespace

EdgeColoring parse_text(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            throw ParseError("missing final newline");
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    if (lines.size() < 2)
        throw ParseError("truncated header");
    if (lines[0] != "gallai-coloring v1")
        throw ParseError("bad magic line");

    auto header = split_tokens(lines[1]);
    if (header.size() != 2)
        throw ParseError("header must be '<N> <k>'");
    int n = parse_int(header[0], "order");
    int k = parse_int(header[1], "color count");
    if (n < 1)
        throw ParseError("order must be >= 1");
    if (k < 1)
        throw ParseError("color count must be >= 1");

    std::size_t expected_lines = static_cast<std::size_t>(n) + 1;
    if (n == 1)
        expected_lines = 2;
    if (lines.size() != expected_lines)
        throw ParseError("expected " + std::to_string(expected_lines) + " lines, got "
                         + std::to_string(lines.size()));

    EdgeColoring g(n, k, 0);
    for (Vertex v = 1; v < n; ++v) {
        auto toks = split_tokens(lines[static_cast<std::size_t>(v) + 1]);
        if (toks.size() != static_cast<std::size_t>(v))
            throw ParseError("row " + std::to_string(v) + ": expected " + std::to_string(v)
                             + " colors, got " + std::to_string(toks.size()));
        for (Vertex u = 0; u < v; ++u) {
            int c = parse_int(toks[static_cast<std::size_t>(u)], "color");
            if (c < 0 || c >= k)
                throw ParseError("row " + std::to_string(v) + ": color " + std::to_string(c)
                                 + " out of range [0, " + std::to_string(k) + ")");
            g.set_color(v, u, c);
        }
    }
    return g;
}

EdgeColoring load_coloring_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

void save_coloring_file(const EdgeColoring& g, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << to_text(g);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

PartialColoring::PartialColoring(int order, int color_count)
    : n_(order), k_(color_count),
      words_(static_cast<int>(bits::words_for(static_cast<std::size_t>(order))))
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    if (color_count < 1)
        throw std::invalid_argument("color count must be >= 1");
    colors_.assign(static_cast<std::size_t>(n_) * n_, static_cast<std::int8_t>(uncolored));
    nbr_.assign(static_cast<std::size_t>(n_) * k_ * words_, 0);
    degrees_.assign(static_cast<std::size_t>(n_) * k_, 0);
    color_use_.assign(static_cast<std::size_t>(k_), 0);
    stack_.reserve(static_cast<std::size_t>(edge_count()));
}

std::pair<Vertex, Vertex> PartialColoring::edge_at(int index)
{
    // index = v(v-1)/2 + u with 0 <= u < v
    int v = 1;
    while ((v + 1) * v / 2 <= index)
        ++v;
    int u = index - v * (v - 1) / 2;
    return {v, u};
}

void PartialColoring::push(Color c)
{
    if (c < 0 || c >= k_)
        throw std::invalid_argument("push: color out of range");
    if (complete())
        throw std::logic_error("push: coloring already complete");
    auto [v, u] = next_edge();
    colors_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(c);
    colors_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(c);
    bits::set_bit(nbr_.data() + (static_cast<std::size_t>(u) * k_ + c) * words_,
                  static_cast<std::size_t>(v));
    bits::set_bit(nbr_.data() + (static_cast<std::size_t>(v) * k_ + c) * words_,
                  static_cast<std::size_t>(u));
    ++degrees_[static_cast<std::size_t>(u) * k_ + c];
    ++degrees_[static_cast<std::size_t>(v) * k_ + c];
    if (color_use_[static_cast<std::size_t>(c)]++ == 0)
        ++distinct_;
    stack_.emplace_back(v, u);
}

void PartialColoring::pop()
{
    if (stack_.empty())
        throw std::logic_error("pop: nothing colored");
    auto [v, u] = stack_.back();
    stack_.pop_back();
    Color c = colors_[static_cast<std::size_t>(u) * n_ + v];
    colors_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(uncolored);
    colors_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(uncolored);
    bits::clear_bit(nbr_.data() + (static_cast<std::size_t>(u) * k_ + c) * words_,
                    static_cast<std::size_t>(v));
    bits::clear_bit(nbr_.data() + (static_cast<std::size_t>(v) * k_ + c) * words_,
                    static_cast<std::size_t>(u));
    --degrees_[static_cast<std::size_t>(u) * k_ + c];
    --degrees_[static_cast<std::size_t>(v) * k_ + c];
    if (--color_use_[static_cast<std::size_t>(c)] == 0)
        --distinct_;
}

EdgeColoring PartialColoring::to_coloring() const
{
    if (!complete())
        throw std::logic_error("to_coloring: coloring incomplete");
    EdgeColoring g(n_, k_, 0);
    for (Vertex v = 1; v < n_; ++v)
        for (Vertex u = 0; u < v; ++u)
            g.set_color(v, u, color_of(v, u));
    return g;
}

} // namespace gallai
