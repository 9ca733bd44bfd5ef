// Copyright 2026 The rtdkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graph.hpp -- undirected graphs and brute-force domination
//
// Graph format: "<n> <m>" followed by m lines "<u> <v>" with 0-based
// vertex indices; '#' comments and blank lines are ignored.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtdkit/bitvec.hpp"
#include "rtdkit/combinatorics.hpp"
#include "rtdkit/format.hpp"

namespace rtdkit {

/// Simple undirected graph on vertices 0..n-1 (printed as v1..vn).
class Graph
{
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit Graph(std::size_t n = 0) : _n(n), _closed(n, BitVector(n))
    {
        for (std::size_t v = 0; v < n; ++v)
            _closed[v].set(v);
    }

    /// Throws std::invalid_argument on self-loops, repeated edges or
    /// out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    static Graph complete(std::size_t n)
    {
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    static Graph path(std::size_t n)
    {
        Graph g(n);
        for (std::size_t v = 1; v < n; ++v)
            g.add_edge(v - 1, v);
        return g;
    }

    std::size_t size() const noexcept { return _n; }
    std::size_t edge_count() const noexcept { return _edges.size(); }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> e = _edges;
        std::sort(e.begin(), e.end());
        return e;
    }

    bool adjacent(std::size_t u, std::size_t v) const
    {
        check_vertex(u);
        check_vertex(v);
        return u != v && _closed[u][v];
    }

    /// u dominates v iff u == v or {u, v} is an edge.
    bool dominates(std::size_t u, std::size_t v) const
    {
        check_vertex(u);
        check_vertex(v);
        return _closed[u][v];
    }

    /// Vertices dominated by u (its closed neighborhood).
    const BitVector& closed_neighborhood(std::size_t u) const
    {
        check_vertex(u);
        return _closed[u];
    }

    bool is_dominating(std::span<const std::size_t> vertices) const
    {
        BitVector covered(_n);
        for (std::size_t v : vertices)
            covered |= closed_neighborhood(v);
        return covered.all();
    }

    static std::string vertex_label(std::size_t v) { return "v" + std::to_string(v + 1); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a._n == b._n && a.edges() == b.edges();
    }

private:
    void add_edge(std::size_t u, std::size_t v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (_closed[u][v])
            throw std::invalid_argument("repeated edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        _closed[u].set(v);
        _closed[v].set(u);
        _edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    void check_vertex(std::size_t v) const
    {
        if (v >= _n)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range for graph of size " +
                                        std::to_string(_n));
    }

    std::size_t _n;
    std::vector<BitVector> _closed;
    std::vector<Edge> _edges;
};

inline bool dominates(const Graph& g, std::size_t u, std::size_t v)
{
    return g.dominates(u, v);
}

struct DomSetResult
{
    bool found = false;
    IndexSet witness;
};

/// Decides whether g has a dominating set of at most k vertices. Only
/// subsets of size exactly min(k, n) are enumerated (domination is upward
/// closed); the witness is the lexicographically first such subset.
inline DomSetResult has_dominating_set(const Graph& g, std::size_t k)
{
    DomSetResult r;
    std::size_t size = std::min(k, g.size());
    for_each_combination(g.size(), size, [&](const IndexSet& t) {
        if (g.is_dominating(t)) {
            r = {true, t};
            return true;
        }
        return false;
    });
    return r;
}

/// Smallest dominating set (lexicographically first among the smallest).
inline IndexSet min_dominating_set(const Graph& g)
{
    for (std::size_t k = 0; k <= g.size(); ++k) {
        IndexSet found;
        bool ok = for_each_combination(g.size(), k, [&](const IndexSet& t) {
            if (g.is_dominating(t)) {
                found = t;
                return true;
            }
            return false;
        });
        if (ok)
            return found;
    }
    return {}; // unreachable: V dominates itself
}

/// Extends `t` to exactly k vertices by adding the smallest unused indices.
inline IndexSet pad_to_size(const Graph& g, IndexSet t, std::size_t k)
{
    if (k > g.size())
        throw std::invalid_argument("cannot pad a vertex set beyond the graph size");
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.size() > k)
        throw std::invalid_argument("vertex set already larger than requested size");
    for (std::size_t v = 0; t.size() < k; ++v)
        if (!std::binary_search(t.begin(), t.end(), v))
            t.insert(std::upper_bound(t.begin(), t.end(), v), v);
    return t;
}

/// Erdos-Renyi G(n, p) sample.
///
/// Bit-exact contract: an std::mt19937_64 engine is seeded with `seed`;
/// pairs (u, v), u < v, are visited with u outer and v inner, each drawing
/// one 64-bit output r, and the edge is present iff (r >> 11) * 2^-53 < p.
inline Graph gen_random_graph(std::size_t n, double edge_probability, std::uint64_t seed)
{
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < edge_probability)
                edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

inline Graph parse_graph(std::string_view text)
{
    auto lines = detail::tokenize_lines(text);
    if (lines.empty())
        throw ParseError(0, "empty input: missing '<n> <m>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 2)
        throw ParseError(header.number, "header must be '<n> <m>'");
    std::size_t n = detail::parse_count(header.tokens[0], header.number, "n");
    std::size_t m = detail::parse_count(header.tokens[1], header.number, "m");
    if (lines.size() - 1 != m)
        throw ParseError(lines.back().number, "expected " + std::to_string(m) +
                                                  " edge lines, found " +
                                                  std::to_string(lines.size() - 1));
    std::vector<Graph::Edge> edges;
    std::set<Graph::Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 2)
            throw ParseError(l.number, "edge line must be '<u> <v>'");
        std::size_t u = detail::parse_count(l.tokens[0], l.number, "vertex");
        std::size_t v = detail::parse_count(l.tokens[1], l.number, "vertex");
        if (u >= n || v >= n)
            throw ParseError(l.number, "vertex out of range for n = " + std::to_string(n));
        if (u == v)
            throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw ParseError(l.number, "repeated edge " + std::to_string(u) + " " +
                                           std::to_string(v));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline std::string serialize_graph(const Graph& g)
{
    std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph read_graph_file(const std::string& path)
{
    return parse_graph(detail::read_file(path));
}

} // namespace rtdkit
