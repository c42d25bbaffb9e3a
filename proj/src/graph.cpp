#include "cochrom/graph.hpp"

#include <bit>

#include "cochrom/rng.hpp"

namespace cochrom {

int Graph::degree(int v) const
{
    check_vertex(v);
    int d = 0;
    for (std::uint64_t w : row(v))
        d += std::popcount(w);
    return d;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

int VertexSet::count() const
{
    int c = 0;
    for (std::uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int k)
{
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle(int k)
{
    if (k < 3)
        throw std::invalid_argument("cycle: need k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

Graph path(int k)
{
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g;
}

Graph join(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order(), n2 = g2.order();
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges())
        g.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            g.add_edge(u, n1 + v);
    return g;
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
    const std::vector<int> keep = s.members(); // sorted by construction
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph add_vertex(const Graph& g, const VertexSet& nbrs)
{
    if (nbrs.universe() != g.order())
        throw std::invalid_argument("add_vertex: neighborhood universe mismatch");
    const int n = g.order();
    Graph out(n + 1);
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (int u : nbrs.members())
        out.add_edge(n, u);
    return out;
}

Graph sample_gnp(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed)
{
    if (p_den == 0 || p_num > p_den)
        throw std::invalid_argument("sample_gnp: need 0 <= p_num/p_den <= 1");
    Graph g(n);
    if (p_num == 0)
        return g;
    // threshold = floor(p * 2^64); a draw u hits iff u < threshold
    const bool always = (p_num == p_den);
    const std::uint64_t threshold = always
        ? 0
        : static_cast<std::uint64_t>((static_cast<unsigned __int128>(p_num) << 64) / p_den);
    std::uint64_t k = 0; // pair counter in column order: (0,1),(0,2),(1,2),(0,3),...
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (always || stream_at(seed, k) < threshold)
                g.add_edge(u, v);
    return g;
}

} // namespace cochrom
