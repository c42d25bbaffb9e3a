#ifndef COCHROM_GRAPH_HPP
#define COCHROM_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cochrom {

// Simple undirected graph on vertices 0..n-1. Adjacency is kept as one
// fixed-width bit row per vertex so neighborhood intersections in the
// solvers run word-parallel. No self-loops; rows stay symmetric.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0)
    {
        if (n < 0)
            throw std::invalid_argument("Graph: negative vertex count");
    }

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const
    {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }

    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: self-loop rejected");
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    void remove_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    }

    std::span<const std::uint64_t> row(int v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_,
                static_cast<std::size_t>(words_)};
    }

    int degree(int v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Subset of {0..n-1} for a host graph of order n, stored as a bit vector.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0)
    {
        if (universe < 0)
            throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> vs)
    {
        VertexSet s(universe);
        for (int v : vs)
            s.insert(v);
        return s;
    }
    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    int universe() const { return n_; }
    bool contains(int v) const
    {
        return (words_[v >> 6] >> (v & 63)) & 1;
    }
    void insert(int v)
    {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v)
    {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> members() const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const VertexSet&) const = default;
    // lexicographic on (universe, members); gives the deterministic family order
    bool operator<(const VertexSet& o) const
    {
        if (n_ != o.n_)
            return n_ < o.n_;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i])
                return words_[i] < o.words_[i];
        return false;
    }

private:
    void check(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Builders. All pure; results are never mutated afterwards.
Graph empty_graph(int n);
Graph complete(int k);
Graph cycle(int k); // k >= 3
Graph path(int k);
Graph complete_bipartite(int a, int b);
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph add_vertex(const Graph& g, const VertexSet& nbrs);

// G(n,p) with p = p_num/p_den, sampled from the SplitMix64 counter stream
// (see rng.hpp); identical (n, p, seed) gives an identical graph on every
// platform.
Graph sample_gnp(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

} // namespace cochrom

#endif
