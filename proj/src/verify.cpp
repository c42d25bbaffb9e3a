#include <string>

#include "cochrom/solve.hpp"

namespace cochrom {

namespace {

std::string edge_str(int u, int v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

VerifyOutcome verify_coloring(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw std::invalid_argument("verify_coloring: coloring covers " +
                                    std::to_string(c.assignment.size()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (c.assignment[v] < 0)
            return {false, "vertex " + std::to_string(v) + " uncolored"};
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && c.assignment[u] == c.assignment[v])
                return {false, "monochromatic edge " + edge_str(u, v)};
    return {};
}

VerifyOutcome verify_clique(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        return {false, "vertex set universe mismatch"};
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!g.adjacent(m[i], m[j]))
                return {false, "missing edge " + edge_str(m[i], m[j])};
    return {};
}

VerifyOutcome verify_independent_set(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        return {false, "vertex set universe mismatch"};
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.adjacent(m[i], m[j]))
                return {false, "edge " + edge_str(m[i], m[j]) + " inside set"};
    return {};
}

VerifyOutcome verify_homogeneous_partition(const Graph& g, const HomogeneousPartition& p)
{
    const int n = g.order();
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const auto& [set, kind] = p.classes[i];
        if (set.universe() != n)
            return {false, "class " + std::to_string(i) + ": universe mismatch"};
        if (set.empty())
            return {false, "class " + std::to_string(i) + " is empty"};
        for (int v : set.members()) {
            if (owner[v] >= 0)
                return {false, "vertex " + std::to_string(v) + " in classes " +
                                   std::to_string(owner[v]) + " and " + std::to_string(i)};
            owner[v] = static_cast<int>(i);
        }
        const VerifyOutcome kind_ok = kind == ClassKind::clique
                                          ? verify_clique(g, set)
                                          : verify_independent_set(g, set);
        if (!kind_ok)
            return {false, "class " + std::to_string(i) + ": " + kind_ok.violation};
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0)
            return {false, "vertex " + std::to_string(v) + " uncovered"};
    return {};
}

namespace {

struct ColoringEnumerator {
    const Graph& g;
    int n;
    int k;
    const std::function<void(const Coloring&)>& visitor;
    bool canonical;
    Coloring current;
    std::uint64_t count = 0;

    void rec(int v, int used)
    {
        if (v == n) {
            ++count;
            if (visitor)
                visitor(current);
            return;
        }
        const int limit = canonical ? std::min(k, used + 1) : k;
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && current.assignment[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            current.assignment[v] = c;
            rec(v + 1, std::max(used, c + 1));
            current.assignment[v] = -1;
        }
    }
};

} // namespace

std::uint64_t enumerate_proper_colorings(const Graph& g, int k,
                                         const std::function<void(const Coloring&)>& visitor,
                                         bool canonical)
{
    if (k < 0)
        throw std::invalid_argument("enumerate_proper_colorings: negative color count");
    ColoringEnumerator e{g, g.order(), k, visitor, canonical, Coloring{}, 0};
    e.current.assignment.assign(g.order(), -1);
    e.rec(0, 0);
    return e.count;
}

} // namespace cochrom
