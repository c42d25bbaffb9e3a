#include <algorithm>

#include "cochrom/solve.hpp"

// Exact chromatic number: DSATUR-ordered branch and bound. The root lower
// bound is an exact maximum clique, whose vertices are pre-colored 0..q-1
// (sound: any proper coloring can be permuted onto that assignment). A
// vertex may open color i only when colors < i are already in use.

namespace cochrom {

namespace {

using Clock = std::chrono::steady_clock;

struct ChiSearch {
    const Graph& g;
    int n;
    int lb;
    int best_ub;
    std::vector<int> best_assign;
    std::vector<int> color;                  // -1 = uncolored
    std::vector<std::vector<int>> adjc;      // adjc[v][c] = #neighbors of v with color c
    std::vector<int> sat;                    // #distinct neighbor colors
    std::vector<int> deg;
    std::uint64_t nodes = 0;
    bool timed_out = false;
    Clock::time_point deadline;
    bool has_deadline;

    ChiSearch(const Graph& g, int lb, Clock::time_point deadline, bool has_deadline)
        : g(g), n(g.order()), lb(lb), best_ub(n + 1), color(n, -1),
          adjc(n, std::vector<int>(n + 1, 0)), sat(n, 0), deg(n, 0),
          deadline(deadline), has_deadline(has_deadline)
    {
        for (int v = 0; v < n; ++v)
            deg[v] = g.degree(v);
    }

    bool out_of_time()
    {
        if (has_deadline && (nodes & 255) == 0 && Clock::now() > deadline)
            timed_out = true;
        return timed_out;
    }

    void assign(int v, int c)
    {
        color[v] = c;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(u, v) && adjc[u][c]++ == 0)
                ++sat[u];
    }

    void unassign(int v, int c)
    {
        color[v] = -1;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(u, v) && --adjc[u][c] == 0)
                --sat[u];
    }

    int pick() const
    {
        int best_v = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            if (best_v < 0 || sat[v] > sat[best_v] ||
                (sat[v] == sat[best_v] && deg[v] > deg[best_v]))
                best_v = v;
        }
        return best_v;
    }

    void dfs(int colored, int used)
    {
        ++nodes;
        if (out_of_time() || best_ub == lb)
            return;
        if (colored == n) {
            best_ub = used;
            best_assign = color;
            return;
        }
        const int v = pick();
        const int new_color_cap = std::min(used + 1, best_ub - 1);
        for (int c = 0; c < new_color_cap; ++c) {
            if (adjc[v][c] > 0)
                continue;
            assign(v, c);
            dfs(colored + 1, std::max(used, c + 1));
            unassign(v, c);
            if (timed_out || best_ub == lb)
                return;
        }
    }
};

} // namespace

int Coloring::color_count() const
{
    int m = 0;
    std::vector<bool> seen;
    for (int c : assignment) {
        if (c >= static_cast<int>(seen.size()))
            seen.resize(c + 1, false);
        if (c >= 0 && !seen[c]) {
            seen[c] = true;
            ++m;
        }
    }
    return m;
}

SolveResult chromatic_number(const Graph& g, Budget budget)
{
    const auto start = Clock::now();
    const auto deadline = start + budget.limit;
    SolveResult r;
    if (g.order() == 0) {
        r.witness = Coloring{};
        return r;
    }

    SolveResult clique = clique_number(g, budget);
    const int lb = clique.lower;
    ChiSearch search(g, lb, deadline, !budget.unlimited());
    search.nodes = clique.nodes;
    search.timed_out = clique.timed_out;

    if (!search.timed_out) {
        const auto& q = std::get<VertexSet>(clique.witness);
        int next = 0;
        for (int v : q.members())
            search.assign(v, next++);
        search.dfs(next, next);
    }
    if (search.best_assign.empty()) {
        // timed out before the first full descent; identity coloring stands in
        search.best_assign.resize(g.order());
        for (int v = 0; v < g.order(); ++v)
            search.best_assign[v] = v;
        search.best_ub = g.order();
    }

    r.lower = search.timed_out ? lb : search.best_ub;
    r.upper = search.best_ub;
    r.value = search.best_ub;
    r.timed_out = search.timed_out;
    r.witness = Coloring{std::move(search.best_assign)};
    r.nodes = search.nodes;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

} // namespace cochrom
