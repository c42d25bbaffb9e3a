#include <algorithm>
#include <bit>

#include "cochrom/solve.hpp"

// Maximum clique by branch and bound over bitset candidate rows, with a
// greedy-coloring upper bound per node (Tomita-style). All choices break
// ties toward the lowest vertex index, so runs are deterministic.

namespace cochrom {

namespace {

using Clock = std::chrono::steady_clock;

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int words = 0) : w(words, 0) {}
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool any() const
    {
        for (auto x : w)
            if (x)
                return true;
        return false;
    }
    int lowest() const
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i])
                return static_cast<int>(i * 64 + std::countr_zero(w[i]));
        return -1;
    }
};

struct CliqueSearch {
    const Graph& g;
    int n;
    int words;
    int best = 0;
    std::vector<int> best_members;
    std::vector<int> current;
    std::uint64_t nodes = 0;
    bool timed_out = false;
    int stop_at; // unwind once best reaches this (0 = never)
    Clock::time_point deadline;
    bool has_deadline;

    CliqueSearch(const Graph& g, Budget budget, int stop_at)
        : g(g), n(g.order()), words(g.words_per_row()), stop_at(stop_at),
          has_deadline(!budget.unlimited())
    {
        if (has_deadline)
            deadline = Clock::now() + budget.limit;
    }

    bool out_of_time()
    {
        if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline)
            timed_out = true;
        return timed_out;
    }

    void record()
    {
        best = static_cast<int>(current.size());
        best_members = current;
    }

    // Greedy-color P; emits vertices in nondecreasing color order.
    void color_sort(const Bits& p, std::vector<int>& order, std::vector<int>& colors)
    {
        order.clear();
        colors.clear();
        Bits uncolored = p;
        int color = 0;
        Bits cls(words);
        while (uncolored.any()) {
            ++color;
            cls = uncolored;
            while (true) {
                const int v = cls.lowest();
                if (v < 0)
                    break;
                order.push_back(v);
                colors.push_back(color);
                uncolored.reset(v);
                cls.reset(v);
                const auto rv = g.row(v);
                for (int i = 0; i < words; ++i)
                    cls.w[i] &= ~rv[i];
            }
        }
    }

    void expand(Bits p)
    {
        ++nodes;
        if (out_of_time())
            return;
        if (stop_at > 0 && best >= stop_at)
            return;

        std::vector<int> order, colors;
        color_sort(p, order, colors);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + colors[i] <= best)
                return; // colors ascending: everything left prunes too
            const int v = order[i];
            p.reset(v);
            current.push_back(v);
            Bits child(words);
            const auto rv = g.row(v);
            for (int j = 0; j < words; ++j)
                child.w[j] = p.w[j] & rv[j];
            if (!child.any()) {
                if (static_cast<int>(current.size()) > best)
                    record();
            } else {
                expand(child);
            }
            current.pop_back();
            if (timed_out || (stop_at > 0 && best >= stop_at))
                return;
        }
    }

    // Valid global upper bound: a greedy proper coloring of the whole graph.
    int root_upper_bound()
    {
        Bits all(words);
        for (int v = 0; v < n; ++v)
            all.set(v);
        std::vector<int> order, colors;
        color_sort(all, order, colors);
        return colors.empty() ? 0 : colors.back();
    }
};

SolveResult max_clique(const Graph& g, Budget budget, int stop_at)
{
    const auto start = Clock::now();
    CliqueSearch search(g, budget, stop_at);
    SolveResult r;
    const int ub0 = search.root_upper_bound();
    if (g.order() > 0) {
        Bits all(search.words);
        for (int v = 0; v < g.order(); ++v)
            all.set(v);
        search.expand(all);
    }
    VertexSet witness(g.order());
    for (int v : search.best_members)
        witness.insert(v);
    r.lower = search.best;
    r.timed_out = search.timed_out;
    if (stop_at > 0 && search.best >= stop_at)
        r.timed_out = true; // early stop: bounds only
    r.upper = r.timed_out ? ub0 : search.best;
    r.value = r.timed_out ? r.lower : search.best;
    r.witness = std::move(witness);
    r.nodes = search.nodes;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

} // namespace

SolveResult clique_number(const Graph& g, Budget budget)
{
    return max_clique(g, budget, 0);
}

SolveResult independence_number(const Graph& g, Budget budget)
{
    SolveResult r = clique_number(complement(g), budget);
    return r; // witness vertex labels coincide; independent in g
}

std::optional<VertexSet> find_independent_set(const Graph& g, int size, Budget budget)
{
    if (size <= 0)
        return VertexSet(g.order());
    if (size > g.order())
        return std::nullopt;
    SolveResult r = max_clique(complement(g), budget, size);
    if (r.lower < size)
        return std::nullopt;
    const VertexSet& found = std::get<VertexSet>(r.witness);
    VertexSet trimmed(g.order());
    int taken = 0;
    for (int v : found.members()) {
        if (taken == size)
            break;
        trimmed.insert(v);
        ++taken;
    }
    return trimmed;
}

} // namespace cochrom
