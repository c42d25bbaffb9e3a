#include <algorithm>

#include "cochrom/solve.hpp"

// Exact cochromatic number. Branch and bound assigning vertices in a fixed
// order to existing classes or a fresh one; a class's kind (clique vs
// independent) is fixed the moment it gets its second vertex, singletons
// stay kind-free. Initial incumbent comes from the chromatic solver on the
// graph and its complement (color classes become all-independent resp.
// all-clique partitions). Pruning uses per-class spare capacity against
// max(alpha, omega).

namespace cochrom {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int KIND_FREE = -1;
constexpr int KIND_CLIQUE = 0;
constexpr int KIND_INDEP = 1;

struct ZetaSearch {
    const Graph& g;
    int n;
    int words;
    int cap_clique;  // (upper bound on) omega
    int cap_indep;   // (upper bound on) alpha
    int cap_free;
    int lb;
    int best;
    std::vector<std::vector<std::uint64_t>> members;
    std::vector<std::vector<int>> lists;
    std::vector<int> kinds;
    int used = 0;
    std::vector<int> order;
    HomogeneousPartition best_partition;
    std::uint64_t nodes = 0;
    bool timed_out = false;
    Clock::time_point deadline;
    bool has_deadline;

    ZetaSearch(const Graph& g, int cap_clique, int cap_indep, int lb, int incumbent,
               Clock::time_point deadline, bool has_deadline)
        : g(g), n(g.order()), words(g.words_per_row()), cap_clique(cap_clique),
          cap_indep(cap_indep), cap_free(std::max(cap_clique, cap_indep)), lb(lb),
          best(incumbent), members(n, std::vector<std::uint64_t>(words, 0)),
          lists(n), kinds(n, KIND_FREE), deadline(deadline), has_deadline(has_deadline)
    {
        order.resize(n);
        for (int v = 0; v < n; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool out_of_time()
    {
        if (has_deadline && (nodes & 255) == 0 && Clock::now() > deadline)
            timed_out = true;
        return timed_out;
    }

    int capacity(int i) const
    {
        return kinds[i] == KIND_CLIQUE ? cap_clique
             : kinds[i] == KIND_INDEP  ? cap_indep
                                       : cap_free;
    }

    void record()
    {
        best = used;
        best_partition.classes.clear();
        for (int i = 0; i < used; ++i) {
            VertexSet s(n);
            for (int v : lists[i])
                s.insert(v);
            best_partition.classes.emplace_back(
                std::move(s),
                kinds[i] == KIND_CLIQUE ? ClassKind::clique : ClassKind::independent);
        }
    }

    bool fits_clique(int i, std::span<const std::uint64_t> rv) const
    {
        for (int w = 0; w < words; ++w)
            if (members[i][w] & ~rv[w])
                return false;
        return true;
    }

    bool fits_indep(int i, std::span<const std::uint64_t> rv) const
    {
        for (int w = 0; w < words; ++w)
            if (members[i][w] & rv[w])
                return false;
        return true;
    }

    void dfs(int idx)
    {
        ++nodes;
        if (out_of_time() || best == lb)
            return;
        if (idx == n) {
            record();
            return;
        }
        // classes can still absorb `spare` vertices; the rest need fresh
        // classes of at most cap_free vertices each
        const int remaining = n - idx;
        int spare = 0;
        for (int i = 0; i < used; ++i)
            spare += capacity(i) - static_cast<int>(lists[i].size());
        const int need_new =
            remaining > spare ? (remaining - spare + cap_free - 1) / cap_free : 0;
        if (used + need_new >= best)
            return;

        const int v = order[idx];
        const auto rv = g.row(v);
        for (int i = 0; i < used; ++i) {
            const int kind = kinds[i];
            int joined_kind = -2;
            if ((kind == KIND_CLIQUE || kind == KIND_FREE) && fits_clique(i, rv))
                joined_kind = KIND_CLIQUE;
            else if ((kind == KIND_INDEP || kind == KIND_FREE) && fits_indep(i, rv))
                joined_kind = KIND_INDEP;
            if (joined_kind == -2)
                continue;
            kinds[i] = joined_kind;
            push(i, v);
            dfs(idx + 1);
            pop(i, v);
            kinds[i] = kind;
            if (timed_out || best == lb)
                return;
        }
        // fresh kind-free class
        kinds[used] = KIND_FREE;
        push(used, v);
        ++used;
        dfs(idx + 1);
        --used;
        pop(used, v);
    }

    void push(int i, int v)
    {
        lists[i].push_back(v);
        members[i][v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void pop(int i, int v)
    {
        lists[i].pop_back();
        members[i][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
};

HomogeneousPartition partition_from_coloring(const Coloring& c, int n, ClassKind kind)
{
    HomogeneousPartition p;
    std::vector<int> class_of(n + 1, -1);
    for (int v = 0; v < n; ++v) {
        const int col = c.assignment[v];
        if (class_of[col] < 0) {
            class_of[col] = static_cast<int>(p.classes.size());
            p.classes.emplace_back(VertexSet(n), kind);
        }
        p.classes[class_of[col]].first.insert(v);
    }
    return p;
}

Budget remaining_budget(Budget total, Clock::time_point start)
{
    if (total.unlimited())
        return total;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        total.limit - (Clock::now() - start));
    return Budget{std::max(left, std::chrono::milliseconds{1})};
}

} // namespace

SolveResult cochromatic_number(const Graph& g, Budget budget)
{
    const auto start = Clock::now();
    const auto deadline = start + budget.limit;
    const int n = g.order();
    SolveResult r;
    if (n == 0) {
        r.witness = HomogeneousPartition{};
        return r;
    }

    const Graph gc = complement(g);
    SolveResult omega = clique_number(g, remaining_budget(budget, start));
    SolveResult alpha = clique_number(gc, remaining_budget(budget, start));
    SolveResult chi = chromatic_number(g, remaining_budget(budget, start));
    SolveResult chi_c = chromatic_number(gc, remaining_budget(budget, start));
    r.nodes = omega.nodes + alpha.nodes + chi.nodes + chi_c.nodes;

    HomogeneousPartition incumbent =
        chi.upper <= chi_c.upper
            ? partition_from_coloring(std::get<Coloring>(chi.witness), n, ClassKind::independent)
            : partition_from_coloring(std::get<Coloring>(chi_c.witness), n, ClassKind::clique);
    const int incumbent_size = static_cast<int>(incumbent.classes.size());

    const int cap = std::max(omega.upper, alpha.upper);
    const int lb = (n + cap - 1) / cap;

    ZetaSearch search(g, omega.upper, alpha.upper, lb, incumbent_size, deadline,
                      !budget.unlimited());
    search.best_partition = std::move(incumbent);
    search.timed_out =
        omega.timed_out || alpha.timed_out || chi.timed_out || chi_c.timed_out;
    if (!search.timed_out && incumbent_size > lb)
        search.dfs(0);
    r.nodes += search.nodes;

    r.timed_out = search.timed_out;
    r.lower = search.timed_out ? lb : search.best;
    r.upper = search.best;
    r.value = search.best;
    r.witness = std::move(search.best_partition);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

} // namespace cochrom
