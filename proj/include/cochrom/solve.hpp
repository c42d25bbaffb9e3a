#ifndef COCHROM_SOLVE_HPP
#define COCHROM_SOLVE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cochrom/graph.hpp"

namespace cochrom {

// Vertex -> color map, colors 0-based and contiguous.
struct Coloring {
    std::vector<int> assignment;
    int color_count() const;
};

enum class ClassKind { clique, independent };

// Partition of V(G) into classes, each a clique or an independent set.
struct HomogeneousPartition {
    std::vector<std::pair<VertexSet, ClassKind>> classes;
};

using Witness = std::variant<std::monostate, VertexSet, Coloring, HomogeneousPartition>;

// Wall-clock budget for a single solve; zero means unlimited.
struct Budget {
    std::chrono::milliseconds limit{0};
    bool unlimited() const { return limit.count() == 0; }
};

// Exact when timed_out is false (then lower == upper == value). On budget
// expiry the solver returns its best certified bounds and a witness for
// the upper bound (for omega/alpha the witness certifies the lower).
struct SolveResult {
    int value = 0;
    int lower = 0;
    int upper = 0;
    bool timed_out = false;
    Witness witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool exact() const { return !timed_out; }
};

SolveResult clique_number(const Graph& g, Budget budget = {});
SolveResult independence_number(const Graph& g, Budget budget = {});
SolveResult chromatic_number(const Graph& g, Budget budget = {});
SolveResult cochromatic_number(const Graph& g, Budget budget = {});

// Decision search: any independent set with exactly `size` vertices.
std::optional<VertexSet> find_independent_set(const Graph& g, int size, Budget budget = {});

struct VerifyOutcome {
    bool ok = true;
    std::string violation; // first offending edge / vertex, empty when ok
    explicit operator bool() const { return ok; }
};

VerifyOutcome verify_coloring(const Graph& g, const Coloring& c);
VerifyOutcome verify_homogeneous_partition(const Graph& g, const HomogeneousPartition& p);
VerifyOutcome verify_clique(const Graph& g, const VertexSet& s);
VerifyOutcome verify_independent_set(const Graph& g, const VertexSet& s);

// Calls the visitor once per proper coloring with colors from {0..k-1},
// counted as functions; with canonical=true only the representative per
// color permutation is produced (color i+1 first appears after color i).
// Returns the number of colorings visited.
std::uint64_t enumerate_proper_colorings(
    const Graph& g, int k,
    const std::function<void(const Coloring&)>& visitor = nullptr,
    bool canonical = false);

} // namespace cochrom

#endif
