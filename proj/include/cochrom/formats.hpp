#ifndef COCHROM_FORMATS_HPP
#define COCHROM_FORMATS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cochrom/graph.hpp"

namespace cochrom {

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset(offset)
    {
    }
    std::size_t offset;
};

// graph6: printable bytes 63..126, upper-triangle bits in column order,
// 6 bits per byte, header n+63 for n <= 62 or 126 followed by three data
// bytes for n <= 258047. write(parse(s)) == s for canonical inputs.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// DIMACS "p edge n m" / 1-indexed "e u v" lines. Duplicate edges collapse;
// an edge-count mismatch is reported as a warning, not an error.
struct DimacsGraph {
    Graph graph;
    std::vector<std::string> warnings;
};
DimacsGraph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

enum class GraphFormat { auto_detect, graph6, dimacs };

// One-graph convenience used by the CLI: sniffs DIMACS ('c'/'p' lead lines)
// vs graph6 unless told otherwise. Warnings are appended when non-null.
Graph parse_graph(std::string_view text, GraphFormat format,
                  std::vector<std::string>* warnings = nullptr);

} // namespace cochrom

#endif
