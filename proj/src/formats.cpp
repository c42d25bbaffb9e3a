#include "cochrom/formats.hpp"

#include <charconv>
#include <sstream>

namespace cochrom {

namespace {

constexpr int G6_LO = 63;  // '?'
constexpr int G6_HI = 126; // '~'
constexpr int G6_MAX_ORDER = 258047; // largest order the 4-byte header encodes

int g6_byte(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw parse_error("graph6: truncated input", pos);
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < G6_LO || c > G6_HI)
        throw parse_error("graph6: non-printable byte " + std::to_string(int{c}), pos);
    return c - G6_LO;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.substr(0, 10) == ">>graph6<<")
        pos = 10;
    if (pos >= text.size())
        throw parse_error("graph6: empty input", pos);

    long long n;
    if (static_cast<unsigned char>(text[pos]) != G6_HI) {
        n = g6_byte(text, pos);
        ++pos;
    } else {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == G6_HI)
            throw parse_error("graph6: 8-byte order header (n > 258047) unsupported", pos);
        n = 0;
        for (int i = 0; i < 3; ++i, ++pos)
            n = (n << 6) | g6_byte(text, pos);
        if (n <= 62)
            throw parse_error("graph6: non-canonical long header for small order", pos - 3);
    }

    Graph g(static_cast<int>(n));
    const std::size_t bit_total = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_total = (bit_total + 5) / 6;
    if (text.size() - pos < byte_total)
        throw parse_error("graph6: truncated bit stream", text.size());
    if (text.size() - pos > byte_total)
        throw parse_error("graph6: trailing bytes after bit stream", pos + byte_total);

    std::size_t k = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int shift = 5 - static_cast<int>(k % 6);
            if (shift == 5)
                cur = g6_byte(text, pos + k / 6);
            if ((cur >> shift) & 1)
                g.add_edge(u, v);
        }
    }
    // canonical encodings zero-pad the last byte
    if (bit_total % 6 != 0) {
        const int pad = cur & ((1 << (6 - static_cast<int>(bit_total % 6))) - 1);
        if (pad != 0)
            throw parse_error("graph6: nonzero padding bits", pos + byte_total - 1);
    }
    return g;
}

std::string write_graph6(const Graph& g)
{
    const long long n = g.order();
    if (n > G6_MAX_ORDER)
        throw std::invalid_argument("write_graph6: order above 258047 unsupported");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + G6_LO));
    } else {
        out.push_back(static_cast<char>(G6_HI));
        out.push_back(static_cast<char>(((n >> 12) & 63) + G6_LO));
        out.push_back(static_cast<char>(((n >> 6) & 63) + G6_LO));
        out.push_back(static_cast<char>((n & 63) + G6_LO));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + G6_LO));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + G6_LO));
    return out;
}

DimacsGraph parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0, m_declared = 0;
    std::size_t m_seen = 0;
    Graph g;
    std::vector<std::string> warnings;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;
        if (tag == "c" || tag[0] == 'c')
            continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m_declared) || (kind != "edge" && kind != "col") || n < 0)
                throw parse_error("dimacs: malformed problem line " + std::to_string(lineno), 0);
            if (have_header)
                throw parse_error("dimacs: duplicate problem line " + std::to_string(lineno), 0);
            have_header = true;
            g = Graph(static_cast<int>(n));
            continue;
        }
        if (tag == "e") {
            if (!have_header)
                throw parse_error("dimacs: edge before problem line " + std::to_string(lineno), 0);
            long long u, v;
            if (!(ls >> u >> v))
                throw parse_error("dimacs: malformed edge line " + std::to_string(lineno), 0);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("dimacs: vertex out of range on line " + std::to_string(lineno), 0);
            if (u == v)
                throw parse_error("dimacs: self-loop on line " + std::to_string(lineno), 0);
            if (!g.adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1))) {
                g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
                ++m_seen;
            }
            continue;
        }
        throw parse_error("dimacs: unrecognized line " + std::to_string(lineno), 0);
    }
    if (!have_header)
        throw parse_error("dimacs: missing problem line", 0);
    if (static_cast<long long>(m_seen) != m_declared)
        warnings.push_back("dimacs: header declares " + std::to_string(m_declared) +
                           " edges, found " + std::to_string(m_seen) + " distinct");
    return {std::move(g), std::move(warnings)};
}

std::string write_dimacs(const Graph& g)
{
    std::string out = "p edge " + std::to_string(g.order()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings)
{
    if (format == GraphFormat::auto_detect) {
        std::size_t i = text.find_first_not_of(" \t\r\n");
        const char lead = i == std::string_view::npos ? '\0' : text[i];
        format = (lead == 'c' || lead == 'p' || lead == 'e') ? GraphFormat::dimacs
                                                             : GraphFormat::graph6;
    }
    if (format == GraphFormat::dimacs) {
        DimacsGraph r = parse_dimacs(text);
        if (warnings)
            warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());
        return std::move(r.graph);
    }
    // strip one trailing newline so whole-file reads parse as a single line
    std::string_view t = text;
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r'))
        t.remove_suffix(1);
    return parse_graph6(t);
}

} // namespace cochrom
