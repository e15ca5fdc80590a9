#include "chromapoly/io.hpp"

#include <charconv>
#include <vector>

namespace chromapoly {

namespace {

bool significant(std::string_view line) {
    for (char c : line) {
        if (c == '#') return false;
        if (c != ' ' && c != '\t' && c != '\r') return true;
    }
    return false;
}

std::vector<long> parse_numbers(std::string_view line, int line_no) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        if (pos >= line.size()) break;
        long value = 0;
        auto [next, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc() || (next != line.data() + line.size() && *next != ' ' &&
                                  *next != '\t' && *next != '\r'))
            throw ParseError(line_no, "expected a whitespace-separated list of integers");
        out.push_back(value);
        pos = static_cast<std::size_t>(next - line.data());
    }
    return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    int line_no = 0;
    long n = -1;
    std::vector<VertexSet> edges;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (!significant(line)) continue;

        const std::vector<long> numbers = parse_numbers(line, line_no);
        if (n < 0) {
            if (numbers.size() != 1)
                throw ParseError(line_no, "the first line must hold the vertex count only");
            n = numbers[0];
            if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
            if (n > kMaxVertices)
                throw SizeLimitError("vertex count " + std::to_string(n) + " exceeds the " +
                                     std::to_string(kMaxVertices) + "-vertex limit");
            continue;
        }

        VertexSet mask = 0;
        for (long v : numbers) {
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex index " + std::to_string(v) +
                                              " out of range 1.." + std::to_string(n));
            const VertexSet bit = VertexSet{1} << (v - 1);
            if (mask & bit)
                throw ParseError(line_no, "vertex " + std::to_string(v) + " repeated in edge");
            mask |= bit;
        }
        if (popcount(mask) < 2)
            throw ParseError(line_no, "edge cardinality must be at least 2");
        for (VertexSet previous : edges)
            if (previous == mask) throw ParseError(line_no, "duplicate edge");
        if (edges.size() >= static_cast<std::size_t>(kMaxEdges))
            throw SizeLimitError("edge count exceeds the " + std::to_string(kMaxEdges) +
                                 "-edge limit");
        edges.push_back(mask);
    }

    if (n < 0) throw ParseError(line_no, "missing vertex count");
    return Hypergraph::from_edge_masks(static_cast<int>(n), std::move(edges));
}

std::string to_text(const Hypergraph& h) {
    std::string out = std::to_string(h.order());
    out += '\n';
    for (int i = 0; i < h.edge_count(); ++i) {
        bool first = true;
        for (int v : h.edge_vertices(i)) {
            if (!first) out += ' ';
            out += std::to_string(v + 1);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace chromapoly
