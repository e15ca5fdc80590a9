#pragma once

#include <vector>

#include "chromapoly/hypergraph.hpp"

namespace chromapoly {

/// Enumerates every partition of the set bits of `ground` into exactly j
/// non-empty blocks, each partition exactly once. Blocks appear in canonical
/// order (sorted by smallest element), which is what assigning vertices in
/// increasing order to the first admissible block yields. The visitor
/// receives a VertexPartition that is reused between calls.
template <class Visitor>
void for_each_partition(VertexSet ground, int j, Visitor&& visit) {
    const std::vector<int> verts = set_bits(ground);
    const int n = static_cast<int>(verts.size());
    if (j < 1 || j > n) return;

    VertexPartition blocks;
    blocks.reserve(static_cast<std::size_t>(j));
    auto rec = [&](auto&& self, int p) -> void {
        const int open = static_cast<int>(blocks.size());
        if (open + (n - p) < j) return;  // cannot reach j blocks any more
        if (p == n) {
            visit(static_cast<const VertexPartition&>(blocks));
            return;
        }
        const VertexSet bit = VertexSet{1} << verts[p];
        for (int b = 0; b < open; ++b) {
            blocks[b] |= bit;
            self(self, p + 1);
            blocks[b] &= ~bit;
        }
        if (open < j) {
            blocks.push_back(bit);
            self(self, p + 1);
            blocks.pop_back();
        }
    };
    rec(rec, 0);
}

/// Partitions of V into j non-empty blocks such that exactly t blocks have a
/// non-empty intersection with edge `edge_index`. Unsatisfiable constraints
/// yield an empty stream.
template <class Visitor>
void partitions_meeting_edge(const Hypergraph& h, int edge_index, int j, int t,
                             Visitor&& visit) {
    const VertexSet e = h.edge(edge_index);
    for_each_partition(h.vertices(), j, [&](const VertexPartition& blocks) {
        int meets = 0;
        for (VertexSet b : blocks) meets += (b & e) != 0;
        if (meets == t) visit(blocks);
    });
}

inline std::vector<VertexPartition> partitions_meeting_edge_list(const Hypergraph& h,
                                                                 int edge_index, int j,
                                                                 int t) {
    std::vector<VertexPartition> out;
    partitions_meeting_edge(h, edge_index, j, t,
                            [&](const VertexPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace chromapoly
