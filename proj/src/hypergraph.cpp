#include "chromapoly/hypergraph.hpp"

#include <algorithm>

namespace chromapoly {

namespace {

void validate(int n, const std::vector<VertexSet>& edges) {
    if (n < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
    if (n > kMaxVertices)
        throw SizeLimitError("vertex count " + std::to_string(n) + " exceeds the " +
                             std::to_string(kMaxVertices) + "-vertex limit");
    if (edges.size() > static_cast<std::size_t>(kMaxEdges))
        throw SizeLimitError("edge count " + std::to_string(edges.size()) +
                             " exceeds the " + std::to_string(kMaxEdges) + "-edge limit");
    const VertexSet all = full_set(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if ((edges[i] & ~all) != 0)
            throw std::invalid_argument("edge " + std::to_string(i) +
                                        " uses a vertex outside 0.." + std::to_string(n - 1));
        if (popcount(edges[i]) < 2)
            throw std::invalid_argument("edge " + std::to_string(i) +
                                        " has cardinality < 2 (loops are not allowed)");
        for (std::size_t j = 0; j < i; ++j)
            if (edges[i] == edges[j])
                throw std::invalid_argument("duplicate edge at position " + std::to_string(i));
    }
}

}  // namespace

Hypergraph::Hypergraph(int n, const std::vector<std::vector<int>>& edges) : n_(n) {
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        VertexSet mask = 0;
        for (int v : edges[i]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("edge " + std::to_string(i) +
                                            " uses a vertex outside 0.." + std::to_string(n - 1));
            VertexSet bit = VertexSet{1} << v;
            if (mask & bit)
                throw std::invalid_argument("edge " + std::to_string(i) +
                                            " repeats vertex " + std::to_string(v));
            mask |= bit;
        }
        edges_.push_back(mask);
    }
    validate(n_, edges_);
}

Hypergraph Hypergraph::from_edge_masks(int n, std::vector<VertexSet> edge_masks) {
    validate(n, edge_masks);
    return Hypergraph(n, std::move(edge_masks), true);
}

EdgeSet Hypergraph::edges_within(VertexSet w) const {
    EdgeSet out = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if ((edges_[i] & ~w) == 0) out |= EdgeSet{1} << i;
    return out;
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](VertexSet e) { return popcount(e) == 2; });
}

int Hypergraph::find_edge(VertexSet mask) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i] == mask) return static_cast<int>(i);
    return -1;
}

int components(const Hypergraph& h, EdgeSet f) {
    UnionFind uf(h.order());
    while (f) {
        int e = std::countr_zero(f);
        f &= f - 1;
        VertexSet mask = h.edge(e);
        int first = std::countr_zero(mask);
        VertexSet rest = mask & (mask - 1);
        while (rest) {
            uf.merge(first, std::countr_zero(rest));
            rest &= rest - 1;
        }
    }
    return uf.count();
}

int spanned_components(const Hypergraph& h, EdgeSet f) {
    if (f == 0) throw std::invalid_argument("spanned subgraph requires a non-empty edge set");
    int isolated = h.order() - popcount(covered_vertices(h, f));
    return components(h, f) - isolated;
}

VertexSet covered_vertices(const Hypergraph& h, EdgeSet f) {
    VertexSet u = 0;
    while (f) {
        u |= h.edge(std::countr_zero(f));
        f &= f - 1;
    }
    return u;
}

InducedSubgraph induced_subgraph(const Hypergraph& h, VertexSet w) {
    if (w == 0) throw std::invalid_argument("induced subgraph requires a non-empty vertex set");
    std::vector<int> vmap = set_bits(w);
    std::vector<int> relabel(static_cast<std::size_t>(h.order()), -1);
    for (std::size_t i = 0; i < vmap.size(); ++i) relabel[vmap[i]] = static_cast<int>(i);

    std::vector<VertexSet> new_edges;
    std::vector<int> emap;
    for (int i = 0; i < h.edge_count(); ++i) {
        VertexSet e = h.edge(i);
        if ((e & ~w) != 0) continue;
        VertexSet rel = 0;
        VertexSet bits = e;
        while (bits) {
            rel |= VertexSet{1} << relabel[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        new_edges.push_back(rel);
        emap.push_back(i);
    }
    return InducedSubgraph{
        Hypergraph::from_edge_masks(static_cast<int>(vmap.size()), std::move(new_edges)),
        std::move(vmap), std::move(emap)};
}

}  // namespace chromapoly
