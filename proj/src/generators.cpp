#include "chromapoly/generators.hpp"

#include <algorithm>

namespace chromapoly {

namespace {

// Deterministic across platforms, unlike std::uniform_int_distribution.
int uniform_below(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

bool bernoulli(std::mt19937_64& rng, double p) {
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

}  // namespace

Hypergraph complete_graph(int n) {
    std::vector<VertexSet> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back((VertexSet{1} << i) | (VertexSet{1} << j));
    return Hypergraph::from_edge_masks(n, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r) {
    if (r < 2) throw std::invalid_argument("complete hypergraph requires r >= 2");
    std::vector<VertexSet> edges;
    if (n >= r) {
        // iterate r-subsets in colex order via the bit trick
        VertexSet mask = full_set(r);
        VertexSet limit = VertexSet{1} << n;
        while (mask < limit) {
            edges.push_back(mask);
            VertexSet c = mask & -mask;
            VertexSet s = mask + c;
            mask = s | (((mask ^ s) >> 2) / c);
        }
    }
    return Hypergraph::from_edge_masks(n, std::move(edges));
}

Hypergraph path_graph(int n) {
    std::vector<VertexSet> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back((VertexSet{1} << i) | (VertexSet{1} << (i + 1)));
    return Hypergraph::from_edge_masks(n, std::move(edges));
}

Hypergraph random_graph(int n, double density, std::mt19937_64& rng) {
    std::vector<VertexSet> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bernoulli(rng, density))
                edges.push_back((VertexSet{1} << i) | (VertexSet{1} << j));
    return Hypergraph::from_edge_masks(n, std::move(edges));
}

Hypergraph random_hypergraph(int n, int max_edges, int min_card, int max_card,
                             std::mt19937_64& rng) {
    min_card = std::max(min_card, 2);
    max_card = std::min(max_card, n);
    if (min_card > max_card)
        throw std::invalid_argument("cardinality range is empty for this vertex count");
    std::vector<VertexSet> edges;
    for (int t = 0; t < max_edges; ++t) {
        int card = min_card + uniform_below(rng, max_card - min_card + 1);
        VertexSet e = 0;
        while (popcount(e) < card) e |= VertexSet{1} << uniform_below(rng, n);
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return Hypergraph::from_edge_masks(n, std::move(edges));
}

}  // namespace chromapoly
