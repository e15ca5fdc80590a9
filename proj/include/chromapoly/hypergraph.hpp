#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromapoly {

// Bitmask over vertex indices 0..n-1.
using VertexSet = std::uint64_t;
// Bitmask over edge indices 0..m-1 (the set F in a spanning subgraph).
using EdgeSet = std::uint64_t;
// Pairwise-disjoint non-empty blocks, ordered by smallest element.
using VertexPartition = std::vector<VertexSet>;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 64;

// Raised when an instance exceeds the 64-vertex/64-edge bitmask caps or a
// configured enumeration budget.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline int popcount(std::uint64_t s) { return std::popcount(s); }

inline VertexSet full_set(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline std::vector<int> set_bits(std::uint64_t s) {
    std::vector<int> out;
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b);
        s &= s - 1;
    }
    return out;
}

/// Finite hypergraph on vertices 0..n-1 with an ordered list of distinct
/// edges, each a vertex subset of cardinality >= 2. Immutable after
/// construction; all queries are safe to call concurrently.
class Hypergraph {
public:
    Hypergraph(int n, const std::vector<std::vector<int>>& edges);
    static Hypergraph from_edge_masks(int n, std::vector<VertexSet> edge_masks);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    VertexSet edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
    int edge_cardinality(int i) const { return popcount(edge(i)); }
    std::vector<int> edge_vertices(int i) const { return set_bits(edge(i)); }
    const std::vector<VertexSet>& edge_masks() const { return edges_; }

    VertexSet vertices() const { return full_set(n_); }
    EdgeSet all_edges() const { return full_set(edge_count()); }

    // Indices of edges entirely contained in W.
    EdgeSet edges_within(VertexSet W) const;
    bool is_graph() const;
    // Index of an edge equal to `mask`, or -1.
    int find_edge(VertexSet mask) const;

    bool operator==(const Hypergraph&) const = default;

private:
    Hypergraph(int n, std::vector<VertexSet> edges, bool /*checked*/)
        : n_(n), edges_(std::move(edges)) {}

    int n_ = 1;
    std::vector<VertexSet> edges_;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), count_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }
    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[b] = a;
            --count_;
        }
    }
    int count() const { return count_; }

private:
    std::vector<int> parent_;
    int count_;
};

// k(F): components of the spanning subgraph (V, F); isolated vertices count.
int components(const Hypergraph& h, EdgeSet f);

// Components of the subgraph spanned by F, i.e. on vertex set U(F) only.
// F must be non-empty.
int spanned_components(const Hypergraph& h, EdgeSet f);

inline bool spanned_connected(const Hypergraph& h, EdgeSet f) {
    return f != 0 && spanned_components(h, f) == 1;
}

// Union of the vertices of the edges in F.
VertexSet covered_vertices(const Hypergraph& h, EdgeSet f);

struct InducedSubgraph {
    Hypergraph graph;
    std::vector<int> vertex_map;  // new index -> original index
    std::vector<int> edge_map;    // new index -> original index
};

// H[W]: vertices W relabelled 0..|W|-1, keeping exactly the edges inside W.
InducedSubgraph induced_subgraph(const Hypergraph& h, VertexSet w);

}  // namespace chromapoly
