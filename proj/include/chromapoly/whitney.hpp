#pragma once

#include <cstdint>
#include <vector>

#include "chromapoly/hypergraph.hpp"
#include "chromapoly/polynomial.hpp"

namespace chromapoly {

/// A linear order on the edge set, stored as rank[edge index] in 0..m-1.
class EdgeOrdering {
public:
    explicit EdgeOrdering(std::vector<int> ranks);
    static EdgeOrdering identity(int m);
    static EdgeOrdering reversed(int m);
    static EdgeOrdering shuffled(int m, std::uint64_t seed);

    int size() const { return static_cast<int>(rank_.size()); }
    int rank(int edge) const { return rank_.at(static_cast<std::size_t>(edge)); }
    const std::vector<int>& ranks() const { return rank_; }

    // Edge index of the maximal element of a non-empty edge set.
    int max_edge(EdgeSet f) const;

    // Induced ordering on a subgraph: edge_map[new] = old, ranks compressed
    // but order preserved.
    EdgeOrdering restricted(const std::vector<int>& edge_map) const;

private:
    std::vector<int> rank_;
};

enum class BrokenSetOrigin { Star, DeltaCycle, Berge, Manual };

struct BrokenSet {
    EdgeSet edges = 0;
    BrokenSetOrigin origin = BrokenSetOrigin::Manual;
};

/// A family of broken-cyclic edge sets together with the ordering they were
/// certified under.
struct BrokenFamily {
    EdgeOrdering ordering;
    std::vector<BrokenSet> sets;
};

// Edge sets of all simple cycles of a graph.
std::vector<EdgeSet> simple_cycles(const Hypergraph& g);

// Each cycle minus its maximal edge; duplicates removed. Graphs only.
std::vector<EdgeSet> broken_cycles(const Hypergraph& g, const EdgeOrdering& ord);

/// Whether non-empty F is broken-cyclic: the subgraph spanned by F is
/// connected and some edge e0 of H satisfies e0 a subset of the vertices
/// covered by F with rank(e0) > rank(max F).
bool is_broken_cyclic(const Hypergraph& h, const EdgeOrdering& ord, EdgeSet f);

// All broken-cyclic subsets (the maximal admissible family).
BrokenFamily enumerate_broken_cyclic(const Hypergraph& h, const EdgeOrdering& ord);

// Minimal non-empty edge sets whose spanned subgraph keeps its component
// count under deletion of any single member edge.
std::vector<EdgeSet> delta_cycle_edge_sets(const Hypergraph& h);
BrokenFamily delta_cycle_broken_sets(const Hypergraph& h, const EdgeOrdering& ord);

// Edge sets realizable as a Berge cycle (alternating distinct vertices and
// edges x1 e1 x2 ... xm em x1 with x_i in e_{i-1} and e_i, m >= 2).
std::vector<EdgeSet> berge_cycle_edge_sets(const Hypergraph& h);
// Berge cycle sets whose maximal edge is covered by the union of the others,
// minus that maximal edge.
BrokenFamily berge_cycle_broken_sets(const Hypergraph& h, const EdgeOrdering& ord);

struct NbcCounts {
    std::vector<BigInt> h;  // h[i-1] = number of NBC spanning subgraphs with n-i edges
    IntPolynomial abar;     // abar_i = (-1)^(n-i) h_i
};

// Whitney counts for a graph under the given ordering.
NbcCounts nbc_counts(const Hypergraph& g, const EdgeOrdering& ord);

struct PrunedResult {
    IntPolynomial poly;
    std::uint64_t subsets_visited = 0;
};

/// Subset expansion restricted to sets containing no member of the family:
/// a_{i,D} = sum of (-1)^|F| over F with k(F) = i and A not a subset of F for
/// every A in D. Every member of D is re-checked against the broken-cyclic
/// condition and rejected with an exception if it fails.
PrunedResult pruned_expansion_stats(const Hypergraph& h, const BrokenFamily& d);
IntPolynomial pruned_expansion(const Hypergraph& h, const BrokenFamily& d);

struct ForestCounts {
    std::vector<BigInt> c;  // c[i], i = 0..n; c[0] = 0
    std::vector<BigInt> h;  // h[i-1] = c_{i-1} + c_i, i = 1..n
};

// NBC forest counts via products of spanning-tree counts h_1 over vertex
// partitions avoiding the maximal edge. Requires a graph with at least one
// edge.
ForestCounts forest_counts(const Hypergraph& g, const EdgeOrdering& ord);

// Antichain of minima: drops every set that contains another member.
std::vector<EdgeSet> minimal_sets(std::vector<EdgeSet> sets);

/// Visits every F avoiding all blockers (no blocker is a subset of F),
/// pruning whole superset subtrees as soon as a blocker is completed.
/// Returns the number of subsets visited.
template <class Visitor>
std::uint64_t for_each_unblocked_subset(int m, const std::vector<EdgeSet>& blockers,
                                        Visitor&& visit) {
    // An empty blocker is a subset of everything: nothing survives.
    for (EdgeSet a : blockers)
        if (a == 0) return 0;

    // bucket[i]: blockers whose highest edge index is i
    std::vector<std::vector<EdgeSet>> bucket(static_cast<std::size_t>(m));
    for (EdgeSet a : blockers)
        bucket[static_cast<std::size_t>(63 - std::countl_zero(a))].push_back(a);

    std::uint64_t visited = 0;
    auto rec = [&](auto&& self, int idx, EdgeSet f) -> void {
        if (idx == m) {
            ++visited;
            visit(static_cast<EdgeSet>(f));
            return;
        }
        self(self, idx + 1, f);  // exclude
        const EdgeSet with = f | (EdgeSet{1} << idx);
        for (EdgeSet a : bucket[static_cast<std::size_t>(idx)])
            if ((a & ~with) == 0) return;  // completing a blocker: cut the branch
        self(self, idx + 1, with);
    };
    rec(rec, 0, 0);
    return visited;
}

}  // namespace chromapoly
