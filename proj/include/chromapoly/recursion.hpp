#pragma once

#include <unordered_map>
#include <vector>

#include "chromapoly/hypergraph.hpp"
#include "chromapoly/polynomial.hpp"

namespace chromapoly {

/// Memoized linear coefficients a_1(H[W]) over vertex subsets of a fixed
/// ambient hypergraph. Induced subgraphs of H are in bijection with vertex
/// subsets, so the bitmask is the cache key; no isomorphism detection.
/// Not thread-safe: confine one instance to one top-level computation.
class A1Cache {
public:
    explicit A1Cache(const Hypergraph& h) : h_(&h) {}

    // a_1 of the subgraph induced by non-empty W, by the partition recursion
    // over a pivot edge (base cases: 1 on a single vertex, 0 when edgeless or
    // disconnected).
    const BigInt& a1(VertexSet w);

    const Hypergraph& ambient() const { return *h_; }
    std::size_t size() const { return memo_.size(); }

private:
    const Hypergraph* h_;
    std::unordered_map<VertexSet, BigInt> memo_;
};

// a_1(H) through the recursion above.
BigInt a1_recursive(const Hypergraph& h);

// Edge of maximal cardinality, lowest index on ties. Requires edges.
int default_pivot_edge(const Hypergraph& h);

/// Values b_e^{i,j} = sum of (-1)^|F| over F containing e with k(F) = i and
/// k(F \ {e}) = j, for a fixed edge e. Entries with i > j are identically
/// zero; so are entries with j - i + 1 > |e|.
struct BTable {
    int pivot_edge = 0;
    int order = 0;
    std::vector<BigInt> values;  // row-major (i-1)*order + (j-1)

    const BigInt& at(int i, int j) const {
        return values.at(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(order) +
                         static_cast<std::size_t>(j - 1));
    }
    BigInt& at(int i, int j) {
        return values.at(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(order) +
                         static_cast<std::size_t>(j - 1));
    }
};

// Exhaustive enumeration of every F containing e (all i <= j at once).
BTable btable_direct(const Hypergraph& h, int edge_index);

// Partition products over the a_1 cache (entries with i < j).
BTable btable_partition(const Hypergraph& h, int edge_index);

// Single values; b_partition requires i < j.
BigInt b_direct(const Hypergraph& h, int edge_index, int i, int j);
BigInt b_partition(const Hypergraph& h, int edge_index, int i, int j);

// All coefficients from a BTable of a single pivot edge:
// a_i = sum_{j>i} b^{i,j} - sum_{j<i} b^{j,i}. For an edgeless hypergraph the
// polynomial is lambda^n.
IntPolynomial coefficients_recursive(const Hypergraph& h);
IntPolynomial coefficients_recursive(const Hypergraph& h, int pivot_edge);

struct GraphBForms {
    std::vector<BigInt> via_partitions;     // [i-1] = b_e^i from the partition formula
    std::vector<BigInt> via_partial_sums;   // [i-1] = a_1 + ... + a_i
};

// Both graph-case evaluations of b_e^i, i = 1..n; they are checked to agree.
GraphBForms b_graph_forms(const Hypergraph& g, int edge_index);

struct SignBoundRow {
    int i = 0;
    BigInt a_signed, a_signed_complete;  // (-1)^(n-i) a_i for G and for K_n
    BigInt b_signed, b_signed_complete;  // same for the partial sums b^i
    bool a_inequalities = false;
    bool a_left_sharpness = false;
    bool a_right_sharpness = false;
    bool b_inequalities = true;  // vacuously true when E is empty
    bool b_left_sharpness = true;
    bool b_right_sharpness = true;
};

struct SignBoundReport {
    int n = 0;
    int component_count = 0;
    bool complete = false;
    bool has_edges = false;
    std::vector<SignBoundRow> rows;
    bool all_ok = false;
};

/// Audits the alternating-sign and complete-graph bounds for a graph:
///   0 <= (-1)^(n-i) a_i(G) <= (-1)^(n-i) a_i(K_n)
/// with equality on the left exactly for i < k(G) and a strict right
/// inequality for 1 <= i <= n-1 whenever G != K_n, and the partial-sum chain
///   0 <= (-1)^(n-i) b^i(G) <= (-1)^(n-i) b^i(K_n)
/// whose sharpness degenerates at the top: b^n = 0 and b^(n-1) = -a_n force
/// equalities at i = n and at i = n-1 (left equality additionally holds there
/// on the right chain for every G with an edge).
SignBoundReport sign_bound_audit(const Hypergraph& g);

}  // namespace chromapoly
