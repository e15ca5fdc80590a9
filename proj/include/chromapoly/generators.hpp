#pragma once

#include <random>

#include "chromapoly/hypergraph.hpp"

namespace chromapoly {

// K_n.
Hypergraph complete_graph(int n);

// K_n^r: all r-subsets of an n-set as edges. Requires r >= 2; for n < r the
// edge set is empty.
Hypergraph complete_hypergraph(int n, int r);

Hypergraph path_graph(int n);

// Each of the C(n,2) possible edges is present independently with the given
// probability.
Hypergraph random_graph(int n, double density, std::mt19937_64& rng);

// Up to max_edges distinct random edges of cardinality in [min_card, max_card]
// (clamped to n). May generate fewer edges when duplicates are drawn.
Hypergraph random_hypergraph(int n, int max_edges, int min_card, int max_card,
                             std::mt19937_64& rng);

}  // namespace chromapoly
