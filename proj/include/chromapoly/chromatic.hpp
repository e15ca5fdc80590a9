#pragma once

#include <cstdint>

#include "chromapoly/hypergraph.hpp"
#include "chromapoly/polynomial.hpp"

namespace chromapoly {

inline constexpr std::uint64_t kDefaultAssignmentBudget = 100'000'000;

/// Number of proper lambda-colourings of H, by direct enumeration of all
/// lambda^n colour assignments. A colouring is proper when every edge carries
/// at least two distinct colours. Throws SizeLimitError when lambda^n exceeds
/// the budget.
BigInt chromatic_bruteforce(const Hypergraph& h, unsigned long lambda,
                            std::uint64_t max_assignments = kDefaultAssignmentBudget);

struct ExpansionResult {
    IntPolynomial poly;
    std::uint64_t subsets_visited = 0;
};

/// Inclusion-exclusion over spanning edge subsets:
/// a_i = sum of (-1)^|F| over F with k(F) = i.
IntPolynomial chromatic_subset_expansion(const Hypergraph& h);
ExpansionResult chromatic_subset_expansion_stats(const Hypergraph& h);

/// Deletion-contraction recursion chi(G) = chi(G-e) - chi(G/e), merging
/// parallel edges on contraction. Graphs only.
IntPolynomial chromatic_deletion_contraction(const Hypergraph& g);

/// Unique polynomial of degree <= n through (lambda, bruteforce count) for
/// lambda = 0..n, recovered with exact forward differences.
IntPolynomial interpolate_from_counts(const Hypergraph& h,
                                      std::uint64_t max_assignments = kDefaultAssignmentBudget);

}  // namespace chromapoly
