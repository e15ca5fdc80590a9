#include <doctest.h>

#include <random>
#include <set>

#include "chromapoly/generators.hpp"
#include "chromapoly/hypergraph.hpp"
#include "chromapoly/partitions.hpp"
#include "chromapoly/polynomial.hpp"

using namespace chromapoly;

namespace {

Hypergraph triangle() { return complete_graph(3); }

// Stirling numbers of the second kind by the textbook recurrence; the oracle
// for partition counts.
std::uint64_t stirling2(int n, int j) {
    if (j < 0 || j > n) return 0;
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    s[0][0] = 1;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= a; ++b)
            s[a][b] = s[a - 1][b - 1] + static_cast<std::uint64_t>(b) * s[a - 1][b];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

}  // namespace

TEST_CASE("hypergraph construction validates its invariants") {
    CHECK_NOTHROW(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_THROWS_AS(Hypergraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1}}), std::invalid_argument);           // loop
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate edge
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), std::invalid_argument);         // out of range
    CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), std::invalid_argument);         // repeated vertex
    CHECK_THROWS_AS(Hypergraph(65, {}), SizeLimitError);

    CHECK(triangle().is_graph());
    CHECK_FALSE(complete_hypergraph(3, 3).is_graph());
}

TEST_CASE("components counts isolated vertices") {
    const Hypergraph t = triangle();
    CHECK(components(t, 0) == 3);
    CHECK(components(t, 0b011) == 1);  // path 0-1-2
    const Hypergraph k33 = complete_hypergraph(3, 3);
    CHECK(components(k33, 0b1) == 1);

    // empty edge set gives n components, for several shapes
    for (const Hypergraph& h : {complete_graph(5), complete_hypergraph(5, 3), path_graph(4)})
        CHECK(components(h, 0) == h.order());
}

TEST_CASE("adding an edge drops the component count by at most |e|-1") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Hypergraph h = random_hypergraph(2 + static_cast<int>(rng() % 5), 6, 2, 4, rng);
        const std::uint64_t subsets = std::uint64_t{1} << h.edge_count();
        for (EdgeSet f = 0; f < subsets; ++f) {
            const int base = components(h, f);
            for (int e = 0; e < h.edge_count(); ++e) {
                if (f & (EdgeSet{1} << e)) continue;
                const int grown = components(h, f | (EdgeSet{1} << e));
                CHECK(grown <= base);
                CHECK(grown >= base - (h.edge_cardinality(e) - 1));
            }
        }
    }
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
    const InducedSubgraph sub = induced_subgraph(triangle(), 0b011);
    CHECK(sub.graph.order() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.vertex_map == std::vector<int>{0, 1});

    const InducedSubgraph k3 = induced_subgraph(complete_hypergraph(4, 3), 0b0111);
    CHECK(k3.graph == complete_hypergraph(3, 3));

    const InducedSubgraph single = induced_subgraph(triangle(), 0b001);
    CHECK(single.graph.order() == 1);
    CHECK(single.graph.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(triangle(), 0), std::invalid_argument);

    // identity on the full vertex set
    const Hypergraph h = complete_hypergraph(4, 3);
    CHECK(induced_subgraph(h, h.vertices()).graph == h);
}

TEST_CASE("partition enumeration matches the examples") {
    const Hypergraph t = triangle();
    // e = {0,1}, j = 2, t = 2: exactly {{0},{1,2}} and {{0,2},{1}}
    auto parts = partitions_meeting_edge_list(t, 0, 2, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexPartition{0b101, 0b010});
    CHECK(parts[1] == VertexPartition{0b001, 0b110});

    // the lone 3-block partition of a 3-set
    auto singletons = partitions_meeting_edge_list(complete_hypergraph(3, 3), 0, 3, 3);
    REQUIRE(singletons.size() == 1);
    CHECK(singletons[0] == VertexPartition{0b001, 0b010, 0b100});

    // with 3 singleton blocks the edge endpoints always split: t = 1 is empty
    CHECK(partitions_meeting_edge_list(t, 0, 3, 1).empty());
}

TEST_CASE("partition counts sum to Stirling numbers over the meet counts") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 8; ++n) {
        const Hypergraph h = random_hypergraph(n, 4, 2, std::min(4, n), rng);
        if (h.edge_count() == 0) continue;
        const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(h.edge_count()));
        const int card = h.edge_cardinality(e);
        for (int j = 1; j <= n; ++j) {
            std::uint64_t total = 0;
            for (int t = 1; t <= std::min(j, card); ++t) {
                std::uint64_t seen = 0;
                partitions_meeting_edge(h, e, j, t, [&](const VertexPartition& blocks) {
                    REQUIRE(static_cast<int>(blocks.size()) == j);
                    VertexSet uni = 0;
                    for (VertexSet b : blocks) {
                        REQUIRE(b != 0);
                        REQUIRE((uni & b) == 0);
                        uni |= b;
                    }
                    REQUIRE(uni == h.vertices());
                    ++seen;
                });
                total += seen;
            }
            CHECK(total == stirling2(n, j));
        }
    }
}

TEST_CASE("polynomial evaluation") {
    IntPolynomial tri(3);
    tri.a(1) = 2;
    tri.a(2) = -3;
    tri.a(3) = 1;
    CHECK(tri.eval(3) == 6);
    CHECK(tri.eval(0) == 0);

    IntPolynomial edgeless(2);
    edgeless.a(2) = 1;
    CHECK(edgeless.eval(5) == 25);

    CHECK(poly_eval(tri, 4) == 24);
}
