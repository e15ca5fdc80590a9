#include "chromapoly/whitney.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "chromapoly/partitions.hpp"

namespace chromapoly {

namespace {

std::uint64_t enumerable_subsets(int m) {
    if (m >= 63)
        throw SizeLimitError("2^" + std::to_string(m) + " edge subsets is not enumerable");
    return std::uint64_t{1} << m;
}

}  // namespace

EdgeOrdering::EdgeOrdering(std::vector<int> ranks) : rank_(std::move(ranks)) {
    std::vector<bool> seen(rank_.size(), false);
    for (int r : rank_) {
        if (r < 0 || r >= static_cast<int>(rank_.size()) || seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("edge ordering must be a permutation of 0..m-1");
        seen[static_cast<std::size_t>(r)] = true;
    }
}

EdgeOrdering EdgeOrdering::identity(int m) {
    std::vector<int> r(static_cast<std::size_t>(m));
    std::iota(r.begin(), r.end(), 0);
    return EdgeOrdering(std::move(r));
}

EdgeOrdering EdgeOrdering::reversed(int m) {
    std::vector<int> r(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) r[static_cast<std::size_t>(i)] = m - 1 - i;
    return EdgeOrdering(std::move(r));
}

EdgeOrdering EdgeOrdering::shuffled(int m, std::uint64_t seed) {
    std::vector<int> r(static_cast<std::size_t>(m));
    std::iota(r.begin(), r.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
    }
    return EdgeOrdering(std::move(r));
}

int EdgeOrdering::max_edge(EdgeSet f) const {
    if (f == 0) throw std::invalid_argument("max_edge of an empty edge set");
    int best = -1, best_rank = -1;
    while (f) {
        int e = std::countr_zero(f);
        f &= f - 1;
        if (rank(e) > best_rank) {
            best_rank = rank(e);
            best = e;
        }
    }
    return best;
}

EdgeOrdering EdgeOrdering::restricted(const std::vector<int>& edge_map) const {
    // sort surviving edges by their old rank and hand out dense new ranks
    std::vector<int> order(edge_map.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rank(edge_map[static_cast<std::size_t>(a)]) <
                                         rank(edge_map[static_cast<std::size_t>(b)]); });
    std::vector<int> r(edge_map.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        r[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    return EdgeOrdering(std::move(r));
}

std::vector<EdgeSet> simple_cycles(const Hypergraph& g) {
    if (!g.is_graph()) throw std::invalid_argument("cycle enumeration requires a graph");
    const int n = g.order();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < g.edge_count(); ++i) {
        auto vs = g.edge_vertices(i);
        adj[static_cast<std::size_t>(vs[0])].emplace_back(vs[1], i);
        adj[static_cast<std::size_t>(vs[1])].emplace_back(vs[0], i);
    }

    std::vector<EdgeSet> out;
    std::vector<int> path;
    // anchor = smallest vertex of the cycle; each cycle is closed once with
    // path[1] < v to kill the reversed traversal
    for (int s = 0; s < n; ++s) {
        VertexSet on_path = VertexSet{1} << s;
        path.assign(1, s);
        auto dfs = [&](auto&& self, int v, EdgeSet edges_used) -> void {
            for (auto [u, ei] : adj[static_cast<std::size_t>(v)]) {
                if (u == s) {
                    if (path.size() >= 3 && path[1] < v)
                        out.push_back(edges_used | (EdgeSet{1} << ei));
                } else if (u > s && !(on_path & (VertexSet{1} << u))) {
                    on_path |= VertexSet{1} << u;
                    path.push_back(u);
                    self(self, u, edges_used | (EdgeSet{1} << ei));
                    path.pop_back();
                    on_path &= ~(VertexSet{1} << u);
                }
            }
        };
        dfs(dfs, s, 0);
    }
    return out;
}

std::vector<EdgeSet> broken_cycles(const Hypergraph& g, const EdgeOrdering& ord) {
    std::vector<EdgeSet> out;
    for (EdgeSet cycle : simple_cycles(g))
        out.push_back(cycle & ~(EdgeSet{1} << ord.max_edge(cycle)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_broken_cyclic(const Hypergraph& h, const EdgeOrdering& ord, EdgeSet f) {
    if (f == 0) throw std::invalid_argument("the broken-cyclic condition requires non-empty F");
    if (!spanned_connected(h, f)) return false;
    const VertexSet covered = covered_vertices(h, f);
    const int max_rank = ord.rank(ord.max_edge(f));
    for (int e = 0; e < h.edge_count(); ++e)
        if (ord.rank(e) > max_rank && (h.edge(e) & ~covered) == 0) return true;
    return false;
}

BrokenFamily enumerate_broken_cyclic(const Hypergraph& h, const EdgeOrdering& ord) {
    BrokenFamily family{ord, {}};
    const std::uint64_t total = enumerable_subsets(h.edge_count());
    for (EdgeSet f = 1; f < total; ++f)
        if (is_broken_cyclic(h, ord, f))
            family.sets.push_back(BrokenSet{f, BrokenSetOrigin::Star});
    return family;
}

namespace {

// Is some edge of f a bridge of the subgraph spanned by f? (Vertex set fixed
// to the cover of f, which drops out of the component-count difference.)
bool has_bridge(const Hypergraph& h, EdgeSet f) {
    const int base = components(h, f);
    EdgeSet rest = f;
    while (rest) {
        const EdgeSet bit = rest & (~rest + 1);
        rest &= rest - 1;
        if (components(h, f & ~bit) != base) return true;
    }
    return false;
}

// Repeatedly strip bridges; the fixed point is empty iff f contains no
// bridge-free non-empty subset.
EdgeSet bridgeless_core(const Hypergraph& h, EdgeSet f) {
    bool changed = true;
    while (changed && f) {
        changed = false;
        const int base = components(h, f);
        EdgeSet rest = f;
        while (rest) {
            const EdgeSet bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (components(h, f & ~bit) != base) {
                f &= ~bit;
                changed = true;
                break;
            }
        }
    }
    return f;
}

std::vector<EdgeSet> dedup(std::vector<EdgeSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

}  // namespace

std::vector<EdgeSet> delta_cycle_edge_sets(const Hypergraph& h) {
    const std::uint64_t total = enumerable_subsets(h.edge_count());
    std::vector<EdgeSet> out;
    for (EdgeSet f = 1; f < total; ++f) {
        if (has_bridge(h, f)) continue;
        bool minimal = true;
        EdgeSet rest = f;
        while (rest && minimal) {
            const EdgeSet bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (bridgeless_core(h, f & ~bit) != 0) minimal = false;
        }
        if (minimal) out.push_back(f);
    }
    return out;
}

BrokenFamily delta_cycle_broken_sets(const Hypergraph& h, const EdgeOrdering& ord) {
    std::vector<EdgeSet> emitted;
    for (EdgeSet f : delta_cycle_edge_sets(h)) {
        const EdgeSet broken = f & ~(EdgeSet{1} << ord.max_edge(f));
        if (!is_broken_cyclic(h, ord, broken))
            throw std::logic_error("delta-cycle produced a set failing the broken-cyclic condition");
        emitted.push_back(broken);
    }
    BrokenFamily family{ord, {}};
    for (EdgeSet f : dedup(std::move(emitted)))
        family.sets.push_back(BrokenSet{f, BrokenSetOrigin::DeltaCycle});
    return family;
}

namespace {

bool is_berge_cycle_set(const Hypergraph& h, EdgeSet f) {
    const std::vector<int> edges = set_bits(f);
    const int m = static_cast<int>(edges.size());
    if (m < 2) return false;
    const VertexSet e1 = h.edge(edges[0]);
    // e1 is fixed as the first edge of the cyclic sequence; x_1 is picked last
    const std::uint64_t all_placed = (std::uint64_t{1} << m) - 2;
    auto rec = [&](auto&& self, std::uint64_t used, VertexSet used_verts, VertexSet prev) -> bool {
        if (used == all_placed) {  // all of edges[1..m-1] placed
            return (prev & e1 & ~used_verts) != 0;
        }
        for (int p = 1; p < m; ++p) {
            const std::uint64_t pbit = std::uint64_t{1} << p;
            if (used & pbit) continue;
            const VertexSet e = h.edge(edges[static_cast<std::size_t>(p)]);
            VertexSet shared = prev & e & ~used_verts;
            while (shared) {
                const VertexSet x = shared & (~shared + 1);
                shared &= shared - 1;
                if (self(self, used | pbit, used_verts | x, e)) return true;
            }
        }
        return false;
    };
    return rec(rec, 0, 0, e1);
}

}  // namespace

std::vector<EdgeSet> berge_cycle_edge_sets(const Hypergraph& h) {
    const int m = h.edge_count();
    const int n = h.order();
    const std::uint64_t total = enumerable_subsets(m);
    std::vector<EdgeSet> out;
    for (EdgeSet f = 1; f < total; ++f) {
        const int size = popcount(f);
        if (size < 2 || size > n) continue;  // needs as many distinct vertices as edges
        if (!spanned_connected(h, f)) continue;
        if (is_berge_cycle_set(h, f)) out.push_back(f);
    }
    return out;
}

BrokenFamily berge_cycle_broken_sets(const Hypergraph& h, const EdgeOrdering& ord) {
    std::vector<EdgeSet> emitted;
    for (EdgeSet f : berge_cycle_edge_sets(h)) {
        const int maxe = ord.max_edge(f);
        const EdgeSet rest = f & ~(EdgeSet{1} << maxe);
        if ((h.edge(maxe) & ~covered_vertices(h, rest)) != 0) continue;  // inclusion filter
        if (!is_broken_cyclic(h, ord, rest))
            throw std::logic_error("Berge cycle produced a set failing the broken-cyclic condition");
        emitted.push_back(rest);
    }
    BrokenFamily family{ord, {}};
    for (EdgeSet f : dedup(std::move(emitted)))
        family.sets.push_back(BrokenSet{f, BrokenSetOrigin::Berge});
    return family;
}

std::vector<EdgeSet> minimal_sets(std::vector<EdgeSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](EdgeSet a, EdgeSet b) { return popcount(a) < popcount(b); });
    std::vector<EdgeSet> out;
    for (EdgeSet s : sets) {
        bool dominated = false;
        for (EdgeSet a : out)
            if ((a & ~s) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    return out;
}

NbcCounts nbc_counts(const Hypergraph& g, const EdgeOrdering& ord) {
    if (!g.is_graph()) throw std::invalid_argument("Whitney counts require a graph");
    const int n = g.order();
    const std::vector<EdgeSet> blockers = minimal_sets(broken_cycles(g, ord));

    std::vector<BigInt> h(static_cast<std::size_t>(n));
    for_each_unblocked_subset(g.edge_count(), blockers, [&](EdgeSet f) {
        const int size = popcount(f);
        // NBC subsets are acyclic, hence have fewer than n edges
        if (size >= n) throw std::logic_error("NBC subset with >= n edges");
        h[static_cast<std::size_t>(n - size - 1)] += 1;
    });

    IntPolynomial abar(n);
    for (int i = 1; i <= n; ++i) {
        abar.a(i) = h[static_cast<std::size_t>(i - 1)];
        if ((n - i) % 2) abar.a(i) = -abar.a(i);
    }
    return NbcCounts{std::move(h), std::move(abar)};
}

PrunedResult pruned_expansion_stats(const Hypergraph& h, const BrokenFamily& d) {
    const int n = h.order();
    std::vector<EdgeSet> masks;
    masks.reserve(d.sets.size());
    for (const BrokenSet& s : d.sets) {
        if (!is_broken_cyclic(h, d.ordering, s.edges))
            throw std::invalid_argument("family member is not broken-cyclic under its ordering");
        masks.push_back(s.edges);
    }

    std::vector<std::int64_t> acc(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t visited =
        for_each_unblocked_subset(h.edge_count(), minimal_sets(std::move(masks)), [&](EdgeSet f) {
            acc[static_cast<std::size_t>(components(h, f))] += (popcount(f) & 1) ? -1 : 1;
        });

    IntPolynomial poly(n);
    for (int i = 1; i <= n; ++i) poly.a(i) = static_cast<long>(acc[static_cast<std::size_t>(i)]);
    return PrunedResult{std::move(poly), visited};
}

IntPolynomial pruned_expansion(const Hypergraph& h, const BrokenFamily& d) {
    return pruned_expansion_stats(h, d).poly;
}

ForestCounts forest_counts(const Hypergraph& g, const EdgeOrdering& ord) {
    if (!g.is_graph()) throw std::invalid_argument("forest counts require a graph");
    if (g.edge_count() == 0) throw std::invalid_argument("forest counts require a non-empty edge set");
    const int n = g.order();
    const VertexSet emax = g.edge(ord.max_edge(g.all_edges()));

    // h_1 of an induced subgraph, memoized on the vertex-subset key
    std::unordered_map<VertexSet, BigInt> h1_memo;
    auto h1 = [&](VertexSet w) -> const BigInt& {
        auto it = h1_memo.find(w);
        if (it == h1_memo.end()) {
            InducedSubgraph sub = induced_subgraph(g, w);
            it = h1_memo.emplace(w, nbc_counts(sub.graph, ord.restricted(sub.edge_map)).h[0]).first;
        }
        return it->second;
    };

    ForestCounts fc;
    fc.c.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int i = 1; i <= n - 1; ++i) {
        BigInt total = 0;
        for_each_partition(g.vertices(), i + 1, [&](const VertexPartition& blocks) {
            BigInt prod = 1;
            for (VertexSet b : blocks) {
                if ((emax & ~b) == 0) return;  // e_max inside a block: excluded
                prod *= h1(b);
                if (prod == 0) return;
            }
            total += prod;
        });
        fc.c[static_cast<std::size_t>(i)] = total;
    }

    fc.h.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        fc.h[static_cast<std::size_t>(i - 1)] =
            fc.c[static_cast<std::size_t>(i - 1)] + fc.c[static_cast<std::size_t>(i)];
    return fc;
}

}  // namespace chromapoly
