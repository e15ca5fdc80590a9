#include "chromapoly/recursion.hpp"

#include "chromapoly/chromatic.hpp"
#include "chromapoly/generators.hpp"
#include "chromapoly/partitions.hpp"

namespace chromapoly {

namespace {

int pivot_within(const Hypergraph& h, EdgeSet candidates) {
    int best = -1, best_card = 1;
    while (candidates) {
        const int e = std::countr_zero(candidates);
        candidates &= candidates - 1;
        const int card = h.edge_cardinality(e);
        if (card > best_card) {
            best_card = card;
            best = e;
        }
    }
    return best;
}

}  // namespace

int default_pivot_edge(const Hypergraph& h) {
    if (h.edge_count() == 0) throw std::invalid_argument("pivot edge of an edgeless hypergraph");
    return pivot_within(h, h.all_edges());
}

const BigInt& A1Cache::a1(VertexSet w) {
    if (w == 0) throw std::invalid_argument("a_1 of an empty vertex set");
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    BigInt value = 0;
    if (popcount(w) == 1) {
        value = 1;
    } else {
        const EdgeSet inside = h_->edges_within(w);
        if (inside != 0) {
            const int pivot = pivot_within(*h_, inside);
            const VertexSet e = h_->edge(pivot);
            // every block must meet the pivot edge, so at most |e| blocks
            BigInt sum = 0;
            for (int j = 2; j <= popcount(e); ++j) {
                for_each_partition(w, j, [&](const VertexPartition& blocks) {
                    for (VertexSet b : blocks)
                        if ((b & e) == 0) return;
                    BigInt prod = 1;
                    for (VertexSet b : blocks) {
                        prod *= a1(b);
                        if (prod == 0) return;
                    }
                    sum += prod;
                });
            }
            value = -sum;
        }
        // edgeless with |W| > 1: a_1 = 0
    }
    return memo_.emplace(w, std::move(value)).first->second;
}

BigInt a1_recursive(const Hypergraph& h) {
    A1Cache cache(h);
    return cache.a1(h.vertices());
}

BTable btable_direct(const Hypergraph& h, int edge_index) {
    const int n = h.order();
    const int m = h.edge_count();
    if (edge_index < 0 || edge_index >= m) throw std::invalid_argument("no such edge");
    if (m >= 63) throw SizeLimitError("2^" + std::to_string(m) + " edge subsets is not enumerable");

    std::vector<std::int64_t> acc(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    const EdgeSet ebit = EdgeSet{1} << edge_index;
    const std::uint64_t others = std::uint64_t{1} << (m - 1);
    for (std::uint64_t it = 0; it < others; ++it) {
        // spread the m-1 free bits around the fixed edge bit
        const EdgeSet low = static_cast<EdgeSet>(it) & (ebit - 1);
        const EdgeSet high = (static_cast<EdgeSet>(it) & ~(ebit - 1)) << 1;
        const EdgeSet f = low | high | ebit;
        const int i = components(h, f);
        const int j = components(h, f & ~ebit);
        acc[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j - 1)] += (popcount(f) & 1) ? -1 : 1;
    }

    BTable t;
    t.pivot_edge = edge_index;
    t.order = n;
    t.values.assign(acc.size(), BigInt(0));
    for (std::size_t idx = 0; idx < acc.size(); ++idx) t.values[idx] = static_cast<long>(acc[idx]);
    return t;
}

BTable btable_partition(const Hypergraph& h, int edge_index) {
    const int n = h.order();
    if (edge_index < 0 || edge_index >= h.edge_count())
        throw std::invalid_argument("no such edge");
    const VertexSet e = h.edge(edge_index);

    BTable t;
    t.pivot_edge = edge_index;
    t.order = n;
    t.values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BigInt(0));

    A1Cache cache(h);
    for (int j = 2; j <= n; ++j) {
        for_each_partition(h.vertices(), j, [&](const VertexPartition& blocks) {
            int meets = 0;
            for (VertexSet b : blocks) meets += (b & e) != 0;
            if (meets < 2) return;  // i = j: not covered by the partition formula
            const int i = j - meets + 1;
            BigInt prod = 1;
            for (VertexSet b : blocks) {
                prod *= cache.a1(b);
                if (prod == 0) return;
            }
            t.at(i, j) -= prod;
        });
    }
    return t;
}

BigInt b_direct(const Hypergraph& h, int edge_index, int i, int j) {
    const int n = h.order();
    if (i < 1 || i > n || j < 1 || j > n) return 0;
    return btable_direct(h, edge_index).at(i, j);
}

BigInt b_partition(const Hypergraph& h, int edge_index, int i, int j) {
    if (!(i < j)) throw std::invalid_argument("the partition formula needs i < j");
    const int n = h.order();
    if (i < 1 || j > n) return 0;
    if (edge_index < 0 || edge_index >= h.edge_count())
        throw std::invalid_argument("no such edge");

    A1Cache cache(h);
    BigInt sum = 0;
    partitions_meeting_edge(h, edge_index, j, j - i + 1, [&](const VertexPartition& blocks) {
        BigInt prod = 1;
        for (VertexSet b : blocks) {
            prod *= cache.a1(b);
            if (prod == 0) return;
        }
        sum += prod;
    });
    return -sum;
}

IntPolynomial coefficients_recursive(const Hypergraph& h) {
    if (h.edge_count() == 0) {
        IntPolynomial poly(h.order());
        poly.a(h.order()) = 1;
        return poly;
    }
    return coefficients_recursive(h, default_pivot_edge(h));
}

IntPolynomial coefficients_recursive(const Hypergraph& h, int pivot_edge) {
    const int n = h.order();
    const BTable t = btable_partition(h, pivot_edge);
    IntPolynomial poly(n);
    for (int i = 1; i <= n; ++i) {
        BigInt v = 0;
        for (int j = i + 1; j <= n; ++j) v += t.at(i, j);
        for (int j = 1; j < i; ++j) v -= t.at(j, i);
        poly.a(i) = v;
    }
    return poly;
}

GraphBForms b_graph_forms(const Hypergraph& g, int edge_index) {
    if (!g.is_graph()) throw std::invalid_argument("graph b-forms require a graph");
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw std::invalid_argument("no such edge");
    const int n = g.order();
    const VertexSet e = g.edge(edge_index);

    GraphBForms out;
    out.via_partitions.assign(static_cast<std::size_t>(n), BigInt(0));
    A1Cache cache(g);
    for (int i = 1; i <= n - 1; ++i) {
        BigInt sum = 0;
        for_each_partition(g.vertices(), i + 1, [&](const VertexPartition& blocks) {
            for (VertexSet b : blocks)
                if ((e & ~b) == 0) return;  // the edge may not sit inside a block
            BigInt prod = 1;
            for (VertexSet b : blocks) {
                prod *= cache.a1(b);
                if (prod == 0) return;
            }
            sum += prod;
        });
        out.via_partitions[static_cast<std::size_t>(i - 1)] = -sum;
    }
    // i = n needs n+1 non-empty blocks: empty sum, b_e^n = 0

    const IntPolynomial a = coefficients_recursive(g);
    out.via_partial_sums.resize(static_cast<std::size_t>(n));
    BigInt run = 0;
    for (int i = 1; i <= n; ++i) {
        run += a.a(i);
        out.via_partial_sums[static_cast<std::size_t>(i - 1)] = run;
    }

    if (out.via_partitions != out.via_partial_sums)
        throw std::logic_error("graph b-form evaluations disagree");
    return out;
}

SignBoundReport sign_bound_audit(const Hypergraph& g) {
    if (!g.is_graph()) throw std::invalid_argument("the sign/bound audit requires a graph");
    const int n = g.order();
    const int m = g.edge_count();

    SignBoundReport rep;
    rep.n = n;
    rep.component_count = components(g, g.all_edges());
    rep.complete = (m == n * (n - 1) / 2);
    rep.has_edges = m > 0;

    const IntPolynomial a_g = coefficients_recursive(g);
    const IntPolynomial a_k = coefficients_recursive(complete_graph(n));

    BigInt run_g = 0, run_k = 0;
    rep.all_ok = true;
    for (int i = 1; i <= n; ++i) {
        SignBoundRow row;
        row.i = i;
        const bool flip = (n - i) % 2 != 0;
        row.a_signed = flip ? BigInt(-a_g.a(i)) : a_g.a(i);
        row.a_signed_complete = flip ? BigInt(-a_k.a(i)) : a_k.a(i);
        run_g += a_g.a(i);
        run_k += a_k.a(i);
        row.b_signed = flip ? BigInt(-run_g) : run_g;
        row.b_signed_complete = flip ? BigInt(-run_k) : run_k;

        row.a_inequalities = row.a_signed >= 0 && row.a_signed <= row.a_signed_complete;
        row.a_left_sharpness = (row.a_signed == 0) == (i < rep.component_count);
        row.a_right_sharpness = (i == n) ? (row.a_signed == row.a_signed_complete)
                                         : ((row.a_signed < row.a_signed_complete) == !rep.complete);

        if (rep.has_edges) {
            row.b_inequalities = row.b_signed >= 0 && row.b_signed <= row.b_signed_complete;
            row.b_left_sharpness =
                (row.b_signed == 0) == (i < rep.component_count || i == n);
            row.b_right_sharpness =
                (i >= n - 1) ? (row.b_signed == row.b_signed_complete)
                             : ((row.b_signed < row.b_signed_complete) == !rep.complete);
        }

        rep.all_ok = rep.all_ok && row.a_inequalities && row.a_left_sharpness &&
                     row.a_right_sharpness && row.b_inequalities && row.b_left_sharpness &&
                     row.b_right_sharpness;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace chromapoly
