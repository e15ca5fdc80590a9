#include "chromapoly/chromatic.hpp"

#include <algorithm>

namespace chromapoly {

BigInt chromatic_bruteforce(const Hypergraph& h, unsigned long lambda,
                            std::uint64_t max_assignments) {
    const int n = h.order();
    if (lambda == 0) return 0;

    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > max_assignments / lambda)
            throw SizeLimitError("brute force would enumerate more than " +
                                 std::to_string(max_assignments) + " colourings");
        total *= lambda;
    }

    const auto& edges = h.edge_masks();
    std::vector<unsigned long> colour(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    for (std::uint64_t it = 0; it < total; ++it) {
        bool proper = true;
        for (VertexSet e : edges) {
            const unsigned long first = colour[static_cast<std::size_t>(std::countr_zero(e))];
            bool two_colours = false;
            VertexSet rest = e & (e - 1);
            while (rest) {
                if (colour[static_cast<std::size_t>(std::countr_zero(rest))] != first) {
                    two_colours = true;
                    break;
                }
                rest &= rest - 1;
            }
            if (!two_colours) {
                proper = false;
                break;
            }
        }
        count += proper;
        int p = 0;
        while (p < n && ++colour[static_cast<std::size_t>(p)] == lambda) {
            colour[static_cast<std::size_t>(p)] = 0;
            ++p;
        }
    }
    return BigInt(static_cast<unsigned long>(count));
}

ExpansionResult chromatic_subset_expansion_stats(const Hypergraph& h) {
    const int n = h.order();
    const int m = h.edge_count();
    if (m >= 63) throw SizeLimitError("2^" + std::to_string(m) + " edge subsets is not enumerable");

    std::vector<std::int64_t> acc(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << m;
    // Gray-code order: F changes by one edge per step, so |F| alternates in
    // parity and the sign is just the step parity.
    for (std::uint64_t i = 0; i < total; ++i) {
        const EdgeSet f = i ^ (i >> 1);
        acc[static_cast<std::size_t>(components(h, f))] += (i & 1) ? -1 : 1;
    }

    IntPolynomial poly(n);
    for (int i = 1; i <= n; ++i) poly.a(i) = static_cast<long>(acc[static_cast<std::size_t>(i)]);
    return ExpansionResult{std::move(poly), total};
}

IntPolynomial chromatic_subset_expansion(const Hypergraph& h) {
    return chromatic_subset_expansion_stats(h).poly;
}

namespace {

std::vector<VertexSet> contract_edge(int n, const std::vector<VertexSet>& edges, VertexSet e) {
    const int u = std::countr_zero(e);
    const int v = std::countr_zero(e & (e - 1));  // u < v; v is merged into u
    std::vector<VertexSet> out;
    out.reserve(edges.size());
    for (VertexSet f : edges) {
        VertexSet g = 0;
        VertexSet bits = f;
        while (bits) {
            int w = std::countr_zero(bits);
            bits &= bits - 1;
            if (w == v) w = u;
            else if (w > v) --w;
            g |= VertexSet{1} << w;
        }
        if (popcount(g) == 2) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    (void)n;
    return out;
}

void delcon_rec(int n, std::vector<VertexSet>& edges, int sign, std::vector<BigInt>& acc) {
    if (edges.empty()) {
        acc[static_cast<std::size_t>(n)] += sign;
        return;
    }
    const VertexSet e = edges.back();
    edges.pop_back();
    delcon_rec(n, edges, sign, acc);  // G - e
    auto contracted = contract_edge(n, edges, e);
    delcon_rec(n - 1, contracted, -sign, acc);  // G / e
    edges.push_back(e);
}

}  // namespace

IntPolynomial chromatic_deletion_contraction(const Hypergraph& g) {
    if (!g.is_graph())
        throw std::invalid_argument("deletion-contraction requires all edges to have cardinality 2");
    const int n = g.order();
    std::vector<BigInt> acc(static_cast<std::size_t>(n) + 1);
    std::vector<VertexSet> edges = g.edge_masks();
    delcon_rec(n, edges, 1, acc);
    IntPolynomial poly(n);
    for (int i = 1; i <= n; ++i) poly.a(i) = acc[static_cast<std::size_t>(i)];
    return poly;
}

IntPolynomial interpolate_from_counts(const Hypergraph& h, std::uint64_t max_assignments) {
    const int n = h.order();
    std::vector<BigInt> d(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l)
        d[static_cast<std::size_t>(l)] =
            chromatic_bruteforce(h, static_cast<unsigned long>(l), max_assignments);

    // In place: afterwards d[k] is the k-th forward difference at 0.
    for (int k = 1; k <= n; ++k)
        for (int i = n; i >= k; --i)
            d[static_cast<std::size_t>(i)] -= d[static_cast<std::size_t>(i - 1)];

    // p(x) = sum_k d[k] * C(x,k). Accumulate n! * p(x) over the falling
    // factorials x(x-1)...(x-k+1) to stay in integers, then divide exactly.
    const BigInt nfact = factorial(n);
    std::vector<BigInt> scaled(static_cast<std::size_t>(n) + 1);  // coeffs of n! * p
    std::vector<BigInt> falling{1};                               // x(x-1)...(x-k+1)
    for (int k = 0; k <= n; ++k) {
        const BigInt weight = d[static_cast<std::size_t>(k)] * (nfact / factorial(k));
        for (std::size_t i = 0; i < falling.size(); ++i) scaled[i] += weight * falling[i];
        // extend by the factor (x - k)
        falling.push_back(0);
        for (std::size_t i = falling.size() - 1; i > 0; --i)
            falling[i] = falling[i - 1] - k * falling[i];
        falling[0] *= -k;
    }

    IntPolynomial poly(n);
    for (int i = 0; i <= n; ++i) {
        BigInt& c = scaled[static_cast<std::size_t>(i)];
        if (!mpz_divisible_p(c.get_mpz_t(), nfact.get_mpz_t()))
            throw std::logic_error("interpolation produced a non-integer coefficient");
        c /= nfact;
        if (i == 0) {
            if (c != 0) throw std::logic_error("interpolation produced a constant term");
        } else {
            poly.a(i) = c;
        }
    }
    return poly;
}

}  // namespace chromapoly
