// Acceptance suite: one line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/complete.hpp"
#include "chromapoly/generators.hpp"
#include "chromapoly/recursion.hpp"
#include "chromapoly/whitney.hpp"

using namespace chromapoly;

namespace {

constexpr std::uint64_t kGraphSeed = 20240001;
constexpr std::uint64_t kHyperSeed = 20240002;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;  // keep the first reason
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Hypergraph> criterion_graphs() {
    std::mt19937_64 rng(kGraphSeed);
    std::vector<Hypergraph> out;
    for (int t = 0; t < 200; ++t)
        out.push_back(random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng));
    return out;
}

std::vector<Hypergraph> criterion_hypergraphs(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Hypergraph> out;
    for (int t = 0; t < count; ++t)
        out.push_back(random_hypergraph(2 + static_cast<int>(rng() % 5), 8, 2, 4, rng));
    return out;
}

void check_same(Outcome& outcome, const IntPolynomial& reference, const IntPolynomial& got,
                const std::string& label) {
    if (got == reference) return;
    outcome.fail(label + ": expected " + reference.to_string() + ", got " + got.to_string());
}

// ---------------------------------------------------------------- criterion 1
Outcome cross_algorithm_equality() {
    Outcome outcome;
    int index = 0;
    auto run_instance = [&](const Hypergraph& h, bool graph_case) {
        const std::string tag =
            (graph_case ? "graph #" : "hypergraph #") + std::to_string(index);
        const IntPolynomial reference = chromatic_subset_expansion(h);

        check_same(outcome, reference, coefficients_recursive(h), tag + " recursion");
        check_same(outcome, reference, interpolate_from_counts(h), tag + " interpolate");
        if (graph_case) {
            check_same(outcome, reference, chromatic_deletion_contraction(h), tag + " delcon");
            check_same(outcome, reference,
                       nbc_counts(h, EdgeOrdering::identity(h.edge_count())).abar,
                       tag + " whitney");
        }

        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const EdgeOrdering ord =
                EdgeOrdering::shuffled(h.edge_count(), kGraphSeed + 977 * seed + static_cast<std::uint64_t>(index));
            const std::string otag = tag + " ordering " + std::to_string(seed);
            check_same(outcome, reference, pruned_expansion(h, BrokenFamily{ord, {}}),
                       otag + " pruned empty");
            check_same(outcome, reference, pruned_expansion(h, delta_cycle_broken_sets(h, ord)),
                       otag + " pruned delta");
            check_same(outcome, reference, pruned_expansion(h, berge_cycle_broken_sets(h, ord)),
                       otag + " pruned berge");
            check_same(outcome, reference, pruned_expansion(h, enumerate_broken_cyclic(h, ord)),
                       otag + " pruned maximal");
        }
        ++index;
    };

    for (const Hypergraph& g : criterion_graphs()) run_instance(g, true);
    index = 0;
    for (const Hypergraph& h : criterion_hypergraphs(100, kHyperSeed)) run_instance(h, false);
    return outcome;
}

// ---------------------------------------------------------------- criterion 2
Outcome b_oracle_equality() {
    Outcome outcome;
    int index = 0;
    for (const Hypergraph& h : criterion_hypergraphs(50, kHyperSeed + 1)) {
        const int n = h.order();
        for (int e = 0; e < h.edge_count(); ++e) {
            const BTable direct = btable_direct(h, e);
            const BTable partition = btable_partition(h, e);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (direct.at(i, j) != partition.at(i, j))
                        outcome.fail("hypergraph #" + std::to_string(index) + " edge " +
                                     std::to_string(e) + " (i,j)=(" + std::to_string(i) + "," +
                                     std::to_string(j) + "): direct " +
                                     direct.at(i, j).get_str() + " vs partition " +
                                     partition.at(i, j).get_str());
        }
        ++index;
    }
    return outcome;
}

// ---------------------------------------------------------------- criterion 3
Outcome stirling_check() {
    Outcome outcome;
    std::vector<std::vector<BigInt>> s(10, std::vector<BigInt>(10));
    s[0][0] = 1;
    for (int n = 0; n < 9; ++n)
        for (int i = 1; i <= n + 1; ++i)
            s[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(i)] =
                s[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)] -
                n * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];

    for (int n = 1; n <= 9; ++n) {
        const IntPolynomial poly = coefficients_recursive(complete_graph(n));
        for (int i = 1; i <= n; ++i)
            if (poly.a(i) != s[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)])
                outcome.fail("K_" + std::to_string(n) + " coefficient a_" + std::to_string(i) +
                             " = " + poly.a(i).get_str() + " != s(n,i) " +
                             s[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].get_str());
    }
    return outcome;
}

// ---------------------------------------------------------------- criterion 4
Outcome theorem14_stack() {
    Outcome outcome;
    for (int r = 2; r <= 6; ++r) {
        const std::vector<BigInt> recursive = a1_complete_recursive_table(r, 25);
        for (int n = 1; n <= 25; ++n) {
            const BigInt value = a1_complete(r, n);
            if (recursive[static_cast<std::size_t>(n - 1)] != value)
                outcome.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) +
                             ": recursion " + recursive[static_cast<std::size_t>(n - 1)].get_str() +
                             " vs formula " + value.get_str());
            if (n <= 2 * r) {
                const auto piecewise = a1_complete_piecewise(r, n);
                if (!piecewise || *piecewise != value)
                    outcome.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                 ": piecewise mismatch");
            }
        }
    }
    for (int r = 2; r <= 4; ++r)
        for (int n = 1; n <= 6; ++n)
            if (chromatic_subset_expansion(complete_hypergraph(n, r)).a(1) != a1_complete(r, n))
                outcome.fail("subset expansion of K_" + std::to_string(n) + "^" +
                             std::to_string(r) + " disagrees with the formula");
    return outcome;
}

// ---------------------------------------------------------------- criterion 5
Outcome closed_forms_r2_r3() {
    Outcome outcome;
    for (int n = 1; n <= 20; ++n) {
        BigInt expected = factorial(n - 1);
        if (n % 2 == 0) expected = -expected;
        if (a1_complete(2, n) != expected)
            outcome.fail("a_1(K_" + std::to_string(n) + ") != (-1)^(n-1)(n-1)!");
    }
    // 2^(1-n/2) cos(n pi/4) over one period, scaled by 1/16 per extra period
    const int num[8] = {2, 1, 0, -1, -1, -1, 0, 1};
    const int den[8] = {1, 1, 1, 2, 2, 4, 1, 8};
    for (int n = 1; n <= 30; ++n) {
        BigRational t(num[n % 8], den[n % 8]);
        t.canonicalize();
        for (int p = 0; p < n / 8; ++p) t /= 16;
        BigRational expected = BigRational(factorial(n - 1)) * t;
        if (n % 2 == 0) expected = -expected;
        expected.canonicalize();
        if (expected.get_den() != 1 || a1_complete(3, n) != expected.get_num())
            outcome.fail("cosine closed form fails at n=" + std::to_string(n));
    }
    return outcome;
}

// ---------------------------------------------------------------- criterion 6
Outcome zemyan_zero() {
    Outcome outcome;
    for (int r = 2; r <= 5; ++r)
        for (int m = 1; m <= 10; ++m)
            if (zemyan_identity_residual(r, m) != 0)
                outcome.fail("residual r=" + std::to_string(r) + " m=" + std::to_string(m));
    return outcome;
}

// ---------------------------------------------------------------- criterion 7
Outcome series_coefficients() {
    Outcome outcome;
    for (int r : {3, 4})
        if (!series_check(r, 12)) outcome.fail("series mismatch for r=" + std::to_string(r));
    return outcome;
}

// ---------------------------------------------------------------- criterion 8
Outcome floating_cross_check() {
    Outcome outcome;
    for (int r = 1; r <= 8; ++r) {
        const auto roots = taylor_roots(r);
        const MomentSeries exact = reciprocal_power_sums(r, 12);
        for (int n = 1; n <= 12; ++n) {
            std::complex<double> sum = 0;
            for (const auto& root : roots) sum += std::pow(1.0 / root, n);
            const double reference = exact.mu[static_cast<std::size_t>(n - 1)].get_d();
            const double rel =
                std::abs(sum.real() - reference) / std::max(1.0, std::abs(reference));
            if (rel > 1e-8 || std::abs(sum.imag()) > 1e-8)
                outcome.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) +
                             ": relative error " + std::to_string(rel));
        }
    }
    return outcome;
}

// ---------------------------------------------------------------- criterion 9
Outcome sign_bound_criterion() {
    Outcome outcome;
    int index = 0;
    for (const Hypergraph& g : criterion_graphs()) {
        const SignBoundReport report = sign_bound_audit(g);
        if (!report.all_ok)
            outcome.fail("graph #" + std::to_string(index) + " (n=" + std::to_string(g.order()) +
                         ", m=" + std::to_string(g.edge_count()) + ") fails the audit");
        ++index;
    }
    return outcome;
}

// --------------------------------------------------------------- criterion 10
Outcome forest_and_whitney() {
    Outcome outcome;
    std::mt19937_64 rng(kGraphSeed + 7);
    for (int t = 0; t < 100; ++t) {
        const Hypergraph g = random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng);
        const IntPolynomial reference = chromatic_subset_expansion(g);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const EdgeOrdering ord = EdgeOrdering::shuffled(g.edge_count(), 31 * seed + 1);
            const NbcCounts counts = nbc_counts(g, ord);
            if (counts.abar != reference)
                outcome.fail("graph #" + std::to_string(t) + ": Whitney coefficients differ");
            if (g.edge_count() == 0) continue;  // the forest recursion needs an edge
            const ForestCounts fc = forest_counts(g, ord);
            for (int i = 1; i <= g.order(); ++i) {
                const BigInt lhs = counts.h[static_cast<std::size_t>(i - 1)];
                if (lhs != fc.c[static_cast<std::size_t>(i - 1)] + fc.c[static_cast<std::size_t>(i)])
                    outcome.fail("graph #" + std::to_string(t) + ": h_" + std::to_string(i) +
                                 " != c_" + std::to_string(i - 1) + " + c_" + std::to_string(i));
            }
        }
    }
    return outcome;
}

struct Criterion {
    int id;
    std::string label;
    Outcome (*run)();
    double budget_seconds;  // 0 = no stated bound
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "cross-algorithm equality on random graphs and hypergraphs", cross_algorithm_equality, 60.0},
        {2, "partition formula equals direct enumeration for every b_e^{i,j}", b_oracle_equality, 30.0},
        {3, "complete-graph coefficients are signed Stirling numbers (n <= 9)", stirling_check, 0.0},
        {4, "a_1(K_n^r): formula = recursion = piecewise = expansion", theorem14_stack, 60.0},
        {5, "closed forms for r = 2 (factorials) and r = 3 (cosine table)", closed_forms_r2_r3, 0.0},
        {6, "Zemyan residuals vanish for r = 2..5, m = 1..10", zemyan_zero, 0.0},
        {7, "series E'_{r-1}/E_{r-1} matches a_1(K^r_{n+1})/n! (r = 3, 4)", series_coefficients, 0.0},
        {8, "root-finder power sums match exact moments to 1e-8", floating_cross_check, 0.0},
        {9, "sign and bound audit with sharpness on the criterion-1 graphs", sign_bound_criterion, 0.0},
        {10, "forest counts rebuild the Whitney counts under random orderings", forest_and_whitney, 0.0},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds)
            outcome.fail("exceeded the " + std::to_string(criterion.budget_seconds) +
                         "s budget (" + std::to_string(elapsed) + "s)");

        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2)
                  << criterion.id << ": " << criterion.label << " (" << std::fixed
                  << std::setprecision(2) << elapsed << "s)";
        if (!outcome.pass) std::cout << "\n       " << outcome.detail;
        std::cout << "\n";
        failures += outcome.pass ? 0 : 1;
    }

    if (failures) std::cout << failures << " criterion(s) failed\n";
    else std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
