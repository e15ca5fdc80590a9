#include <doctest.h>

#include <complex>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/complete.hpp"
#include "chromapoly/generators.hpp"
#include "chromapoly/recursion.hpp"

using namespace chromapoly;

namespace {

// period-8 table of 2^(1-n/2) cos(n pi/4): base values for n mod 8, divided by
// 16 for every full period
BigRational cosine_table_value(int n) {
    static const int num[8] = {2, 1, 0, -1, -1, -1, 0, 1};
    static const int den[8] = {1, 1, 1, 2, 2, 4, 1, 8};
    BigRational q(num[n % 8], den[n % 8]);
    q.canonicalize();
    for (int p = 0; p < n / 8; ++p) q /= 16;
    return q;
}

}  // namespace

TEST_CASE("elementary symmetric values of the reversed Taylor polynomial") {
    const TaylorPolyContext ctx = make_taylor_context(4);
    CHECK(ctx.elementary[0] == BigRational(-1));
    CHECK(ctx.elementary[1] == BigRational(1, 2));
    CHECK(ctx.elementary[2] == BigRational(-1, 6));
    CHECK(ctx.elementary[3] == BigRational(1, 24));
}

TEST_CASE("reciprocal power sums") {
    // r = 1: single root -1
    const MomentSeries m1 = reciprocal_power_sums(1, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(m1.mu[static_cast<std::size_t>(n - 1)] == BigRational((n % 2) ? -1 : 1));

    // r = 2: frozen values derived from the roots -1 +/- i
    const MomentSeries m2 = reciprocal_power_sums(2, 4);
    CHECK(m2.mu[0] == BigRational(-1));
    CHECK(m2.mu[1] == BigRational(0));
    CHECK(m2.mu[2] == BigRational(1, 2));
    CHECK(m2.mu[3] == BigRational(-1, 2));

    // direct complex oracle for the same values
    const std::complex<double> roots[2] = {{-1.0, 1.0}, {-1.0, -1.0}};
    for (int n = 1; n <= 4; ++n) {
        std::complex<double> sum = 0;
        for (const auto& r : roots) sum += std::pow(1.0 / r, n);
        CHECK(m2.mu[static_cast<std::size_t>(n - 1)].get_d() ==
              doctest::Approx(sum.real()).epsilon(1e-12));
        CHECK(sum.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }

    // mu_r(1) = -1 for every r
    for (int r = 1; r <= 9; ++r) CHECK(reciprocal_power_sums(r, 1).mu[0] == BigRational(-1));
}

TEST_CASE("a1 of complete graphs is the alternating factorial") {
    for (int n = 1; n <= 20; ++n) {
        BigInt expected = factorial(n - 1);
        if (n % 2 == 0) expected = -expected;
        CHECK(a1_complete(2, n) == expected);
    }
}

TEST_CASE("a1 of complete hypergraphs: fixtures") {
    CHECK(a1_complete(3, 4) == 3);
    CHECK(a1_complete(3, 6) == 0);
    // initial conditions
    CHECK(a1_complete(3, 1) == 1);
    CHECK(a1_complete(3, 2) == 0);
    CHECK(a1_complete(3, 3) == -1);
    CHECK(a1_complete(4, 2) == 0);
    CHECK(a1_complete(4, 3) == 0);
    CHECK(a1_complete(4, 4) == -1);
}

TEST_CASE("the cosine closed form for r = 3") {
    for (int n = 1; n <= 30; ++n) {
        BigRational expected = BigRational(factorial(n - 1)) * cosine_table_value(n);
        if (n % 2 == 0) expected = -expected;
        expected.canonicalize();
        CHECK(expected.get_den() == 1);
        CHECK(a1_complete(3, n) == expected.get_num());
    }
}

TEST_CASE("piecewise closed form") {
    CHECK(a1_complete_piecewise(3, 5) == BigInt(-6));
    CHECK(a1_complete_piecewise(4, 8) == BigInt(-70));
    CHECK_FALSE(a1_complete_piecewise(5, 11).has_value());
    CHECK(a1_complete_piecewise(5, 10) == BigInt(0));  // n = 2r, odd r
    CHECK(a1_complete_piecewise(2, 4) == BigInt(-6));

    for (int r = 2; r <= 6; ++r)
        for (int n = 1; n <= 2 * r; ++n)
            CHECK(a1_complete_piecewise(r, n) == a1_complete(r, n));
}

TEST_CASE("recursive evaluation matches the root formula") {
    CHECK(a1_complete_recursive_table(3, 5) == std::vector<BigInt>{1, 0, -1, 3, -6});
    CHECK(a1_complete_recursive(2, 5) == 24);
    CHECK(a1_complete_recursive_table(4, 3) == std::vector<BigInt>{1, 0, 0});

    for (int r = 2; r <= 5; ++r) {
        const auto table = a1_complete_recursive_table(r, 14);
        for (int n = 1; n <= 14; ++n)
            CHECK(table[static_cast<std::size_t>(n - 1)] == a1_complete(r, n));
    }
}

TEST_CASE("subset expansion and the generic recursion confirm the values") {
    for (int r = 2; r <= 4; ++r)
        for (int n = 1; n <= 5; ++n) {
            CHECK(chromatic_subset_expansion(complete_hypergraph(n, r)).a(1) == a1_complete(r, n));
            CHECK(a1_recursive(complete_hypergraph(n, r)) == a1_complete(r, n));
        }
    CHECK(a1_recursive(complete_hypergraph(6, 3)) == a1_complete(3, 6));
}

TEST_CASE("Taylor polynomial roots") {
    const auto r1 = taylor_roots(1);
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0] - std::complex<double>(-1.0, 0.0)) < 1e-12);

    auto r2 = taylor_roots(2);
    REQUIRE(r2.size() == 2);
    std::sort(r2.begin(), r2.end(),
              [](const auto& a, const auto& b) { return a.imag() < b.imag(); });
    CHECK(std::abs(r2[0] - std::complex<double>(-1.0, -1.0)) < 1e-10);
    CHECK(std::abs(r2[1] - std::complex<double>(-1.0, 1.0)) < 1e-10);

    // sum of reciprocals is -1 for every degree
    for (int r = 2; r <= 10; ++r) {
        std::complex<double> sum = 0;
        for (const auto& root : taylor_roots(r)) sum += 1.0 / root;
        CHECK(std::abs(sum - std::complex<double>(-1.0, 0.0)) < 1e-9);
    }

    // conjugate closure: the root multiset equals its own conjugate
    for (int r : {3, 6, 9}) {
        const auto roots = taylor_roots(r);
        for (const auto& root : roots) {
            double best = 1e9;
            for (const auto& other : roots)
                best = std::min(best, std::abs(std::conj(root) - other));
            CHECK(best < 1e-9);
        }
    }

    CHECK_THROWS_AS(taylor_roots(0), std::invalid_argument);
    CHECK_THROWS_AS(taylor_roots(26), std::invalid_argument);
}

TEST_CASE("root power sums match the exact moments") {
    for (int r = 1; r <= 8; ++r) {
        const auto roots = taylor_roots(r);
        const MomentSeries exact = reciprocal_power_sums(r, 12);
        for (int n = 1; n <= 12; ++n) {
            std::complex<double> sum = 0;
            for (const auto& root : roots) sum += std::pow(1.0 / root, n);
            const double reference = exact.mu[static_cast<std::size_t>(n - 1)].get_d();
            CHECK(std::abs(sum.real() - reference) / std::max(1.0, std::abs(reference)) < 1e-8);
        }
    }
}

TEST_CASE("Zemyan residuals vanish") {
    // r=2, m=3 by hand: 3 a_1(K_3) + a_1(K_4) = 6 - 6
    CHECK(zemyan_identity_residual(2, 3) == 0);
    CHECK(zemyan_identity_residual(3, 1) == 0);
    CHECK(zemyan_identity_residual(4, 5) == 0);
    for (int r = 2; r <= 5; ++r)
        for (int m = 1; m <= 10; ++m) CHECK(zemyan_identity_residual(r, m) == 0);
}

TEST_CASE("series of the logarithmic derivative") {
    // r=2: 1/(1+x) alternates
    const auto g2 = log_derivative_series(2, 6);
    for (int n = 0; n < 6; ++n) CHECK(g2[static_cast<std::size_t>(n)] == BigRational((n % 2) ? -1 : 1));

    const auto g3 = log_derivative_series(3, 1);
    CHECK(g3[0] == BigRational(1));

    CHECK(series_check(2, 6));
    CHECK(series_check(3, 12));
    CHECK(series_check(4, 12));
}

TEST_CASE("integrality of the factorial-scaled moments") {
    for (int r = 2; r <= 7; ++r)
        for (int n = 1; n <= 20; ++n) CHECK_NOTHROW(a1_complete(r, n));
}
