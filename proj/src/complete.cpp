#include "chromapoly/complete.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chromapoly {

TaylorPolyContext make_taylor_context(int r) {
    if (r < 1) throw std::invalid_argument("Taylor polynomial degree must be >= 1");
    TaylorPolyContext ctx;
    ctx.r = r;
    ctx.elementary.reserve(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        BigRational e(BigInt((k % 2) ? -1 : 1), factorial(k));
        e.canonicalize();
        ctx.elementary.push_back(std::move(e));
    }
    return ctx;
}

MomentSeries reciprocal_power_sums(int r, int count) {
    if (r < 1 || count < 1) throw std::invalid_argument("need r >= 1 and count >= 1");
    const TaylorPolyContext ctx = make_taylor_context(r);
    auto e = [&](int k) -> const BigRational& {
        return ctx.elementary[static_cast<std::size_t>(k - 1)];
    };

    MomentSeries series;
    series.r = r;
    series.mu.resize(static_cast<std::size_t>(count));
    auto p = [&](int k) -> BigRational& { return series.mu[static_cast<std::size_t>(k - 1)]; };

    for (int k = 1; k <= count; ++k) {
        BigRational sum = 0;
        const int reach = std::min(k - 1, r);
        for (int i = 1; i <= reach; ++i) {
            BigRational term = e(i) * p(k - i);
            if (i % 2 == 0) term = -term;
            sum += term;
        }
        if (k <= r) {
            BigRational tail = BigRational(k) * e(k);
            if (k % 2 == 0) tail = -tail;
            sum += tail;
        }
        p(k) = sum;
    }
    return series;
}

BigInt a1_complete(int r, int n) {
    if (r < 2 || n < 1) throw std::invalid_argument("need r >= 2 and n >= 1");
    const BigRational mu = reciprocal_power_sums(r - 1, n).mu[static_cast<std::size_t>(n - 1)];
    BigRational value = BigRational(factorial(n - 1)) * mu;
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("-(n-1)! mu_{r-1}(n) failed to reduce to an integer");
    return -value.get_num();
}

std::vector<BigInt> a1_complete_recursive_table(int r, int n_max) {
    if (r < 2 || n_max < 1) throw std::invalid_argument("need r >= 2 and n_max >= 1");
    std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1);  // a[n] = a_1(K_n^r)
    a[1] = 1;
    for (int n = 2; n <= std::min(n_max, r - 1); ++n) a[static_cast<std::size_t>(n)] = 0;
    if (r <= n_max) a[static_cast<std::size_t>(r)] = -1;

    // size multisets k_1 <= ... <= k_j of the pivot edge's r vertices, j >= 2
    struct Multiset {
        std::vector<int> parts;
        BigInt count;  // number of set partitions of an r-set with these sizes
    };
    std::vector<Multiset> shapes;
    {
        std::vector<int> parts;
        auto gen = [&](auto&& self, int remaining, int minimum) -> void {
            if (remaining == 0) {
                if (parts.size() >= 2) {
                    BigInt ways = factorial(r);
                    int runlen = 1;
                    for (std::size_t t = 0; t < parts.size(); ++t) {
                        ways /= factorial(parts[t]);
                        if (t + 1 < parts.size() && parts[t + 1] == parts[t]) {
                            ++runlen;
                        } else {
                            ways /= factorial(runlen);
                            runlen = 1;
                        }
                    }
                    shapes.push_back(Multiset{parts, std::move(ways)});
                }
                return;
            }
            for (int next = minimum; next <= remaining; ++next) {
                parts.push_back(next);
                self(self, remaining - next, next);
                parts.pop_back();
            }
        };
        gen(gen, r, 1);
    }

    for (int n = r + 1; n <= n_max; ++n) {
        const int spare = n - r;
        BigInt total = 0;
        for (const Multiset& shape : shapes) {
            const int j = static_cast<int>(shape.parts.size());
            // ordered tuples s_1..s_j >= 0 summing to spare, with the
            // multinomial weight accumulated as a product of binomials
            BigInt shape_sum = 0;
            auto place = [&](auto&& self, int pos, int left, const BigInt& partial) -> void {
                if (partial == 0) return;
                if (pos == j - 1) {
                    const int grown = shape.parts[static_cast<std::size_t>(pos)] + left;
                    shape_sum += partial * a[static_cast<std::size_t>(grown)];
                    return;
                }
                for (int s = 0; s <= left; ++s) {
                    const int grown = shape.parts[static_cast<std::size_t>(pos)] + s;
                    self(self, pos + 1, left - s,
                         partial * binomial(left, s) * a[static_cast<std::size_t>(grown)]);
                }
            };
            place(place, 0, spare, 1);
            total += shape.count * shape_sum;
        }
        a[static_cast<std::size_t>(n)] = -total;
    }

    a.erase(a.begin());
    return a;
}

BigInt a1_complete_recursive(int r, int n) {
    return a1_complete_recursive_table(r, n).back();
}

std::optional<BigInt> a1_complete_piecewise(int r, int n) {
    if (r < 2 || n < 1) throw std::invalid_argument("need r >= 2 and n >= 1");
    if (n == 1) return BigInt(1);
    if (n <= r - 1) return BigInt(0);
    if (n <= 2 * r - 1) {
        BigInt v = binomial(n - 1, r - 1);
        if ((n - r + 1) % 2 != 0) v = -v;
        return v;
    }
    if (n == 2 * r) return BigInt(-(1 + ((r % 2) ? -1 : 1))) * binomial(2 * r - 1, r);
    return std::nullopt;
}

std::vector<std::complex<double>> taylor_roots(int r) {
    if (r < 1 || r > 25)
        throw std::invalid_argument("root finding is supported for 1 <= r <= 25");
    using cd = std::complex<double>;

    // monic integer coefficients of r! E_r: c[k] = r!/k!
    std::vector<double> monic(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k)
        monic[static_cast<std::size_t>(k)] = BigInt(factorial(r) / factorial(k)).get_d();

    auto eval_monic = [&](cd x) {
        cd acc = 0;
        for (int k = r; k >= 0; --k) acc = acc * x + monic[static_cast<std::size_t>(k)];
        return acc;
    };

    // all roots of E_r lie within |z| <= r + 1; start on a ring inside
    std::vector<cd> x(static_cast<std::size_t>(r));
    const double radius = 0.65 * r + 0.7;
    for (int k = 0; k < r; ++k) {
        const double angle = 6.283185307179586 * k / r + 0.4;
        x[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }

    const int max_iterations = 400;
    double shift = 0;
    int iterations = 0;
    for (; iterations < max_iterations; ++iterations) {
        shift = 0;
        for (int i = 0; i < r; ++i) {
            cd denom = 1;
            for (int j = 0; j < r; ++j)
                if (j != i) denom *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            const cd delta = eval_monic(x[static_cast<std::size_t>(i)]) / denom;
            x[static_cast<std::size_t>(i)] -= delta;
            shift = std::max(shift,
                             std::abs(delta) / std::max(1.0, std::abs(x[static_cast<std::size_t>(i)])));
        }
        if (shift < 1e-14) break;
    }

    // residual scaled by sum |x|^k / k!, the natural size of E_r near x
    double worst = 0;
    for (const cd& root : x) {
        cd value = 0;
        double scale = 0;
        double power = 1;
        double kfact = 1;
        cd cpower = 1;
        for (int k = 0; k <= r; ++k) {
            value += cpower / kfact;
            scale += power / kfact;
            cpower *= root;
            power *= std::abs(root);
            kfact *= k + 1;
        }
        worst = std::max(worst, std::abs(value) / scale);
    }
    if (worst > 1e-10)
        throw std::runtime_error("Durand-Kerner did not converge for r=" + std::to_string(r) +
                                 ": residual " + std::to_string(worst) + " after " +
                                 std::to_string(iterations) + " iterations (last shift " +
                                 std::to_string(shift) + ")");
    return x;
}

BigInt zemyan_identity_residual(int r, int m) {
    if (r < 2 || m < 1) throw std::invalid_argument("need r >= 2 and m >= 1");
    BigInt sum = 0;
    for (int j = 0; j <= r - 1; ++j)
        sum += binomial(r - 2 + m, r - 1 - j) * a1_complete(r, j + m);
    return sum;
}

std::vector<BigRational> log_derivative_series(int r, int count) {
    if (r < 2 || count < 1) throw std::invalid_argument("need r >= 2 and count >= 1");
    // E_{r-1} has coefficients 1/k! for k = 0..r-1; its derivative is E_{r-2}
    auto inv_fact = [](int k) {
        BigRational q(1, factorial(k));
        q.canonicalize();
        return q;
    };

    std::vector<BigRational> g(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        BigRational value = (n <= r - 2) ? inv_fact(n) : BigRational(0);  // numerator coeff
        const int reach = std::min(n, r - 1);
        for (int i = 1; i <= reach; ++i)
            value -= inv_fact(i) * g[static_cast<std::size_t>(n - i)];
        g[static_cast<std::size_t>(n)] = std::move(value);
    }
    return g;
}

bool series_check(int r, int count) {
    const std::vector<BigRational> g = log_derivative_series(r, count);
    for (int n = 0; n < count; ++n) {
        BigRational expected(a1_complete(r, n + 1), factorial(n));
        expected.canonicalize();
        if (g[static_cast<std::size_t>(n)] != expected) return false;
    }
    return true;
}

}  // namespace chromapoly
