#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "chromapoly/arith.hpp"

namespace chromapoly {

/// Exact data for E_r, the degree-r Taylor polynomial of exp. The reversed
/// polynomial x^r E_r(1/x) is monic with the reciprocals 1/R_i of the roots of
/// E_r as its roots, and its elementary symmetric values are e_k = (-1)^k/k!.
struct TaylorPolyContext {
    int r = 0;
    std::vector<BigRational> elementary;  // elementary[k-1] = e_k
};

TaylorPolyContext make_taylor_context(int r);

struct MomentSeries {
    int r = 0;
    std::vector<BigRational> mu;  // mu[n-1] = mu_r(n) = sum_i R_i^{-n}
};

/// Exact power sums of the reciprocal roots of E_r via Newton's identities on
/// the reversed polynomial.
MomentSeries reciprocal_power_sums(int r, int count);

/// a_1(K_n^r) = -(n-1)! mu_{r-1}(n). Exact; the result provably reduces to an
/// integer and a failed reduction raises (it would signal a bug).
BigInt a1_complete(int r, int n);

/// a_1(K_n^r) through the partition recursion specialised to complete
/// hypergraphs: sums over block-size multisets of the pivot edge times
/// multinomial placements of the remaining n-r vertices.
BigInt a1_complete_recursive(int r, int n);
std::vector<BigInt> a1_complete_recursive_table(int r, int n_max);  // index n-1, n = 1..n_max

/// Closed form valid for n <= 2r; nullopt beyond that range.
std::optional<BigInt> a1_complete_piecewise(int r, int n);

/// Complex roots of E_r by Durand-Kerner iteration, conjugate-closed up to
/// floating error. Guarded to 1 <= r <= 25; throws with iteration diagnostics
/// on non-convergence.
std::vector<std::complex<double>> taylor_roots(int r);

/// sum_{j=0}^{r-1} C(r-2+m, r-1-j) a_1(K^r_{j+m}); identically zero.
BigInt zemyan_identity_residual(int r, int m);

/// First `count` coefficients of the power series E'_{r-1}/E_{r-1}
/// (= E_{r-2}/E_{r-1}), by exact rational series division.
std::vector<BigRational> log_derivative_series(int r, int count);

/// Coefficient n of the series above must equal a_1(K^r_{n+1})/n!.
bool series_check(int r, int count);

}  // namespace chromapoly
