#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chromapoly {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// n! / (k_1! * ... * k_j!) for k_1 + ... + k_j = n.
inline BigInt multinomial(long n, const std::vector<int>& parts) {
    BigInt r = factorial(n);
    for (int k : parts) r /= factorial(k);
    return r;
}

// Normalized rational with positive denominator (mpq_class invariant).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace chromapoly
