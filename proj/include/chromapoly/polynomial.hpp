#pragma once

#include <string>
#include <vector>

#include "chromapoly/arith.hpp"

namespace chromapoly {

/// Chromatic polynomial in coefficient form: a_1 lambda + ... + a_n lambda^n.
/// There is never a constant term; the leading coefficient a_n is 1 for any
/// (hyper)graph of order n.
class IntPolynomial {
public:
    explicit IntPolynomial(int order) : coeffs_(static_cast<std::size_t>(order)) {
        if (order < 1) throw std::invalid_argument("polynomial order must be >= 1");
    }

    int order() const { return static_cast<int>(coeffs_.size()); }

    // 1-based coefficient access: a(i) multiplies lambda^i.
    const BigInt& a(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
    BigInt& a(int i) { return coeffs_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc += coeffs_[i];
            acc *= x;
        }
        return acc;
    }

    std::vector<std::string> decimal_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.get_str());
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ' ';
            s += coeffs_[i].get_str();
        }
        return s;
    }

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

inline BigInt poly_eval(const IntPolynomial& p, const BigInt& x) { return p.eval(x); }

}  // namespace chromapoly
