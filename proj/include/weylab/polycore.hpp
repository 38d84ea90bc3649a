#pragma once
#include <string>
#include <vector>

#include "weylab/checked.hpp"

namespace weylab {

// Integer polynomial with zero constant term:
//   psi(x) = a_1 x^k + a_2 x^{k-1} + ... + a_{k-t+1} x^t,   a_1 != 0, t >= 1.
// Coefficients are stored highest degree first; coeffs()[i] multiplies x^{k-i}.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<i64> coeffs_high_first);

    i64 degree() const { return k_; }
    i64 lowtrim() const { return t_; }  // exponent of the lowest nonzero monomial
    i64 leading() const { return coeffs_.front(); }
    i64 low_coeff() const { return coeffs_[size_t(k_ - t_)]; }  // a_{k-t+1}
    i64 gcd_coeffs() const;
    const std::vector<i64>& coeffs() const { return coeffs_; }

    // Exact 128-bit Horner; throws std::range_error on overflow.
    i128 eval(i64 x) const;
    // eval that reports overflow as "larger than any bound" instead of throwing.
    bool eval_leq(i64 x, i128 bound) const;

    std::string text() const;  // e.g. "2x^3 + x"
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<i64> coeffs_;
    i64 k_ = 0;
    i64 t_ = 1;
};

// General integer polynomial, constant term allowed (forward differences,
// weight polynomials h). Highest degree first, last entry is the constant.
class GenPolynomial {
public:
    GenPolynomial() : coeffs_{0} {}
    explicit GenPolynomial(std::vector<i64> coeffs_high_first);

    i64 degree() const { return i64(coeffs_.size()) - 1; }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    i128 eval(i64 x) const;
    std::string text() const;
    bool operator==(const GenPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<i64> coeffs_;
};

// psi^Delta(x) = psi(x+1) - psi(x); degree k-1, constant term allowed.
GenPolynomial delta(const IntPolynomial& psi);

// psi_q(x) = psi(q x) / q^t; integer coefficients a_i q^{k-t-i+1}, same k, t.
IntPolynomial rescale(const IntPolynomial& psi, i64 q);

// Reduced fraction, positive denominator.
struct Fraction {
    i64 num = 0;
    i64 den = 1;
    Fraction() = default;
    Fraction(i64 n, i64 d);
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
};

// Rational polynomial with zero constant term, for clearing denominators.
class RationalPolynomial {
public:
    explicit RationalPolynomial(std::vector<Fraction> coeffs_high_first);
    i64 degree() const { return i64(coeffs_.size()); }
    const std::vector<Fraction>& coeffs() const { return coeffs_; }
    std::string text() const;

private:
    std::vector<Fraction> coeffs_;
};

struct ClearedPolynomial {
    i64 W = 1;            // lcm of the coefficient denominators
    IntPolynomial psi;    // psi*(x) = psi(W x), integer coefficients
};

ClearedPolynomial clear_denominators(const RationalPolynomial& psi);

// Largest M >= 0 with psi(M) <= n, for psi strictly increasing on positive
// integers (verified; domain error otherwise). n >= psi(1) not required: if
// psi(1) > n the result is 0.
i64 inverse_max(const IntPolynomial& psi, i128 n);

}  // namespace weylab
