#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rslocal/rational.hpp"

namespace rslocal {

/// Exact element of a cyclotomic-rational field Q(zeta_N).
///
/// Canonical form is unique: coefficients are over the power basis
/// 1, zeta_N, ..., zeta_N^(phi(N)-1) (reduced modulo the N-th cyclotomic
/// polynomial) and N is the conductor of the smallest cyclotomic field
/// containing the value. Rationals have order 1. Values are immutable;
/// mixed-order arithmetic lifts both operands to lcm of the orders first.
class CycScalar {
public:
    CycScalar() : order_(1), coeffs_(1, Rat(0)) {}
    CycScalar(long value) : order_(1), coeffs_(1, Rat(value)) {}
    explicit CycScalar(Rat value) : order_(1), coeffs_(1, std::move(value)) {}

    /// zeta_N^k, canonical. Multiplicative order of the result is N/gcd(N,k).
    static CycScalar root_of_unity(unsigned long order, long long exponent);

    /// Sum c_k zeta_N^k from an arbitrary coefficient vector (any length,
    /// exponents taken mod N); canonicalizes.
    static CycScalar from_coeffs(unsigned long order, std::vector<Rat> coeffs);

    unsigned long order() const { return order_; }
    /// Power-basis coefficients; size == phi(order()).
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const { return order_ == 1 && coeffs_[0] == 0; }
    bool is_one() const { return order_ == 1 && coeffs_[0] == 1; }
    bool is_rational() const { return order_ == 1; }
    /// Value as a rational; only when is_rational().
    const Rat& rational_value() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);
    CycScalar& operator/=(const CycScalar& rhs);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    bool operator==(const CycScalar& rhs) const {
        return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    CycScalar inverse() const;
    CycScalar pow(long long e) const;
    /// Complex conjugation (zeta_N -> zeta_N^(N-1)).
    CycScalar conjugate() const;

    /// Canonical text form, e.g. "-1/2 + 3*zeta(8)^3". Matches the config
    /// grammar's scalar literals where the value is a single term.
    std::string to_string() const;

private:
    unsigned long order_;
    std::vector<Rat> coeffs_;

    CycScalar(unsigned long order, std::vector<Rat> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}
    static CycScalar canonicalize(unsigned long order, std::vector<Rat> raw);
};

inline CycScalar operator*(const Rat& a, CycScalar b) { return b *= CycScalar(a); }
inline CycScalar operator*(CycScalar b, const Rat& a) { return b *= CycScalar(a); }

/// Euler phi; small arguments, trial-division based.
unsigned long euler_phi(unsigned long n);

/// Monic Phi_N as dense rational coefficients (degree phi(N)). Cached.
const std::vector<Rat>& cyclotomic_polynomial(unsigned long n);

/// Embedding zeta_N -> exp(2*pi*i/N), evaluated internally at `digits`
/// decimal digits (MPFR) and rounded to a double-precision complex.
std::complex<double> to_complex(const CycScalar& x, unsigned digits);

}  // namespace rslocal
