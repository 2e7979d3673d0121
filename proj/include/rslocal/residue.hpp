#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rslocal/cyclotomic.hpp"

namespace rslocal {

using u64 = unsigned long long;

bool is_prime(u64 n);

/// The finite ring Z/p^k for a prime p and level k >= 1.
class ResidueRing {
public:
    ResidueRing(u64 p, unsigned level);

    u64 p() const { return p_; }
    unsigned level() const { return level_; }
    u64 modulus() const { return modulus_; }
    u64 unit_count() const { return modulus_ - modulus_ / p_; }
    bool is_unit(u64 x) const { return (x % modulus_) % p_ != 0; }
    /// Units in ascending order.
    std::vector<u64> units() const;

    bool operator==(const ResidueRing&) const = default;

private:
    u64 p_;
    unsigned level_;
    u64 modulus_;
};

/// Multiplicative character of (Z/p^k)^x, stored by generator images:
/// a primitive root for odd p; the pair (-1, 5) for p = 2, k <= 3.
class FiniteChar {
public:
    static FiniteChar trivial(const ResidueRing& ring);

    const ResidueRing& ring() const { return ring_; }
    bool is_trivial() const;
    /// chi(u) as an exact root of unity; throws std::invalid_argument on
    /// non-units.
    CycScalar value(u64 u) const;
    /// value(u) = zeta_M^e where M = value_order(); exponent arithmetic
    /// used by the Gauss-sum accumulation.
    u64 value_order() const { return value_order_; }
    u64 value_exponent(u64 u) const;

    /// Least c with chi trivial on 1 + p^c (0 for the trivial character).
    unsigned conductor_exponent() const;
    /// Non-trivial on 1 + p^(k-1), i.e. conductor equals the ring level.
    bool is_primitive() const;

    bool operator==(const FiniteChar&) const = default;
    std::string to_string() const;

    friend std::vector<FiniteChar> enumerate_characters(const ResidueRing& ring);
    friend FiniteChar char_mul(const FiniteChar& a, const FiniteChar& b);

private:
    ResidueRing ring_;
    std::vector<u64> gens_;        // canonical generators of the unit group
    std::vector<u64> gen_orders_;
    std::vector<u64> gen_exps_;    // chi(gens_[i]) = zeta_{gen_orders_[i]}^{gen_exps_[i]}
    u64 value_order_ = 1;
    std::vector<std::vector<u64>> dlog_;  // unit -> exponent vector over gens_

    FiniteChar(ResidueRing ring, std::vector<u64> exps);
};

/// All p^k - p^(k-1) characters of (Z/p^k)^x, trivial one first, in a
/// fixed documented order. Domain: p odd, or p = 2 with k <= 3; outside it
/// throws UnsupportedDomainError.
std::vector<FiniteChar> enumerate_characters(const ResidueRing& ring);

/// Pointwise product after lifting both to the larger level (same p).
FiniteChar char_mul(const FiniteChar& a, const FiniteChar& b);

/// A point of p^(-k) O / O: the class mod 1 of num / p^denom_exp.
class FractionalPoint {
public:
    FractionalPoint(u64 p, long long numerator, unsigned denom_exp);

    u64 p() const { return p_; }
    /// Normalized so that gcd(num, p) = 1 unless denom_exp() == 0
    /// (integral points normalize to 0/1).
    u64 num() const { return num_; }
    unsigned denom_exp() const { return denom_exp_; }
    bool is_integral() const { return denom_exp_ == 0; }

    FractionalPoint scaled(u64 unit) const;  // class of unit * x

    bool operator==(const FractionalPoint&) const = default;

private:
    u64 p_;
    u64 num_;
    unsigned denom_exp_;
};

/// psi(x) = zeta_{p^k}^num for x = num/p^k in lowest terms; 1 on O.
/// This is the additive character with conductor O.
CycScalar additive_psi(const FractionalPoint& x);

/// Unit-group average (1/#units(p^L)) sum_{z unit mod p^L} omega(z) psi(y z),
/// L = max(level of omega, denominator exponent of y, 1). Direct summation;
/// the normalization realizes vol(O^x) = 1.
CycScalar gauss_sum(const FiniteChar& omega, const FractionalPoint& y);

/// [GL_m(O) : K_0(p^f)] = p^((f-1)(m-1)) (p^m - 1)/(p - 1).
u64 k0_index(unsigned m, u64 p, unsigned f);

/// Independent oracle: enumerates GL_m(Z/p) and counts cosets of the
/// subgroup with last row (0,...,0,*). Domain m <= 3, p in {2,3}, f = 1.
u64 k0_index_bruteforce(unsigned m, u64 p, unsigned f);

/// Raised when a Gauss sum that must not vanish does (a non-primitive
/// omega was supplied with c_exp >= 1).
struct ZeroGaussSumError : std::runtime_error {
    explicit ZeroGaussSumError(const std::string& msg) : std::runtime_error(msg) {}
};

/// c = G(omega, psi, p^(-c_exp)) / [GL_m(O) : K_0(p^q_exp)], non-zero.
CycScalar constant_c(const FiniteChar& omega, unsigned c_exp, unsigned q_exp,
                     unsigned m, u64 p);

}  // namespace rslocal
