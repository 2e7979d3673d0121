#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rslocal/cyclotomic.hpp"

namespace rslocal {

/// Polynomial in X = q^(-s) with CycScalar coefficients. Canonical form has
/// no trailing zero coefficients; the zero polynomial has degree() == -1
/// (the sentinel standing for degree minus infinity).
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<CycScalar> coeffs);
    static XPoly constant(CycScalar c);
    static XPoly one() { return constant(CycScalar(1L)); }
    /// c * X^k
    static XPoly monomial(CycScalar c, unsigned k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of X^k (zero beyond the degree).
    CycScalar coeff(unsigned k) const;
    const std::vector<CycScalar>& coeffs() const { return coeffs_; }
    CycScalar evaluate(const CycScalar& x) const;

    XPoly operator+(const XPoly& rhs) const;
    XPoly operator-(const XPoly& rhs) const;
    XPoly operator*(const XPoly& rhs) const;
    bool operator==(const XPoly& rhs) const = default;

    /// Quotient and remainder; rhs non-zero.
    std::pair<XPoly, XPoly> divmod(const XPoly& rhs) const;
    /// Monic gcd; gcd(0, 0) == 0.
    static XPoly gcd(XPoly a, XPoly b);

    std::string to_string() const;

private:
    std::vector<CycScalar> coeffs_;
    void strip();
};

/// Truncated power series in X: coefficients 0..trunc. Binary operations
/// and comparisons first truncate to the smaller truncation degree.
class XSeries {
public:
    explicit XSeries(unsigned trunc) : coeffs_(trunc + 1) {}
    XSeries(unsigned trunc, std::vector<CycScalar> coeffs);

    unsigned truncation() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const CycScalar& coeff(unsigned k) const { return coeffs_.at(k); }
    void add_to_coeff(unsigned k, const CycScalar& v) { coeffs_.at(k) += v; }
    void set_coeff(unsigned k, CycScalar v) { coeffs_.at(k) = std::move(v); }

    XSeries truncated(unsigned d) const;
    bool operator==(const XSeries& rhs) const;
    bool operator!=(const XSeries& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    std::vector<CycScalar> coeffs_;
};

/// num/den normalized so that den(0) = 1 and gcd(num, den) = 1.
class XRational {
public:
    XRational() : num_(XPoly::one()), den_(XPoly::one()) {}  // the constant 1
    /// Normalizes; throws std::domain_error if den == 0 or den(0) == 0
    /// after cancellation.
    XRational(XPoly num, XPoly den);
    static XRational one() { return XRational(); }

    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    bool is_one() const { return num_ == XPoly::one() && den_ == XPoly::one(); }

    XRational operator*(const XRational& rhs) const;
    XRational operator/(const XRational& rhs) const;
    bool operator==(const XRational& rhs) const = default;

    std::string to_string() const;

private:
    XPoly num_, den_;
};

/// Structured failure of exact division: the quotient was not a polynomial.
struct NonPolynomialQuotientError : std::runtime_error {
    XRational quotient;
    explicit NonPolynomialQuotientError(XRational q);
};

/// 1 / prod_{p != 0} (1 - p X); zero parameters contribute the factor 1.
XRational lfactor_from_params(std::span<const CycScalar> params);

/// prod_{i,j, alpha_i gamma_j != 0} (1 - alpha_i gamma_j X)^(-1).
XRational naive_rs(std::span<const CycScalar> alpha, std::span<const CycScalar> gamma);

/// Maclaurin coefficients of num/den through X^D (exact long division;
/// den(0) = 1 is guaranteed by the XRational invariant).
XSeries series_of(const XRational& r, unsigned trunc);

/// The polynomial P with a = P * b, if it exists; otherwise throws
/// NonPolynomialQuotientError carrying the offending quotient a/b.
XPoly divide_exact(const XRational& a, const XRational& b);

}  // namespace rslocal
