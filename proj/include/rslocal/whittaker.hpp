#pragma once

#include <span>

#include "rslocal/lseries.hpp"
#include "rslocal/partition.hpp"
#include "rslocal/qgraded.hpp"
#include "rslocal/reps.hpp"

namespace rslocal {

/// Exponent E with delta_{B_n}(d_n(lambda)) = q^(-E), d_n(lambda) =
/// diag(pi^lambda_1, ..., pi^lambda_n). Computed two ways on every call -
/// through the torus coordinates a_i (product of ||a_i||^(i(n-i))) and
/// through the closed form sum_i (n+1-2i) lambda_i - and cross-checked.
/// Requires length(lambda) <= n.
long long modulus_exponent(unsigned n, const Partition& lambda);

/// Same, from a raw exponent tuple; throws std::invalid_argument unless
/// the tuple is weakly decreasing with non-negative entries.
long long modulus_exponent(unsigned n, std::span<const long long> lambda);

/// Torus value of the essential Whittaker function:
/// delta_{B_n}^(1/2) * s_lambda(alpha) as a QGraded, i.e.
/// (coeff = s_lambda(alpha), halfq = -modulus_exponent). Zero on any
/// exponent tuple outside the dominant cone (support condition).
/// Requires len(alpha) = n.
QGraded essential_whittaker_torus(unsigned n, std::span<const long long> lambda_exponents,
                                  std::span<const CycScalar> alpha, u64 q);
QGraded essential_whittaker_torus(unsigned n, const Partition& lambda,
                                  std::span<const CycScalar> alpha, u64 q);

/// The truncated zeta torus sum for degrees m < n: over partitions lambda
/// of length <= m and weight <= trunc, accumulate the grade-0 collapse of
///   W_n(lambda, alpha) * W_m(lambda, gamma) * q^(+E_m(lambda))
///     * q^((n-m) weight / 2)
/// into the X^weight coefficient. Any term with non-zero half-grade throws
/// InternalInvariantError. Covers ramified and unramified tau uniformly.
XSeries zeta_torus_sum(const RepDescriptor& pi, const RepDescriptor& tau,
                       unsigned trunc, u64 q);

/// Independent comparison route: sum over partitions of weight <= trunc and
/// length <= max(len alpha, len gamma) of s_lambda(alpha) s_lambda(gamma)
/// X^weight.
XSeries cauchy_sum(std::span<const CycScalar> alpha, std::span<const CycScalar> gamma,
                   unsigned trunc);

}  // namespace rslocal
