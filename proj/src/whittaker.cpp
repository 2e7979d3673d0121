#include "rslocal/whittaker.hpp"

#include <algorithm>

#include "rslocal/errors.hpp"
#include "rslocal/schur.hpp"

namespace rslocal {

namespace {

bool is_dominant(std::span<const long long> lam) {
    for (std::size_t i = 1; i < lam.size(); ++i)
        if (lam[i - 1] < lam[i]) return false;
    return lam.empty() || lam.back() >= 0;
}

long long modulus_exponent_checked(unsigned n, std::span<const long long> lam) {
    // Coordinate route: d_n(lambda) = t(a_1,...,a_{n-1}) with
    // v(a_i) = lambda_{n-i} - lambda_{n-i+1} (lambda padded by zeros), and
    // delta_{B_n} = prod ||a_i||^(i(n-i)).
    auto part = [&](unsigned j) -> long long {  // 1-based, 0 beyond length
        return j >= 1 && j <= lam.size() ? lam[j - 1] : 0;
    };
    long long via_coordinates = 0;
    for (unsigned i = 1; i < n; ++i) {
        const long long v_ai = part(n - i) - part(n - i + 1);
        via_coordinates += static_cast<long long>(i) * (n - i) * v_ai;
    }
    long long closed_form = 0;
    for (unsigned i = 1; i <= n; ++i)
        closed_form += (static_cast<long long>(n) + 1 - 2 * static_cast<long long>(i)) * part(i);
    if (via_coordinates != closed_form)
        throw InternalInvariantError("modulus_exponent: coordinate route disagrees with closed form");
    return closed_form;
}

}  // namespace

long long modulus_exponent(unsigned n, std::span<const long long> lambda) {
    if (lambda.size() > n)
        throw std::invalid_argument("modulus_exponent: tuple longer than n");
    if (!is_dominant(lambda))
        throw std::invalid_argument("modulus_exponent: tuple is not weakly decreasing");
    return modulus_exponent_checked(n, lambda);
}

long long modulus_exponent(unsigned n, const Partition& lambda) {
    if (lambda.length() > n)
        throw std::invalid_argument("modulus_exponent: partition longer than n");
    std::vector<long long> lam(lambda.parts().begin(), lambda.parts().end());
    return modulus_exponent_checked(n, lam);
}

QGraded essential_whittaker_torus(unsigned n, std::span<const long long> lambda_exponents,
                                  std::span<const CycScalar> alpha, u64 q) {
    if (alpha.size() != n)
        throw std::invalid_argument("essential_whittaker_torus: need exactly n parameters");
    if (lambda_exponents.size() > n)
        throw std::invalid_argument("essential_whittaker_torus: tuple longer than n");
    if (!is_dominant(lambda_exponents)) return QGraded(CycScalar(), 0, q);

    std::vector<unsigned> parts(lambda_exponents.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        parts[i] = static_cast<unsigned>(lambda_exponents[i]);
    const Partition lam(std::move(parts));
    return QGraded(schur_eval(lam, alpha), -modulus_exponent_checked(n, lambda_exponents), q);
}

QGraded essential_whittaker_torus(unsigned n, const Partition& lambda,
                                  std::span<const CycScalar> alpha, u64 q) {
    std::vector<long long> lam(lambda.parts().begin(), lambda.parts().end());
    return essential_whittaker_torus(n, lam, alpha, q);
}

XSeries zeta_torus_sum(const RepDescriptor& pi, const RepDescriptor& tau,
                       unsigned trunc, u64 q) {
    const unsigned n = pi.degree();
    const unsigned m = tau.degree();
    if (m >= n) throw std::invalid_argument("zeta_torus_sum: requires deg(tau) < deg(pi)");

    XSeries series(trunc);
    for (const Partition& lam : partitions_upto(trunc, m)) {
        const long long weight = lam.weight();
        const QGraded w_pi = essential_whittaker_torus(n, lam, pi.params(), q);
        const QGraded w_tau = essential_whittaker_torus(m, lam, tau.params(), q);
        const long long e_m = modulus_exponent(m, lam);
        const QGraded delta_m_inv(CycScalar(1L), 2 * e_m, q);
        const QGraded det_power(CycScalar(1L), (static_cast<long long>(n) - m) * weight, q);
        const QGraded term =
            qgraded_mul(qgraded_mul(w_pi, w_tau), qgraded_mul(delta_m_inv, det_power));
        // The delta-collapse identity: E_n(lambda) - E_m(lambda) =
        // (n - m) * weight when lambda vanishes beyond position m.
        if (term.halfq != 0)
            throw InternalInvariantError("zeta_torus_sum: term with non-zero q-half-grade at lambda = " +
                                         lam.to_string());
        series.add_to_coeff(static_cast<unsigned>(weight), term.collapse());
    }
    return series;
}

XSeries cauchy_sum(std::span<const CycScalar> alpha, std::span<const CycScalar> gamma,
                   unsigned trunc) {
    const unsigned max_len =
        static_cast<unsigned>(std::max(alpha.size(), gamma.size()));
    const SchurEvaluator eval_alpha(std::vector<CycScalar>(alpha.begin(), alpha.end()),
                                    trunc + max_len);
    const SchurEvaluator eval_gamma(std::vector<CycScalar>(gamma.begin(), gamma.end()),
                                    trunc + max_len);
    XSeries series(trunc);
    for (const Partition& lam : partitions_upto(trunc, max_len))
        series.add_to_coeff(lam.weight(), eval_alpha.schur(lam) * eval_gamma.schur(lam));
    return series;
}

}  // namespace rslocal
