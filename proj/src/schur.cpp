#include "rslocal/schur.hpp"

#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rslocal/errors.hpp"

namespace rslocal {

namespace {

// h_0..h_max by multiplying the truncated geometric series of each parameter
// into an accumulator: c[j] += p * c[j-1] realizes division by (1 - p t).
std::vector<CycScalar> h_series(std::span<const CycScalar> params, unsigned max_degree) {
    std::vector<CycScalar> h(max_degree + 1, CycScalar());
    h[0] = CycScalar(1L);
    for (const CycScalar& p : params) {
        if (p.is_zero()) continue;
        for (unsigned j = 1; j <= max_degree; ++j) h[j] += p * h[j - 1];
    }
    return h;
}

// Division-free determinant via the column-subset DP; fine for the small
// Jacobi-Trudi matrices that arise here.
CycScalar determinant(const std::vector<std::vector<CycScalar>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return CycScalar(1L);
    std::vector<CycScalar> dp(std::size_t(1) << n, CycScalar());
    dp[0] = CycScalar(1L);
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        const unsigned row = static_cast<unsigned>(std::popcount(mask));
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t(1) << j)) continue;
            if (m[row][j].is_zero()) continue;
            const std::size_t above = mask >> (j + 1);
            CycScalar term = dp[mask] * m[row][j];
            if (std::popcount(above) % 2 != 0) term = -term;
            dp[mask | (std::size_t(1) << j)] += term;
        }
    }
    return dp.back();
}

CycScalar jacobi_trudi(const Partition& lambda, std::span<const CycScalar> params,
                       const std::vector<CycScalar>& h) {
    const std::size_t ell = lambda.length();
    if (ell == 0) return CycScalar(1L);
    if (ell > params.size()) return CycScalar();
    std::vector<std::vector<CycScalar>> m(ell, std::vector<CycScalar>(ell));
    for (std::size_t i = 1; i <= ell; ++i)
        for (std::size_t j = 1; j <= ell; ++j) {
            const long long idx = static_cast<long long>(lambda.part(i)) -
                                  static_cast<long long>(i) + static_cast<long long>(j);
            if (idx >= 0) m[i - 1][j - 1] = h[static_cast<std::size_t>(idx)];
        }
    return determinant(m);
}

}  // namespace

CycScalar complete_homogeneous(unsigned k, std::span<const CycScalar> params) {
    return h_series(params, k)[k];
}

CycScalar schur_eval(const Partition& lambda, std::span<const CycScalar> params) {
    const std::size_t ell = lambda.length();
    if (ell == 0) return CycScalar(1L);
    if (ell > params.size()) return CycScalar();
    const unsigned max_h = lambda.part(1) + static_cast<unsigned>(ell) - 1;
    return jacobi_trudi(lambda, params, h_series(params, max_h));
}

CycScalar schur_eval_tableaux(const Partition& lambda, std::span<const CycScalar> params,
                              unsigned weight_bound) {
    if (lambda.weight() > weight_bound) {
        std::ostringstream msg;
        msg << "schur_eval_tableaux: weight " << lambda.weight()
            << " exceeds the enumeration bound " << weight_bound;
        throw UnsupportedDomainError(msg.str());
    }
    const auto& rows = lambda.parts();
    const unsigned letters = static_cast<unsigned>(params.size());
    CycScalar total;

    // Row-major fill: weakly increasing along rows, strictly down columns.
    std::vector<std::vector<unsigned>> t(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) t[r].assign(rows[r], 0);

    std::function<void(std::size_t, std::size_t, CycScalar)> fill =
        [&](std::size_t r, std::size_t c, CycScalar prod) {
            if (r == rows.size()) {
                total += prod;
                return;
            }
            if (c == rows[r]) {
                fill(r + 1, 0, std::move(prod));
                return;
            }
            unsigned lo = 1;
            if (c > 0) lo = std::max(lo, t[r][c - 1]);
            if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
            for (unsigned v = lo; v <= letters; ++v) {
                if (params[v - 1].is_zero()) continue;
                t[r][c] = v;
                fill(r, c + 1, prod * params[v - 1]);
            }
            t[r][c] = 0;
        };
    fill(0, 0, CycScalar(1L));
    return total;
}

SchurEvaluator::SchurEvaluator(std::vector<CycScalar> params, unsigned max_degree)
    : params_(std::move(params)), h_(h_series(params_, max_degree)) {}

const CycScalar& SchurEvaluator::h(unsigned k) const {
    if (k >= h_.size()) throw std::out_of_range("SchurEvaluator: h index beyond cached degree");
    return h_[k];
}

CycScalar SchurEvaluator::schur(const Partition& lambda) const {
    const std::size_t ell = lambda.length();
    if (ell == 0) return CycScalar(1L);
    if (ell > params_.size()) return CycScalar();
    if (lambda.part(1) + ell - 1 >= h_.size())
        throw std::out_of_range("SchurEvaluator: partition needs h beyond cached degree");
    return jacobi_trudi(lambda, params_, h_);
}

}  // namespace rslocal
