#pragma once

#include <span>
#include <vector>

#include "rslocal/cyclotomic.hpp"
#include "rslocal/partition.hpp"

namespace rslocal {

/// h_k(params): sum of all degree-k monomials, computed by truncating the
/// generating series prod_i (1 - params_i t)^(-1) at t^k.
CycScalar complete_homogeneous(unsigned k, std::span<const CycScalar> params);

/// s_lambda(params) by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
/// Zero whenever length(lambda) exceeds the number of parameters. Handles
/// repeated and zero parameters (the bialternant quotient does not).
CycScalar schur_eval(const Partition& lambda, std::span<const CycScalar> params);

inline constexpr unsigned kTableauxWeightBound = 12;

/// Independent oracle: sum over semistandard Young tableaux of shape lambda
/// with entries in {1..len(params)}. Refuses weights above `weight_bound`
/// (UnsupportedDomainError) to keep enumeration feasible.
CycScalar schur_eval_tableaux(const Partition& lambda, std::span<const CycScalar> params,
                              unsigned weight_bound = kTableauxWeightBound);

/// Evaluates many s_lambda against one parameter tuple, with h_0..h_max
/// computed once. This is the evaluation path used by the torus sums.
class SchurEvaluator {
public:
    SchurEvaluator(std::vector<CycScalar> params, unsigned max_degree);

    const CycScalar& h(unsigned k) const;  // k <= max_degree
    CycScalar schur(const Partition& lambda) const;
    std::size_t param_count() const { return params_.size(); }

private:
    std::vector<CycScalar> params_;
    std::vector<CycScalar> h_;
};

}  // namespace rslocal
