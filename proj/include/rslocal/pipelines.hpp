#pragma once

#include "rslocal/config.hpp"
#include "rslocal/report.hpp"

namespace rslocal {

/// Cauchy comparison: cauchy_sum vs series_of(naive_rs), coefficient-wise.
Report run_cauchy(const RunConfig& config);

/// Torus-sum comparison zeta_torus_sum vs series_of(naive_rs), plus the
/// averaging constant c when tau is ramified and q is prime.
Report run_theorem_main(const RunConfig& config);

/// Correction-polynomial sweep over the essentially-square-integrable
/// component catalog, with the factorization consequence check.
Report run_lemma_aux(const RunConfig& config);

/// Gauss-sum vanishing / magnitude / unit-shift sweeps and the coset-index
/// oracle comparison.
Report run_gauss_suite(const RunConfig& config);

/// Dispatch on config.pipeline.
Report run_pipeline(const RunConfig& config);

}  // namespace rslocal
