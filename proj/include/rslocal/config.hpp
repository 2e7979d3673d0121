#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rslocal/cyclotomic.hpp"
#include "rslocal/residue.hpp"

namespace rslocal {

/// Run configuration: a flat key = value text file. Typed values: integers,
/// exact rationals "a/b", root-of-unity literals "zeta(N)^k" (optionally
/// "r*zeta(N)^k"), lists in brackets, bare strings for names and paths.
/// Unknown keys are rejected; every field is validated before computation.
struct RunConfig {
    std::string pipeline;
    u64 q = 0;
    unsigned trunc = 12;
    std::uint64_t seed = 1;
    std::string report_path;

    // cauchy / theorem_main: explicit parameter lists, or a seeded sweep.
    std::vector<CycScalar> alpha, gamma;
    unsigned random_cases = 0;
    unsigned max_n = 4;
    unsigned max_m = 4;
    long selftest_perturb_degree = -1;

    // theorem_main conductor / central character data.
    static constexpr unsigned kDerived = ~0u;
    unsigned cond_exp_pi = kDerived;
    unsigned cond_exp_tau = kDerived;
    unsigned cond_exp_omega = 0;
    long omega_index = -1;
    CycScalar omega_pi_value = CycScalar(1L);

    // lemma_aux catalog bounds.
    unsigned max_b = 3;
    unsigned max_degree = 4;
    std::vector<CycScalar> char_values;  // defaults to [1, 2, 1/2]

    // gauss_suite domain.
    std::vector<u64> primes{2, 3, 5};
    unsigned max_cond = 2;
};

/// Scalar literal parser shared with the config grammar ("2/3",
/// "zeta(8)^3", "-1/2*zeta(12)"). Throws ConfigError.
CycScalar parse_scalar_literal(const std::string& text);

/// Parses and fully validates; ConfigError carries the offending line.
RunConfig parse_config_text(const std::string& text, const std::string& origin);
RunConfig parse_config_file(const std::string& path);

/// Pipeline-specific validation (also fills derived conductor defaults).
/// Called by the parsers; exposed for configs assembled in code.
void validate_config(RunConfig& config);

const std::vector<std::string>& pipeline_names();

}  // namespace rslocal
