#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rslocal/cyclotomic.hpp"
#include "rslocal/lseries.hpp"
#include "rslocal/residue.hpp"

namespace rslocal {

/// Central character data: conductor exponent v(c), finite part on units
/// (present exactly when v(c) >= 1) and the value at the uniformizer.
struct CentralCharDescriptor {
    unsigned cond_exp = 0;
    std::optional<FiniteChar> finite_part;
    CycScalar unram_value = CycScalar(1L);

    bool operator==(const CentralCharDescriptor&) const = default;
};

/// Descriptor of an irreducible admissible generic representation of
/// GL_n(F): degree n, the n Langlands parameters (zeros allowed as
/// padding), the conductor exponent, and central character data.
class RepDescriptor {
public:
    /// Validates: len(params) == degree; cond_exp = 0 forces all params
    /// non-zero (spherical); central.cond_exp <= cond_exp when ramified;
    /// central finite part present iff central.cond_exp >= 1.
    RepDescriptor(unsigned degree, std::vector<CycScalar> params, unsigned cond_exp,
                  CentralCharDescriptor central = {});

    unsigned degree() const { return degree_; }
    const std::vector<CycScalar>& params() const { return params_; }
    unsigned cond_exp() const { return cond_exp_; }
    const CentralCharDescriptor& central() const { return central_; }

    RepDescriptor with_central(CentralCharDescriptor central) const;

    bool operator==(const RepDescriptor&) const = default;
    std::string to_string() const;

private:
    unsigned degree_;
    std::vector<CycScalar> params_;
    unsigned cond_exp_;
    CentralCharDescriptor central_;
};

/// Degree-1 descriptor of a quasi-character. Unramified (no finite part):
/// parameter [value]. Ramified: parameter [0], conductor and finite part
/// from `finite` (value is still the character's value at the uniformizer).
RepDescriptor make_character(const CycScalar& value,
                             const std::optional<FiniteChar>& finite = std::nullopt);

/// Langlands sum: degrees add, parameter multisets concatenate, conductor
/// exponents add, central characters multiply.
RepDescriptor langlands_sum(const RepDescriptor& a, const RepDescriptor& b);

/// Essentially-square-integrable builder over a supercuspidal-typed eta:
/// degree b*deg(eta); parameters are eta's scaled by q^-(b-1), padded with
/// zeros. Conductor defaults to b*cond(eta) (eta ramified) or
/// (b-1)*deg(eta) (eta unramified); central data is carried from eta
/// unchanged - override with with_central() when it matters.
RepDescriptor sigma_b(const RepDescriptor& eta, unsigned b, u64 q);

/// Multiplies every non-zero parameter by t != 0; scales the central
/// value at the uniformizer by t^degree; conductor data unchanged.
RepDescriptor twist_unramified(const RepDescriptor& a, const CycScalar& t);

/// A tagged essentially-square-integrable component sigma_b(eta).
struct EsiComponent {
    RepDescriptor rep;  // sigma_b(eta)
    RepDescriptor eta;  // the supercuspidal base
    unsigned b = 1;     // segment length

    std::string to_string() const;
};

EsiComponent make_esi(const RepDescriptor& eta, unsigned b, u64 q);

/// Raised by boxtimes_esi on an essentially-square-integrable pair outside
/// the catalog (tau with a non-trivial standard L-factor that is not
/// sigma_m(chi) for unramified chi).
struct UnsupportedEsiPairError : std::runtime_error {
    explicit UnsupportedEsiPairError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The genuine Rankin-Selberg factor of an essentially-square-integrable
/// pair, realized at parameter level. Closed form when tau = sigma_m(chi)
/// with chi unramified:
///   prod_{j=0}^{m-1} L(s+j+b-1, eta ox chi)   if m <= n,
///   prod_{i=0}^{b-1} L(s+m-1+i, eta ox chi)   if m > n;
/// the constant 1 for every other pair with trivial standard L-factor.
XRational boxtimes_esi(const EsiComponent& pi, const EsiComponent& tau, u64 q);

/// P with L_naive(pi x tau) = P * prod boxtimes_esi over component pairs;
/// always a polynomial with P(0) = 1 (NonPolynomialQuotientError signals
/// inconsistent inputs).
XPoly correction_polynomial(std::span<const EsiComponent> pi_parts,
                            std::span<const EsiComponent> tau_parts, u64 q);

/// prod_{i,j} (1 - alpha_i gamma_j X)^(-1) over the two parameter lists.
XRational naive_rs_lfactor(const RepDescriptor& pi, const RepDescriptor& tau);

}  // namespace rslocal
