#include "rslocal/reps.hpp"

#include <algorithm>
#include <sstream>

#include "rslocal/errors.hpp"

namespace rslocal {

RepDescriptor::RepDescriptor(unsigned degree, std::vector<CycScalar> params, unsigned cond_exp,
                             CentralCharDescriptor central)
    : degree_(degree), params_(std::move(params)), cond_exp_(cond_exp), central_(std::move(central)) {
    if (degree_ == 0) throw std::invalid_argument("RepDescriptor: degree must be >= 1");
    if (params_.size() != degree_)
        throw std::invalid_argument("RepDescriptor: need exactly degree parameters");
    if (cond_exp_ == 0) {
        for (const CycScalar& a : params_)
            if (a.is_zero())
                throw std::invalid_argument(
                    "RepDescriptor: spherical descriptor (cond_exp 0) with a zero parameter");
    }
    if (cond_exp_ >= 1 && central_.cond_exp > cond_exp_)
        throw std::invalid_argument("RepDescriptor: central conductor exceeds conductor");
    if ((central_.cond_exp >= 1) != central_.finite_part.has_value())
        throw std::invalid_argument(
            "RepDescriptor: central finite part must be present exactly when its conductor is >= 1");
}

RepDescriptor RepDescriptor::with_central(CentralCharDescriptor central) const {
    return RepDescriptor(degree_, params_, cond_exp_, std::move(central));
}

std::string RepDescriptor::to_string() const {
    std::ostringstream out;
    out << "rep(n=" << degree_ << ", params=[";
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out << ", ";
        out << params_[i].to_string();
    }
    out << "], cond=" << cond_exp_ << ")";
    return out.str();
}

RepDescriptor make_character(const CycScalar& value, const std::optional<FiniteChar>& finite) {
    if (!finite.has_value() || finite->is_trivial()) {
        if (value.is_zero())
            throw std::invalid_argument("make_character: unramified character needs a non-zero value");
        CentralCharDescriptor central{0, std::nullopt, value};
        return RepDescriptor(1, {value}, 0, std::move(central));
    }
    const unsigned cond = finite->conductor_exponent();
    CentralCharDescriptor central{cond, finite, value};
    return RepDescriptor(1, {CycScalar()}, cond, std::move(central));
}

RepDescriptor langlands_sum(const RepDescriptor& a, const RepDescriptor& b) {
    std::vector<CycScalar> params = a.params();
    params.insert(params.end(), b.params().begin(), b.params().end());

    CentralCharDescriptor central;
    central.unram_value = a.central().unram_value * b.central().unram_value;
    if (a.central().finite_part && b.central().finite_part) {
        FiniteChar prod = char_mul(*a.central().finite_part, *b.central().finite_part);
        central.cond_exp = prod.conductor_exponent();
        if (central.cond_exp >= 1) central.finite_part = std::move(prod);
    } else if (a.central().finite_part) {
        central.finite_part = a.central().finite_part;
        central.cond_exp = a.central().cond_exp;
    } else if (b.central().finite_part) {
        central.finite_part = b.central().finite_part;
        central.cond_exp = b.central().cond_exp;
    }
    return RepDescriptor(a.degree() + b.degree(), std::move(params),
                         a.cond_exp() + b.cond_exp(), std::move(central));
}

RepDescriptor sigma_b(const RepDescriptor& eta, unsigned b, u64 q) {
    if (b < 1) throw std::invalid_argument("sigma_b: b must be >= 1");
    if (b == 1) return eta;
    const CycScalar shift(rat_pow(q, -static_cast<long long>(b - 1)));
    std::vector<CycScalar> params;
    params.reserve(static_cast<std::size_t>(b) * eta.degree());
    for (const CycScalar& a : eta.params()) params.push_back(a * shift);
    params.resize(static_cast<std::size_t>(b) * eta.degree(), CycScalar());
    const unsigned cond =
        eta.cond_exp() >= 1 ? b * eta.cond_exp() : (b - 1) * eta.degree();
    return RepDescriptor(b * eta.degree(), std::move(params), cond, eta.central());
}

RepDescriptor twist_unramified(const RepDescriptor& a, const CycScalar& t) {
    if (t.is_zero()) throw std::invalid_argument("twist_unramified: t must be non-zero");
    std::vector<CycScalar> params;
    params.reserve(a.degree());
    for (const CycScalar& p : a.params()) params.push_back(p.is_zero() ? p : p * t);
    CentralCharDescriptor central = a.central();
    central.unram_value = central.unram_value * t.pow(a.degree());
    return RepDescriptor(a.degree(), std::move(params), a.cond_exp(), std::move(central));
}

EsiComponent make_esi(const RepDescriptor& eta, unsigned b, u64 q) {
    return EsiComponent{sigma_b(eta, b, q), eta, b};
}

std::string EsiComponent::to_string() const {
    std::ostringstream out;
    out << "sigma_" << b << "(" << eta.to_string() << ")";
    return out.str();
}

XRational boxtimes_esi(const EsiComponent& pi, const EsiComponent& tau, u64 q) {
    const unsigned n = pi.rep.degree();
    const unsigned m = tau.rep.degree();

    const bool tau_unram_char_segment =
        tau.eta.degree() == 1 && tau.eta.cond_exp() == 0;
    if (!tau_unram_char_segment) {
        // Every other in-catalog tau has trivial standard L-factor, and the
        // pair's factor is 1; anything else is outside the closed forms.
        if (lfactor_from_params(tau.rep.params()).is_one()) return XRational::one();
        throw UnsupportedEsiPairError("boxtimes_esi: unsupported pair with tau = " +
                                      tau.to_string());
    }

    const CycScalar chi_value = tau.eta.params()[0];
    XRational result = XRational::one();
    auto shifted_factor = [&](unsigned k) {
        // L(s+k, eta ox chi): scale every parameter by chi_value * q^-k.
        const CycScalar t = chi_value * CycScalar(rat_pow(q, -static_cast<long long>(k)));
        std::vector<CycScalar> params;
        params.reserve(pi.eta.degree());
        for (const CycScalar& a : pi.eta.params()) params.push_back(a * t);
        return lfactor_from_params(params);
    };
    if (m <= n) {
        for (unsigned j = 0; j < m; ++j) result = result * shifted_factor(j + pi.b - 1);
    } else {
        for (unsigned i = 0; i < pi.b; ++i) result = result * shifted_factor(m - 1 + i);
    }
    return result;
}

XPoly correction_polynomial(std::span<const EsiComponent> pi_parts,
                            std::span<const EsiComponent> tau_parts, u64 q) {
    if (pi_parts.empty() || tau_parts.empty())
        throw std::invalid_argument("correction_polynomial: empty component list");

    RepDescriptor pi = pi_parts[0].rep;
    for (std::size_t i = 1; i < pi_parts.size(); ++i) pi = langlands_sum(pi, pi_parts[i].rep);
    RepDescriptor tau = tau_parts[0].rep;
    for (std::size_t j = 1; j < tau_parts.size(); ++j) tau = langlands_sum(tau, tau_parts[j].rep);

    XRational box = XRational::one();
    for (const EsiComponent& pc : pi_parts)
        for (const EsiComponent& tc : tau_parts) box = box * boxtimes_esi(pc, tc, q);

    XPoly p = divide_exact(naive_rs_lfactor(pi, tau), box);
    if (!p.coeff(0).is_one())
        throw InternalInvariantError("correction_polynomial: P(0) != 1");
    return p;
}

XRational naive_rs_lfactor(const RepDescriptor& pi, const RepDescriptor& tau) {
    return naive_rs(pi.params(), tau.params());
}

}  // namespace rslocal
