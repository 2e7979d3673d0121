#include "rslocal/lseries.hpp"

#include <sstream>
#include <stdexcept>

#include "rslocal/errors.hpp"

namespace rslocal {

void XPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly::XPoly(std::vector<CycScalar> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

XPoly XPoly::constant(CycScalar c) {
    XPoly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

XPoly XPoly::monomial(CycScalar c, unsigned k) {
    XPoly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(k + 1, CycScalar());
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

CycScalar XPoly::coeff(unsigned k) const {
    return k < coeffs_.size() ? coeffs_[k] : CycScalar();
}

CycScalar XPoly::evaluate(const CycScalar& x) const {
    CycScalar acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

XPoly XPoly::operator+(const XPoly& rhs) const {
    std::vector<CycScalar> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < coeffs_.size()) c[k] += coeffs_[k];
        if (k < rhs.coeffs_.size()) c[k] += rhs.coeffs_[k];
    }
    return XPoly(std::move(c));
}

XPoly XPoly::operator-(const XPoly& rhs) const {
    std::vector<CycScalar> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < coeffs_.size()) c[k] += coeffs_[k];
        if (k < rhs.coeffs_.size()) c[k] -= rhs.coeffs_[k];
    }
    return XPoly(std::move(c));
}

XPoly XPoly::operator*(const XPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return XPoly();
    std::vector<CycScalar> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return XPoly(std::move(c));
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("XPoly division by zero");
    if (coeffs_.size() < rhs.coeffs_.size()) return {XPoly(), *this};
    std::vector<CycScalar> rem = coeffs_;
    std::vector<CycScalar> quo(coeffs_.size() - rhs.coeffs_.size() + 1);
    const CycScalar lead_inv = rhs.coeffs_.back().inverse();
    for (std::size_t i = quo.size(); i-- > 0;) {
        CycScalar c = rem[i + rhs.coeffs_.size() - 1] * lead_inv;
        if (!c.is_zero())
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                rem[i + j] -= c * rhs.coeffs_[j];
        quo[i] = std::move(c);
    }
    rem.resize(rhs.coeffs_.size() - 1);
    return {XPoly(std::move(quo)), XPoly(std::move(rem))};
}

XPoly XPoly::gcd(XPoly a, XPoly b) {
    while (!b.is_zero()) {
        XPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.coeffs_.back().is_one()) {
        const CycScalar inv = a.coeffs_.back().inverse();
        for (CycScalar& c : a.coeffs_) c = c * inv;
    }
    return a;
}

std::string XPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const std::string c = coeffs_[k].to_string();
        const bool composite = c.find(' ') != std::string::npos;
        if (k == 0) {
            out << (composite ? "(" + c + ")" : c);
            continue;
        }
        if (!coeffs_[k].is_one()) out << (composite ? "(" + c + ")" : c) << "*";
        out << "X";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

XSeries::XSeries(unsigned trunc, std::vector<CycScalar> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(trunc + 1);
}

XSeries XSeries::truncated(unsigned d) const {
    XSeries s(d);
    for (unsigned k = 0; k <= d && k <= truncation(); ++k) s.coeffs_[k] = coeffs_[k];
    return s;
}

bool XSeries::operator==(const XSeries& rhs) const {
    const unsigned d = std::min(truncation(), rhs.truncation());
    for (unsigned k = 0; k <= d; ++k)
        if (coeffs_[k] != rhs.coeffs_[k]) return false;
    return true;
}

std::string XSeries::to_string() const {
    std::ostringstream out;
    for (unsigned k = 0; k <= truncation(); ++k) {
        if (k) out << " + ";
        const std::string c = coeffs_[k].to_string();
        out << (c.find(' ') != std::string::npos ? "(" + c + ")" : c);
        if (k >= 1) out << "*X";
        if (k > 1) out << "^" << k;
    }
    out << " + O(X^" << truncation() + 1 << ")";
    return out.str();
}

XRational::XRational(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("XRational with zero denominator");
    XPoly g = XPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const CycScalar d0 = den_.coeff(0);
    if (d0.is_zero())
        throw std::domain_error("XRational denominator has vanishing constant term");
    if (!d0.is_one()) {
        const CycScalar inv = d0.inverse();
        num_ = num_ * XPoly::constant(inv);
        den_ = den_ * XPoly::constant(inv);
    }
}

XRational XRational::operator*(const XRational& rhs) const {
    return XRational(num_ * rhs.num_, den_ * rhs.den_);
}

XRational XRational::operator/(const XRational& rhs) const {
    if (rhs.num_.is_zero()) throw std::domain_error("XRational division by zero");
    return XRational(num_ * rhs.den_, den_ * rhs.num_);
}

std::string XRational::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

NonPolynomialQuotientError::NonPolynomialQuotientError(XRational q)
    : std::runtime_error("exact division produced a non-polynomial quotient " + q.to_string()),
      quotient(std::move(q)) {}

XRational lfactor_from_params(std::span<const CycScalar> params) {
    XPoly den = XPoly::one();
    for (const CycScalar& p : params) {
        if (p.is_zero()) continue;
        den = den * XPoly(std::vector<CycScalar>{CycScalar(1L), -p});
    }
    return XRational(XPoly::one(), std::move(den));
}

XRational naive_rs(std::span<const CycScalar> alpha, std::span<const CycScalar> gamma) {
    XPoly den = XPoly::one();
    for (const CycScalar& a : alpha) {
        if (a.is_zero()) continue;
        for (const CycScalar& g : gamma) {
            if (g.is_zero()) continue;
            den = den * XPoly(std::vector<CycScalar>{CycScalar(1L), -(a * g)});
        }
    }
    return XRational(XPoly::one(), std::move(den));
}

XSeries series_of(const XRational& r, unsigned trunc) {
    if (!r.den().coeff(0).is_one())
        throw std::domain_error("series_of requires den(0) = 1");
    XSeries s(trunc);
    // c_k = num_k - sum_{j=1..k} den_j c_{k-j}
    for (unsigned k = 0; k <= trunc; ++k) {
        CycScalar c = r.num().coeff(k);
        for (unsigned j = 1; j <= k && static_cast<int>(j) <= r.den().degree(); ++j)
            c -= r.den().coeff(j) * s.coeff(k - j);
        s.set_coeff(k, std::move(c));
    }
    return s;
}

XPoly divide_exact(const XRational& a, const XRational& b) {
    const XRational q = a / b;
    if (q.den().degree() != 0)
        throw NonPolynomialQuotientError(q);
    // den is the constant 1 by normalization.
    return q.num();
}

}  // namespace rslocal
