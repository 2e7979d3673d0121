#include "rslocal/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rslocal/errors.hpp"

namespace rslocal {

namespace {

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Dense polynomial helpers over Rat; vectors indexed by exponent.
void strip_poly(std::vector<Rat>& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// f mod g in place, g monic. Iterates only non-zero coefficients of g,
// so sparse cyclotomic polynomials reduce cheaply.
void rem_by_monic(std::vector<Rat>& f, const std::vector<Rat>& g) {
    const std::size_t dg = g.size() - 1;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < dg; ++j)
        if (g[j] != 0) support.push_back(j);
    while (f.size() > dg) {
        Rat lead = std::move(f.back());
        f.pop_back();
        if (lead != 0) {
            const std::size_t shift = f.size() - dg;
            for (std::size_t j : support) f[shift + j] -= lead * g[j];
        }
    }
    while (f.size() < dg) f.emplace_back(0);
}

// Exact division, remainder known to be zero (building Phi_N).
std::vector<Rat> div_exact(std::vector<Rat> f, const std::vector<Rat>& g) {
    std::vector<Rat> q(f.size() - g.size() + 1, Rat(0));
    const Rat& glead = g.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        Rat c = f[i + g.size() - 1] / glead;
        if (c != 0) {
            for (std::size_t j = 0; j < g.size(); ++j) f[i + j] -= c * g[j];
        }
        q[i] = std::move(c);
    }
    return q;
}

unsigned long inverse_mod(unsigned long a, unsigned long m) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
    while (new_r != 0) {
        const long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
    return static_cast<unsigned long>(t < 0 ? t + static_cast<long long>(m) : t);
}

}  // namespace

// Tries to express x (reduced power basis at `order`) inside Q(zeta_{order/p}).
// Returns the reduced coordinates at the smaller order when x lies there.
static std::optional<std::vector<Rat>> descend_prime(const std::vector<Rat>& c,
                                                     unsigned long order, unsigned long p) {
    const unsigned long d = order / p;
    if (d % p == 0) {
        // p^2 | order, so Phi_order(x) = Phi_d(x^p) and reduction preserves
        // exponent classes mod p: membership is support divisibility, and
        // zeta_order^(p j) = zeta_d^j gives the coordinates directly.
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0 && k % p != 0) return std::nullopt;
        std::vector<Rat> a(euler_phi(d), Rat(0));
        for (std::size_t j = 0; j < a.size() && p * j < c.size(); ++j) a[j] = c[p * j];
        return a;
    }
    if (d == 1) {
        for (std::size_t k = 1; k < c.size(); ++k)
            if (c[k] != 0) return std::nullopt;
        return std::vector<Rat>{c[0]};
    }
    // order = p d with gcd(p, d) = 1. Split monomials along
    // zeta_order^k = zeta_p^(k d^-1 mod p) * zeta_d^(k p^-1 mod d), eliminate
    // the zeta_p^(p-1) row with the p-th cyclotomic relation, and require the
    // middle rows to vanish in Q(zeta_d).
    const unsigned long dinv = inverse_mod(d, p);
    const unsigned long pinv = inverse_mod(p, d);
    std::vector<std::vector<Rat>> rows(p, std::vector<Rat>(d, Rat(0)));
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) rows[k * dinv % p][k * pinv % d] += c[k];
    for (unsigned long a = 0; a + 1 < p; ++a)
        for (unsigned long b = 0; b < d; ++b)
            if (rows[p - 1][b] != 0) rows[a][b] -= rows[p - 1][b];
    const auto& phi_d = cyclotomic_polynomial(d);
    auto reduce_row = [&](std::vector<Rat> v) {
        v.resize(d + 1, Rat(0));
        strip_poly(v);
        rem_by_monic(v, phi_d);
        v.resize(euler_phi(d), Rat(0));
        return v;
    };
    for (unsigned long a = 1; a + 1 < p; ++a) {
        for (const Rat& x : reduce_row(rows[a]))
            if (x != 0) return std::nullopt;
    }
    return reduce_row(std::move(rows[0]));
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p : prime_factors(n)) result -= result / p;
    return result;
}

const std::vector<Rat>& cyclotomic_polynomial(unsigned long n) {
    static std::map<unsigned long, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built with divisors ascending.
    std::function<const std::vector<Rat>&(unsigned long)> build =
        [&](unsigned long m) -> const std::vector<Rat>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Rat> f(m + 1, Rat(0));
        f[0] = -1;
        f[m] = 1;
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0) f = div_exact(std::move(f), build(d));
        return cache.emplace(m, std::move(f)).first->second;
    };
    return build(n);
}

CycScalar CycScalar::canonicalize(unsigned long order, std::vector<Rat> raw) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    // Fold exponents into [0, order) and reduce modulo Phi_order.
    if (raw.size() > order) {
        for (std::size_t k = order; k < raw.size(); ++k) raw[k % order] += raw[k];
        raw.resize(order);
    }
    raw.resize(order, Rat(0));
    std::vector<Rat> c = std::move(raw);
    if (order > 1) {
        c.resize(order + 1, Rat(0));
        strip_poly(c);
        rem_by_monic(c, cyclotomic_polynomial(order));
    }
    c.resize(order == 1 ? 1 : euler_phi(order), Rat(0));

    // Conductor minimization: repeatedly drop prime factors of the order
    // while the value lies in the subfield.
    bool descended = true;
    while (order > 1 && descended) {
        descended = false;
        const bool all_zero =
            std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
        if (all_zero) {
            order = 1;
            c.assign(1, Rat(0));
            break;
        }
        for (unsigned long p : prime_factors(order)) {
            if (auto a = descend_prime(c, order, p)) {
                order /= p;
                c = std::move(*a);
                descended = true;
                break;
            }
        }
    }
    return CycScalar(order, std::move(c));
}

CycScalar CycScalar::root_of_unity(unsigned long order, long long exponent) {
    if (order == 0) throw std::invalid_argument("root_of_unity: order must be >= 1");
    long long k = exponent % static_cast<long long>(order);
    if (k < 0) k += static_cast<long long>(order);
    std::vector<Rat> c(order, Rat(0));
    c[static_cast<std::size_t>(k)] = 1;
    return canonicalize(order, std::move(c));
}

CycScalar CycScalar::from_coeffs(unsigned long order, std::vector<Rat> coeffs) {
    return canonicalize(order, std::move(coeffs));
}

const Rat& CycScalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycScalar is not rational: " + to_string());
    return coeffs_[0];
}

CycScalar CycScalar::operator-() const {
    CycScalar r(*this);
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
    if (order_ == 1 && rhs.order_ == 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    if (order_ == rhs.order_) {
        std::vector<Rat> sum = coeffs_;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rhs.coeffs_[k];
        *this = canonicalize(order_, std::move(sum));
        return *this;
    }
    const unsigned long l = std::lcm(order_, rhs.order_);
    std::vector<Rat> sum(l, Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[k * (l / order_) % l] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        sum[k * (l / rhs.order_) % l] += rhs.coeffs_[k];
    *this = canonicalize(l, std::move(sum));
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) { return *this += -rhs; }

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
    if (order_ == 1 && rhs.order_ == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    if (is_zero() || rhs.is_zero()) {
        *this = CycScalar();
        return *this;
    }
    const unsigned long l = std::lcm(order_, rhs.order_);
    std::vector<std::pair<unsigned long, const Rat*>> a, b;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) a.emplace_back(k * (l / order_) % l, &coeffs_[k]);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        if (rhs.coeffs_[k] != 0) b.emplace_back(k * (l / rhs.order_) % l, &rhs.coeffs_[k]);
    std::vector<Rat> prod(l, Rat(0));
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) prod[(ka + kb) % l] += (*ca) * (*cb);
    *this = canonicalize(l, std::move(prod));
    return *this;
}

namespace {

// The positive rational s with f/s a primitive integer polynomial with
// positive leading coefficient (1 for the zero polynomial). Rescaling each
// Euclid remainder this way keeps the coefficient sizes tame.
Rat primitive_scale(const std::vector<Rat>& f) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Rat& c : f) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpq_numref(c.get_mpq_t()));
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(c.get_mpq_t()));
    }
    if (num_gcd == 0) return Rat(1);
    Rat s(num_gcd, den_lcm);
    s.canonicalize();
    if (f.back() < 0) s = -s;
    return s;
}

}  // namespace

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("CycScalar: division by zero");
    if (order_ == 1) return CycScalar(Rat(1 / coeffs_[0]));
    // Extended Euclid of the representative against Phi_N: u*f + v*Phi = g,
    // g a non-zero constant, so 1/f = u/g in Q(zeta_N).
    std::vector<Rat> r0 = cyclotomic_polynomial(order_);
    std::vector<Rat> r1 = coeffs_;
    strip_poly(r1);
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
    while (r1.size() > 1 || r1[0] != 0) {
        // r0 = q*r1 + r2
        const std::size_t qsize = r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1;
        std::vector<Rat> q(qsize, Rat(0));
        std::vector<Rat> r2 = r0;
        if (r0.size() >= r1.size()) {
            for (std::size_t i = r0.size() - r1.size() + 1; i-- > 0;) {
                Rat c = r2[i + r1.size() - 1] / r1.back();
                if (c != 0)
                    for (std::size_t j = 0; j < r1.size(); ++j) r2[i + j] -= c * r1[j];
                q[i] = std::move(c);
            }
        }
        strip_poly(r2);
        // u2 = u0 - q*u1
        std::vector<Rat> u2(std::max(u0.size(), q.size() + u1.size() - 1), Rat(0));
        for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        strip_poly(u2);
        const Rat scale = primitive_scale(r2);
        if (scale != 1) {
            for (Rat& x : r2) x /= scale;
            for (Rat& x : u2) x /= scale;
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw InternalInvariantError("cyclotomic polynomial not coprime to unit");
    for (Rat& c : u0) c /= r0[0];
    return canonicalize(order_, std::move(u0));
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs) { return *this *= rhs.inverse(); }

CycScalar CycScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar base(*this), acc(1L);
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        if (n >>= 1) base *= base;
    }
    return acc;
}

CycScalar CycScalar::conjugate() const {
    if (order_ == 1) return *this;
    std::vector<Rat> c(order_, Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        c[(order_ - k) % order_] += coeffs_[k];
    return canonicalize(order_, std::move(c));
}

std::string CycScalar::to_string() const {
    if (is_rational()) return rat_to_string(coeffs_[0]);
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rat c = coeffs_[k];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (k == 0) {
            out << rat_to_string(c);
            continue;
        }
        if (c != 1) out << rat_to_string(c) << "*";
        out << "zeta(" << order_ << ")";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

Rat rat_pow(unsigned long long base, long long exp) {
    mpz_class b(static_cast<unsigned long>(base));
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    Rat r(p);
    if (exp < 0) r = 1 / r;
    return r;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Rat rat_from_string(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("bad rational literal: " + text);
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

}  // namespace rslocal
