#include "rslocal/residue.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rslocal/errors.hpp"

namespace rslocal {

namespace {

constexpr u64 kMaxModulus = 1'000'000;  // desk-scale refusal bound for tables

u64 pow_u64(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > kMaxModulus * kMaxModulus / base)
            throw std::overflow_error("residue modulus overflow");
        r *= base;
    }
    return r;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> ps;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Least primitive root mod p^k (odd p): least primitive root g mod p,
// bumped by p when g^(p-1) = 1 mod p^2.
u64 primitive_root(u64 p, unsigned k) {
    const u64 group = p - 1;
    const auto qs = prime_divisors(group);
    u64 g = 0;
    for (u64 cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (u64 q : qs)
            if (pow_mod(cand, group / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw InternalInvariantError("no primitive root found");
    if (k >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ResidueRing::ResidueRing(u64 p, unsigned level) : p_(p), level_(level) {
    if (!is_prime(p)) throw std::invalid_argument("ResidueRing: p must be prime");
    if (level == 0) throw std::invalid_argument("ResidueRing: level must be >= 1");
    modulus_ = pow_u64(p, level);
    if (modulus_ > kMaxModulus)
        throw UnsupportedDomainError("ResidueRing: modulus beyond desk-scale bound");
}

std::vector<u64> ResidueRing::units() const {
    std::vector<u64> us;
    us.reserve(unit_count());
    for (u64 x = 1; x < modulus_; ++x)
        if (x % p_ != 0) us.push_back(x);
    return us;
}

FiniteChar::FiniteChar(ResidueRing ring, std::vector<u64> exps)
    : ring_(ring), gen_exps_(std::move(exps)) {
    const u64 p = ring_.p();
    const unsigned k = ring_.level();
    if (p == 2) {
        if (k == 2) {
            gens_ = {3};
            gen_orders_ = {2};
        } else if (k == 3) {
            gens_ = {7, 5};  // -1 and 5
            gen_orders_ = {2, 2};
        } else if (k > 3) {
            throw UnsupportedDomainError("FiniteChar: p = 2 supported only for level <= 3");
        }
    } else {
        const u64 g = primitive_root(p, k);
        gens_ = {g % ring_.modulus()};
        gen_orders_ = {ring_.unit_count()};
    }
    if (gen_exps_.size() != gens_.size())
        throw std::invalid_argument("FiniteChar: generator image count mismatch");
    for (std::size_t i = 0; i < gens_.size(); ++i) gen_exps_[i] %= gen_orders_[i];

    value_order_ = 1;
    for (u64 o : gen_orders_) value_order_ = std::lcm(value_order_, o);

    // Discrete-log table over the fixed generators.
    dlog_.assign(ring_.modulus(), {});
    std::vector<u64> idx(gens_.size(), 0);
    for (;;) {
        u64 u = 1;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            u = mul_mod(u, pow_mod(gens_[i], idx[i], ring_.modulus()), ring_.modulus());
        dlog_[u] = idx;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == gen_orders_[i]) idx[i++] = 0;
        if (i == idx.size()) break;
    }
}

FiniteChar FiniteChar::trivial(const ResidueRing& ring) {
    std::size_t gen_count = ring.p() == 2 ? (ring.level() == 1 ? 0 : (ring.level() == 2 ? 1 : 2)) : 1;
    if (ring.p() == 2 && ring.level() > 3)
        throw UnsupportedDomainError("FiniteChar: p = 2 supported only for level <= 3");
    return FiniteChar(ring, std::vector<u64>(gen_count, 0));
}

bool FiniteChar::is_trivial() const {
    for (u64 e : gen_exps_)
        if (e != 0) return false;
    return true;
}

u64 FiniteChar::value_exponent(u64 u) const {
    u %= ring_.modulus();
    if (!ring_.is_unit(u)) throw std::invalid_argument("FiniteChar: value at a non-unit");
    const auto& j = dlog_[u];
    u64 e = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        e = (e + gen_exps_[i] * j[i] % value_order_ * (value_order_ / gen_orders_[i])) % value_order_;
    return e;
}

CycScalar FiniteChar::value(u64 u) const {
    return CycScalar::root_of_unity(value_order_, static_cast<long long>(value_exponent(u)));
}

unsigned FiniteChar::conductor_exponent() const {
    for (unsigned c = 0; c <= ring_.level(); ++c) {
        const u64 step = pow_u64(ring_.p(), c);
        bool trivial_on = true;
        for (u64 u = 1; u < ring_.modulus() && trivial_on; u += step)
            if (ring_.is_unit(u) && value_exponent(u) != 0) trivial_on = false;
        if (trivial_on) return c;
    }
    throw InternalInvariantError("character non-trivial on 1 + p^level");
}

bool FiniteChar::is_primitive() const {
    return conductor_exponent() == ring_.level();
}

std::string FiniteChar::to_string() const {
    std::ostringstream out;
    out << "chi(" << ring_.p() << "^" << ring_.level() << ")";
    if (gens_.empty()) {
        out << "[trivial]";
        return out.str();
    }
    out << "[";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ",";
        out << gens_[i] << "->zeta(" << gen_orders_[i] << ")^" << gen_exps_[i];
    }
    out << "]";
    return out.str();
}

std::vector<FiniteChar> enumerate_characters(const ResidueRing& ring) {
    const u64 p = ring.p();
    const unsigned k = ring.level();
    if (p == 2 && k > 3)
        throw UnsupportedDomainError("enumerate_characters: p = 2 supported only for level <= 3");
    std::vector<FiniteChar> chars;
    if (p == 2) {
        if (k == 1) {
            chars.push_back(FiniteChar(ring, {}));
        } else if (k == 2) {
            for (u64 t = 0; t < 2; ++t) chars.push_back(FiniteChar(ring, {t}));
        } else {
            for (u64 s = 0; s < 2; ++s)
                for (u64 t = 0; t < 2; ++t) chars.push_back(FiniteChar(ring, {s, t}));
        }
    } else {
        for (u64 t = 0; t < ring.unit_count(); ++t) chars.push_back(FiniteChar(ring, {t}));
    }
    return chars;
}

FiniteChar char_mul(const FiniteChar& a, const FiniteChar& b) {
    if (a.ring_.p() != b.ring_.p())
        throw std::invalid_argument("char_mul: characters over different primes");
    const FiniteChar& hi = a.ring_.level() >= b.ring_.level() ? a : b;
    const FiniteChar& lo = a.ring_.level() >= b.ring_.level() ? b : a;

    // Lift lo to hi's level through its values on hi's generators, then
    // multiply generator exponents.
    std::vector<u64> exps(hi.gens_.size());
    for (std::size_t i = 0; i < hi.gens_.size(); ++i) {
        const u64 g_low = hi.gens_[i] % lo.ring_.modulus();
        const u64 x = lo.value_exponent(g_low);  // value = zeta_{Mlo}^x
        // zeta_{Mlo}^x = zeta_{ord_i}^e with e = x * ord_i / Mlo (exact).
        const u64 e_lift = x * hi.gen_orders_[i] / lo.value_order_ % hi.gen_orders_[i];
        exps[i] = (hi.gen_exps_[i] + e_lift) % hi.gen_orders_[i];
    }
    return FiniteChar(hi.ring_, std::move(exps));
}

FractionalPoint::FractionalPoint(u64 p, long long numerator, unsigned denom_exp)
    : p_(p), denom_exp_(denom_exp) {
    if (!is_prime(p)) throw std::invalid_argument("FractionalPoint: p must be prime");
    const u64 m = pow_u64(p, denom_exp);
    long long r = numerator % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    num_ = static_cast<u64>(r);
    while (denom_exp_ > 0 && num_ % p_ == 0) {
        num_ /= p_;
        --denom_exp_;
        if (num_ == 0) {
            denom_exp_ = 0;
            break;
        }
    }
    if (denom_exp_ == 0) num_ = 0;
}

FractionalPoint FractionalPoint::scaled(u64 unit) const {
    if (denom_exp_ == 0) return *this;
    const u64 m = pow_u64(p_, denom_exp_);
    return FractionalPoint(p_, static_cast<long long>(mul_mod(unit % m, num_, m)), denom_exp_);
}

CycScalar additive_psi(const FractionalPoint& x) {
    if (x.is_integral()) return CycScalar(1L);
    return CycScalar::root_of_unity(pow_u64(x.p(), x.denom_exp()),
                                    static_cast<long long>(x.num()));
}

CycScalar gauss_sum(const FiniteChar& omega, const FractionalPoint& y) {
    if (omega.ring().p() != y.p())
        throw std::invalid_argument("gauss_sum: character and point over different primes");
    const u64 p = y.p();
    const unsigned v = y.denom_exp();
    const unsigned L = std::max({omega.ring().level(), v, 1u});
    const u64 mod_l = pow_u64(p, L);
    const u64 unit_total = mod_l - mod_l / p;
    const u64 pv = pow_u64(p, v);
    const u64 m = omega.value_order();
    const u64 n0 = std::lcm(m, pv);

    std::vector<Rat> acc(n0, Rat(0));
    for (u64 z = 1; z < mod_l; ++z) {
        if (z % p == 0) continue;
        const u64 e_chi = omega.value_exponent(z);
        const u64 e_psi = v > 0 ? mul_mod(y.num(), z, pv) : 0;
        const u64 idx = (e_chi * (n0 / m) + e_psi * (n0 / pv)) % n0;
        acc[idx] += 1;
    }
    return CycScalar::from_coeffs(n0, std::move(acc)) * CycScalar(Rat(1, static_cast<unsigned long>(unit_total)));
}

u64 k0_index(unsigned m, u64 p, unsigned f) {
    if (m == 0) throw std::invalid_argument("k0_index: m must be >= 1");
    if (f == 0) throw std::invalid_argument("k0_index: f must be >= 1");
    u64 r = pow_u64(p, (f - 1) * (m - 1));
    return r * ((pow_u64(p, m) - 1) / (p - 1));
}

u64 k0_index_bruteforce(unsigned m, u64 p, unsigned f) {
    if (m < 1 || m > 3 || (p != 2 && p != 3) || f != 1)
        throw UnsupportedDomainError("k0_index_bruteforce: domain is m <= 3, p in {2,3}, f = 1");
    const unsigned cells = m * m;
    u64 entries = pow_u64(p, cells);
    u64 group = 0, subgroup = 0;
    std::vector<u64> g(cells);
    for (u64 code = 0; code < entries; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < cells; ++i) {
            g[i] = c % p;
            c /= p;
        }
        // determinant mod p by Laplace expansion (m <= 3)
        long long det = 0;
        if (m == 1) {
            det = static_cast<long long>(g[0]);
        } else if (m == 2) {
            det = static_cast<long long>(g[0] * g[3]) - static_cast<long long>(g[1] * g[2]);
        } else {
            det = static_cast<long long>(g[0]) * (static_cast<long long>(g[4] * g[8]) - static_cast<long long>(g[5] * g[7])) -
                  static_cast<long long>(g[1]) * (static_cast<long long>(g[3] * g[8]) - static_cast<long long>(g[5] * g[6])) +
                  static_cast<long long>(g[2]) * (static_cast<long long>(g[3] * g[7]) - static_cast<long long>(g[4] * g[6]));
        }
        long long d = det % static_cast<long long>(p);
        if (d < 0) d += static_cast<long long>(p);
        if (d == 0) continue;
        ++group;
        bool last_row_pattern = true;
        for (unsigned j = 0; j + 1 < m; ++j)
            if (g[(m - 1) * m + j] != 0) last_row_pattern = false;
        if (last_row_pattern && g[m * m - 1] != 0) ++subgroup;
    }
    return group / subgroup;
}

CycScalar constant_c(const FiniteChar& omega, unsigned c_exp, unsigned q_exp,
                     unsigned m, u64 p) {
    if (q_exp < 1) throw std::invalid_argument("constant_c: q_exp must be >= 1 (tau ramified)");
    if (c_exp > q_exp) throw std::invalid_argument("constant_c: c_exp must be <= q_exp");
    if (omega.ring().p() != p)
        throw std::invalid_argument("constant_c: omega is over a different prime");
    if (c_exp == 0 && !omega.is_trivial())
        throw std::invalid_argument("constant_c: c_exp = 0 requires trivial omega");
    if (c_exp >= 1 && omega.ring().level() != c_exp)
        throw std::invalid_argument("constant_c: omega level must equal c_exp");

    const CycScalar g = gauss_sum(omega, FractionalPoint(p, 1, c_exp));
    if (g.is_zero())
        throw ZeroGaussSumError("constant_c: Gauss sum vanished (omega not primitive at level " +
                                std::to_string(c_exp) + ")");
    return g * CycScalar(Rat(1, static_cast<unsigned long>(k0_index(m, p, q_exp))));
}

}  // namespace rslocal
