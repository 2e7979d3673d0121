#include "rslocal/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rslocal/errors.hpp"

namespace rslocal {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

u64 parse_u64(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + text + "'");
    }
}

long parse_long(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'");
    }
}

std::vector<std::string> split_list(const std::string& text, const std::string& key) {
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ConfigError("key '" + key + "': expected a bracketed list, got '" + text + "'");
    std::vector<std::string> items;
    std::string body = t.substr(1, t.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("key '" + key + "': empty list element");
        items.push_back(item);
    }
    return items;
}

bool is_prime_power(u64 q) {
    if (q < 2) return false;
    for (u64 p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    return true;  // q itself prime
}

}  // namespace

CycScalar parse_scalar_literal(const std::string& text) {
    const std::string t = trim(text);
    const std::size_t z = t.find("zeta(");
    if (z == std::string::npos) {
        try {
            return CycScalar(rat_from_string(t));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bad scalar literal '") + t + "': " + e.what());
        }
    }
    Rat coef(1);
    if (z > 0) {
        std::string head = trim(t.substr(0, z));
        if (head.empty() || head.back() != '*')
            throw ConfigError("bad scalar literal '" + t + "': expected 'r*zeta(N)^k'");
        head.pop_back();
        try {
            coef = rat_from_string(trim(head));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bad scalar literal '") + t + "': " + e.what());
        }
    }
    const std::size_t close = t.find(')', z);
    if (close == std::string::npos)
        throw ConfigError("bad scalar literal '" + t + "': unterminated zeta(");
    const std::string order_text = t.substr(z + 5, close - z - 5);
    const u64 order = parse_u64(trim(order_text), "zeta order");
    if (order == 0) throw ConfigError("bad scalar literal '" + t + "': zeta order must be >= 1");
    if (order > 360)
        throw ConfigError("bad scalar literal '" + t + "': zeta order beyond the desk-scale bound 360");
    long long exponent = 1;
    const std::string tail = trim(t.substr(close + 1));
    if (!tail.empty()) {
        if (tail[0] != '^')
            throw ConfigError("bad scalar literal '" + t + "': expected '^' after zeta(N)");
        exponent = parse_long(trim(tail.substr(1)), "zeta exponent");
    }
    return CycScalar(coef) * CycScalar::root_of_unity(order, exponent);
}

const std::vector<std::string>& pipeline_names() {
    static const std::vector<std::string> names{"cauchy", "theorem_main", "lemma_aux",
                                                "gauss_suite"};
    return names;
}

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::set<std::string> common{"pipeline", "trunc", "seed", "report"};
    static const std::map<std::string, std::set<std::string>> keys = [] {
        std::map<std::string, std::set<std::string>> m;
        m["cauchy"] = common;
        m["cauchy"].insert({"alpha", "gamma", "random_cases", "max_n", "max_m",
                            "selftest_perturb_degree"});
        m["theorem_main"] = common;
        m["theorem_main"].insert({"q", "alpha", "gamma", "random_cases", "max_n",
                                  "cond_exp_pi", "cond_exp_tau", "cond_exp_omega",
                                  "omega_index", "omega_pi_value"});
        m["lemma_aux"] = common;
        m["lemma_aux"].insert({"q", "max_b", "max_degree", "char_values"});
        m["gauss_suite"] = common;
        m["gauss_suite"].insert({"primes", "max_cond"});
        return m;
    }();
    return keys;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    std::map<std::string, std::string> raw;
    std::istringstream in(text);
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(where + ": expected 'key = value'");
        if (!raw.emplace(key, value).second)
            throw ConfigError(where + ": duplicate key '" + key + "'");
    }

    RunConfig cfg;
    auto it = raw.find("pipeline");
    if (it == raw.end()) throw ConfigError(origin + ": missing required key 'pipeline'");
    cfg.pipeline = it->second;
    const auto& names = pipeline_names();
    if (std::find(names.begin(), names.end(), cfg.pipeline) == names.end())
        throw ConfigError(origin + ": unknown pipeline '" + cfg.pipeline + "'");

    const auto& allowed = known_keys().at(cfg.pipeline);
    for (const auto& [key, value] : raw)
        if (!allowed.count(key))
            throw ConfigError(origin + ": unknown key '" + key + "' for pipeline " + cfg.pipeline);

    auto get = [&](const char* key) -> const std::string* {
        auto found = raw.find(key);
        return found == raw.end() ? nullptr : &found->second;
    };
    auto scalars = [&](const char* key, std::vector<CycScalar>& out) {
        if (const std::string* v = get(key)) {
            out.clear();
            for (const std::string& item : split_list(*v, key))
                out.push_back(parse_scalar_literal(item));
        }
    };

    if (const std::string* v = get("q")) cfg.q = parse_u64(*v, "q");
    if (const std::string* v = get("trunc")) cfg.trunc = static_cast<unsigned>(parse_u64(*v, "trunc"));
    if (const std::string* v = get("seed")) cfg.seed = parse_u64(*v, "seed");
    if (const std::string* v = get("report")) cfg.report_path = *v;
    scalars("alpha", cfg.alpha);
    scalars("gamma", cfg.gamma);
    scalars("char_values", cfg.char_values);
    if (const std::string* v = get("random_cases"))
        cfg.random_cases = static_cast<unsigned>(parse_u64(*v, "random_cases"));
    if (const std::string* v = get("max_n")) cfg.max_n = static_cast<unsigned>(parse_u64(*v, "max_n"));
    if (const std::string* v = get("max_m")) cfg.max_m = static_cast<unsigned>(parse_u64(*v, "max_m"));
    if (const std::string* v = get("selftest_perturb_degree"))
        cfg.selftest_perturb_degree = parse_long(*v, "selftest_perturb_degree");
    if (const std::string* v = get("cond_exp_pi"))
        cfg.cond_exp_pi = static_cast<unsigned>(parse_u64(*v, "cond_exp_pi"));
    if (const std::string* v = get("cond_exp_tau"))
        cfg.cond_exp_tau = static_cast<unsigned>(parse_u64(*v, "cond_exp_tau"));
    if (const std::string* v = get("cond_exp_omega"))
        cfg.cond_exp_omega = static_cast<unsigned>(parse_u64(*v, "cond_exp_omega"));
    if (const std::string* v = get("omega_index")) cfg.omega_index = parse_long(*v, "omega_index");
    if (const std::string* v = get("omega_pi_value")) cfg.omega_pi_value = parse_scalar_literal(*v);
    if (const std::string* v = get("max_b")) cfg.max_b = static_cast<unsigned>(parse_u64(*v, "max_b"));
    if (const std::string* v = get("max_degree"))
        cfg.max_degree = static_cast<unsigned>(parse_u64(*v, "max_degree"));
    if (const std::string* v = get("primes")) {
        cfg.primes.clear();
        for (const std::string& item : split_list(*v, "primes"))
            cfg.primes.push_back(parse_u64(item, "primes"));
    }
    if (const std::string* v = get("max_cond"))
        cfg.max_cond = static_cast<unsigned>(parse_u64(*v, "max_cond"));

    validate_config(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

void validate_config(RunConfig& cfg) {
    const auto& names = pipeline_names();
    if (std::find(names.begin(), names.end(), cfg.pipeline) == names.end())
        throw ConfigError("unknown pipeline '" + cfg.pipeline + "'");
    if (cfg.trunc > 64) throw ConfigError("trunc beyond desk-scale bound 64");

    const bool explicit_params = !cfg.alpha.empty() || !cfg.gamma.empty();
    if (cfg.pipeline == "cauchy" || cfg.pipeline == "theorem_main") {
        if (explicit_params && cfg.random_cases > 0)
            throw ConfigError("give either alpha/gamma or random_cases, not both");
        if (!explicit_params && cfg.random_cases == 0)
            throw ConfigError("pipeline needs alpha/gamma lists or random_cases");
        if (cfg.random_cases > 100000) throw ConfigError("random_cases beyond bound 100000");
        if (cfg.max_n == 0 || cfg.max_n > 8 || cfg.max_m == 0 || cfg.max_m > 8)
            throw ConfigError("max_n/max_m must be in 1..8");
    }

    if (cfg.pipeline == "cauchy") {
        if (explicit_params && (cfg.alpha.empty() || cfg.gamma.empty()))
            throw ConfigError("cauchy: both alpha and gamma are required");
        if (cfg.selftest_perturb_degree >= 0 &&
            cfg.selftest_perturb_degree > static_cast<long>(cfg.trunc))
            throw ConfigError("selftest_perturb_degree beyond the truncation degree");
    }

    if (cfg.pipeline == "theorem_main") {
        if (cfg.q < 2 || !is_prime_power(cfg.q))
            throw ConfigError("theorem_main: q must be a prime power >= 2");
        if (cfg.random_cases > 0 && cfg.max_n < 2)
            throw ConfigError("theorem_main: random sweeps need max_n >= 2 (n > m >= 1)");
        if (explicit_params) {
            const unsigned n = static_cast<unsigned>(cfg.alpha.size());
            const unsigned m = static_cast<unsigned>(cfg.gamma.size());
            if (m < 1 || n <= m)
                throw ConfigError("theorem_main: need n > m >= 1 (len(alpha) > len(gamma))");
            const bool gamma_last_zero = cfg.gamma.back().is_zero();
            if (cfg.cond_exp_tau == RunConfig::kDerived)
                cfg.cond_exp_tau = gamma_last_zero ? 1 : 0;
            if (gamma_last_zero && cfg.cond_exp_tau < 1)
                throw ConfigError("theorem_main: ramified tau (gamma_m = 0) needs cond_exp_tau >= 1");
            if (!gamma_last_zero && cfg.cond_exp_tau >= 1)
                throw ConfigError("theorem_main: cond_exp_tau >= 1 requires gamma_m = 0");
            if (cfg.cond_exp_omega > cfg.cond_exp_tau)
                throw ConfigError("theorem_main: central conductor v(c) must be <= v(q)");
            bool alpha_has_zero = false;
            for (const CycScalar& a : cfg.alpha) alpha_has_zero |= a.is_zero();
            if (cfg.cond_exp_pi == RunConfig::kDerived)
                cfg.cond_exp_pi = alpha_has_zero ? 1 : 0;
            if (alpha_has_zero && cfg.cond_exp_pi == 0)
                throw ConfigError("theorem_main: zero alpha parameters need cond_exp_pi >= 1");
            if (cfg.cond_exp_omega >= 1) {
                if (!is_prime(cfg.q))
                    throw ConfigError("theorem_main: a ramified omega needs prime q");
                if (cfg.omega_index < 0)
                    throw ConfigError("theorem_main: cond_exp_omega >= 1 needs omega_index");
                const auto chars =
                    enumerate_characters(ResidueRing(cfg.q, cfg.cond_exp_omega));
                if (cfg.omega_index >= static_cast<long>(chars.size()))
                    throw ConfigError("theorem_main: omega_index beyond the character count");
                if (!chars[static_cast<std::size_t>(cfg.omega_index)].is_primitive())
                    throw ConfigError("theorem_main: omega_index selects a non-primitive character");
            }
        }
    }

    if (cfg.pipeline == "lemma_aux") {
        if (cfg.q < 2 || !is_prime(cfg.q))
            throw ConfigError("lemma_aux: q must be prime (the catalog carries residue characters)");
        if (cfg.max_b < 1 || cfg.max_b > 3)
            throw ConfigError("lemma_aux: max_b must be in 1..3 (documented catalog domain)");
        if (cfg.max_degree < 1 || cfg.max_degree > 4)
            throw ConfigError("lemma_aux: max_degree must be in 1..4 (documented catalog domain)");
        if (cfg.char_values.empty())
            cfg.char_values = {CycScalar(1L), CycScalar(2L), CycScalar(rat(1, 2))};
        for (const CycScalar& u : cfg.char_values)
            if (u.is_zero())
                throw ConfigError("lemma_aux: char_values must be non-zero");
    }

    if (cfg.pipeline == "gauss_suite") {
        if (cfg.primes.empty()) throw ConfigError("gauss_suite: primes must be non-empty");
        for (u64 p : cfg.primes)
            if (!is_prime(p) || p > 13)
                throw ConfigError("gauss_suite: primes must be prime and <= 13");
        if (cfg.max_cond < 1 || cfg.max_cond > 2)
            throw ConfigError("gauss_suite: max_cond must be 1 or 2");
    }
}

}  // namespace rslocal
