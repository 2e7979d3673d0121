#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rslocal/config.hpp"
#include "rslocal/errors.hpp"
#include "rslocal/pipelines.hpp"

using namespace rslocal;

namespace {

RunConfig parse(const std::string& text) { return parse_config_text(text, "test"); }

std::string record_for(const Report& rep, const std::string& name) {
    for (const CheckRecord& c : rep.checks)
        if (c.name == name) return c.verdict + "|" + c.got;
    return "<missing>";
}

}  // namespace

TEST_CASE("config parsing: typed values and validation") {
    const RunConfig cfg = parse(
        "# comment\n"
        "pipeline = cauchy\n"
        "trunc = 9\n"
        "seed = 7\n"
        "alpha = [2, -1/3, 1/2*zeta(8)^3]\n"
        "gamma = [zeta(4), 0]\n");
    CHECK(cfg.trunc == 9);
    CHECK(cfg.seed == 7);
    CHECK(cfg.alpha.size() == 3);
    CHECK(cfg.alpha[1] == CycScalar(rat(-1, 3)));
    CHECK(cfg.alpha[2] == CycScalar(rat(1, 2)) * CycScalar::root_of_unity(8, 3));
    CHECK(cfg.gamma[0] == CycScalar::root_of_unity(4, 1));

    CHECK_THROWS_AS(parse("pipeline = nope\n"), ConfigError);
    CHECK_THROWS_AS(parse("pipeline = cauchy\nalpha = [zeta(400)]\ngamma = [1]\n"), ConfigError);
    CHECK_THROWS_AS(parse("pipeline = cauchy\nalpha = [1]\ngamma = [1]\nbogus = 3\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse("pipeline = cauchy\nalpha = [1]\ngamma = [oops]\n"), ConfigError);
    CHECK_THROWS_AS(parse("pipeline = cauchy\nalpha = [1]\n"), ConfigError);
    CHECK_THROWS_AS(parse("pipeline = cauchy\nalpha = [1]\ngamma = [1]\nalpha = [2]\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse("pipeline = theorem_main\nq = 6\nalpha = [1,1]\ngamma = [1]\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse("pipeline = theorem_main\nq = 3\nalpha = [1]\ngamma = [1]\n"),
                    ConfigError);
}

TEST_CASE("run_cauchy explicit case and self-test perturbation") {
    const RunConfig good = parse("pipeline = cauchy\ntrunc = 5\nalpha = [1]\ngamma = [1]\n");
    const Report rep = run_cauchy(good);
    CHECK(rep.overall_pass());
    CHECK(rep.checks.size() == 6);
    for (const CheckRecord& c : rep.checks) CHECK(c.got == "1");  // geometric series of 1*1

    const RunConfig bad = parse(
        "pipeline = cauchy\ntrunc = 5\nalpha = [1]\ngamma = [1]\nselftest_perturb_degree = 3\n");
    const Report broken = run_cauchy(bad);
    CHECK_FALSE(broken.overall_pass());
    CHECK(record_for(broken, "coeff-deg-3") == "fail|2");
    CHECK(record_for(broken, "coeff-deg-2") == "pass|1");
}

TEST_CASE("run_cauchy random sweep") {
    const RunConfig cfg = parse("pipeline = cauchy\ntrunc = 10\nrandom_cases = 12\nseed = 5\n");
    const Report rep = run_cauchy(cfg);
    CHECK(rep.overall_pass());
    CHECK(rep.checks.size() == 12);
}

TEST_CASE("run_cauchy with root-of-unity parameters") {
    const RunConfig cfg = parse(
        "pipeline = cauchy\ntrunc = 6\nalpha = [zeta(4), 1]\ngamma = [1/2, zeta(3)^2]\n");
    const Report rep = run_cauchy(cfg);
    CHECK(rep.overall_pass());
}

TEST_CASE("run_theorem_main ramified example with the averaging constant") {
    const RunConfig cfg = parse(
        "pipeline = theorem_main\nq = 3\ntrunc = 6\nalpha = [2, 3]\ngamma = [0]\n"
        "cond_exp_tau = 1\ncond_exp_omega = 1\nomega_index = 1\n");
    const Report rep = run_theorem_main(cfg);
    CHECK(rep.overall_pass());
    // Both series are the constant 1 and c = (zeta_3 - zeta_3^2)/2, i.e. 1/2 + zeta(3).
    CHECK(record_for(rep, "coeff-deg-0") == "pass|1");
    CHECK(record_for(rep, "coeff-deg-4") == "pass|0");
    const std::string c_rec = record_for(rep, "constant-c");
    CHECK(c_rec.substr(0, 5) == "pass|");
    CHECK(c_rec.find("1/2 + zeta(3)") != std::string::npos);
}

TEST_CASE("run_theorem_main unramified branch and prime-power skip") {
    const RunConfig cfg = parse(
        "pipeline = theorem_main\nq = 9\ntrunc = 8\nalpha = [1, 2, 3]\ngamma = [1, 1/2]\n");
    const Report rep = run_theorem_main(cfg);
    CHECK(rep.overall_pass());
    CHECK(rep.count("skip") == 0);  // unramified: no constant requested

    const RunConfig ram9 = parse(
        "pipeline = theorem_main\nq = 9\ntrunc = 4\nalpha = [1, 2]\ngamma = [0]\n"
        "cond_exp_tau = 1\n");
    const Report rep9 = run_theorem_main(ram9);
    CHECK(rep9.overall_pass());
    CHECK(rep9.count("skip") == 1);  // non-prime q: constant-c recorded as a skip

    const RunConfig sweep = parse(
        "pipeline = theorem_main\nq = 4\ntrunc = 10\nrandom_cases = 10\nseed = 11\n");
    const Report reps = run_theorem_main(sweep);
    CHECK(reps.overall_pass());
    CHECK(reps.checks.size() == 10);
}

TEST_CASE("run_theorem_main matches run_cauchy when both sides are unramified") {
    const RunConfig tm = parse(
        "pipeline = theorem_main\nq = 5\ntrunc = 8\nalpha = [2, 1/3]\ngamma = [4]\n");
    const RunConfig cs = parse("pipeline = cauchy\ntrunc = 8\nalpha = [2, 1/3]\ngamma = [4]\n");
    const Report a = run_theorem_main(tm);
    const Report b = run_cauchy(cs);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].got == b.checks[i].got);
        CHECK(a.checks[i].expected == b.checks[i].expected);
        CHECK(a.checks[i].verdict == "pass");
    }
}

TEST_CASE("run_lemma_aux sweep and pinned case") {
    const RunConfig cfg = parse("pipeline = lemma_aux\nq = 3\nchar_values = [1, 2]\n");
    const Report rep = run_lemma_aux(cfg);
    CHECK(rep.overall_pass());
    CHECK(record_for(rep, "pinned-s2-s2") == "pass|1 + -1/3*X");
    CHECK(record_for(rep, "corollary-sweep").substr(0, 5) == "pass|");
    // A ramified character on either side forces P = 1.
    CHECK(record_for(rep, "P[chi_ram ; chi[1]]") == "pass|1");
    CHECK(record_for(rep, "P[s2(chi[1]) ; chi_ram]") == "pass|1");
    CHECK(record_for(rep, "P[s2(chi[1]) ; s2(chi[2])]").substr(0, 5) == "pass|");
}

TEST_CASE("run_gauss_suite at p = 3") {
    const RunConfig cfg = parse("pipeline = gauss_suite\nprimes = [3]\nmax_cond = 1\n");
    const Report rep = run_gauss_suite(cfg);
    CHECK(rep.overall_pass());
    CHECK(record_for(rep, "vanishing-p3-c1-chi1-v1").substr(0, 5) == "pass|");
    CHECK(record_for(rep, "k0-index-m2-p3") == "pass|4");
    CHECK(record_for(rep, "k0-index-m3-p2") == "pass|7");
}

TEST_CASE("reports are byte-stable for identical config and seed") {
    const RunConfig cfg = parse("pipeline = cauchy\ntrunc = 8\nrandom_cases = 6\nseed = 99\n");
    const std::string a = run_cauchy(cfg).render();
    const std::string b = run_cauchy(cfg).render();
    CHECK(a == b);
    CHECK(a.find("\"seed\":99") != std::string::npos);

    const RunConfig other = parse("pipeline = cauchy\ntrunc = 8\nrandom_cases = 6\nseed = 100\n");
    CHECK(run_cauchy(other).render() != a);
}

TEST_CASE("report structure") {
    const RunConfig cfg = parse("pipeline = cauchy\ntrunc = 2\nalpha = [1]\ngamma = [0]\n");
    const Report rep = run_pipeline(cfg);
    const std::string text = rep.render();
    std::istringstream lines(text);
    std::string first;
    std::getline(lines, first);
    CHECK(first.find("\"type\":\"header\"") != std::string::npos);
    CHECK(first.find(kReportSchema) != std::string::npos);
    CHECK(text.find("# overall: PASS") != std::string::npos);
    CHECK(rep.count("pass") == rep.checks.size());
}

#ifdef VERIFY_BIN
namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(VERIFY_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/rslocal-test-" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("CLI exit codes") {
    CHECK(run_cli("--version") == 0);
    CHECK(run_cli("list-pipelines") == 0);

    const std::string good =
        write_temp("good.cfg", "pipeline = cauchy\ntrunc = 4\nalpha = [2]\ngamma = [3]\n");
    CHECK(run_cli("cauchy --config " + good) == 0);

    const std::string failing = write_temp(
        "fail.cfg",
        "pipeline = cauchy\ntrunc = 4\nalpha = [2]\ngamma = [3]\nselftest_perturb_degree = 1\n");
    CHECK(run_cli("cauchy --config " + failing) == 3);

    const std::string broken = write_temp("broken.cfg", "pipeline = cauchy\nwhat = ever\n");
    CHECK(run_cli("cauchy --config " + broken) == 2);
    CHECK(run_cli("cauchy --config /nonexistent/path.cfg") == 2);
    CHECK(run_cli("gauss_suite --config " + good) == 2);  // pipeline mismatch

    // Seed override changes the random sweep; trunc override is re-validated.
    const std::string sweep = write_temp(
        "sweep.cfg", "pipeline = cauchy\ntrunc = 6\nrandom_cases = 3\nseed = 1\n");
    CHECK(run_cli("cauchy --config " + sweep + " --seed 2 --trunc 5") == 0);
    CHECK(run_cli("cauchy --config " + sweep + " --trunc 100") == 2);

    // The config's own report key is honored when --out is absent.
    const std::string with_report = write_temp(
        "report.cfg",
        "pipeline = cauchy\ntrunc = 4\nalpha = [2]\ngamma = [3]\n"
        "report = /tmp/rslocal-test-from-key.report\n");
    CHECK(run_cli("cauchy --config " + with_report) == 0);
    std::ifstream written("/tmp/rslocal-test-from-key.report");
    CHECK(written.good());
}

TEST_CASE("CLI writes byte-identical reports for identical runs") {
    const std::string cfg = write_temp(
        "det.cfg", "pipeline = gauss_suite\nprimes = [3]\nmax_cond = 1\n");
    CHECK(run_cli("gauss_suite --config " + cfg + " --out /tmp/rslocal-det-1.report") == 0);
    CHECK(run_cli("gauss_suite --config " + cfg + " --out /tmp/rslocal-det-2.report") == 0);
    std::ifstream f1("/tmp/rslocal-det-1.report"), f2("/tmp/rslocal-det-2.report");
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
}
#endif
