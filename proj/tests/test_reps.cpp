#include <doctest.h>

#include "rslocal/errors.hpp"
#include "rslocal/reps.hpp"
#include "rslocal/whittaker.hpp"
#include "test_support.hpp"

using namespace rslocal;

namespace {

constexpr u64 kQ = 3;

RepDescriptor unram_char(long v) { return make_character(CycScalar(v)); }

RepDescriptor ram_char(u64 p = kQ) {
    const auto chars = enumerate_characters(ResidueRing(p, 1));
    return make_character(CycScalar(1L), chars[1]);
}

}  // namespace

TEST_CASE("make_character") {
    const RepDescriptor triv = unram_char(1);
    CHECK(triv.degree() == 1);
    CHECK(triv.params() == std::vector<CycScalar>{CycScalar(1L)});
    CHECK(triv.cond_exp() == 0);

    const RepDescriptor ram = ram_char();
    CHECK(ram.params() == std::vector<CycScalar>{CycScalar()});
    CHECK(ram.cond_exp() == 1);
    CHECK(ram.central().cond_exp == 1);
    CHECK(ram.central().finite_part.has_value());

    const CycScalar qinv(rat(1, 3));
    CHECK(make_character(qinv).params() == std::vector<CycScalar>{qinv});
}

TEST_CASE("descriptor invariants are enforced") {
    CHECK_THROWS_AS(RepDescriptor(2, {CycScalar(1L)}, 0), std::invalid_argument);
    CHECK_THROWS_AS(RepDescriptor(2, {CycScalar(1L), CycScalar()}, 0), std::invalid_argument);
    CentralCharDescriptor too_big;
    too_big.cond_exp = 2;
    too_big.finite_part = enumerate_characters(ResidueRing(3, 2))[1];
    CHECK_THROWS_AS(RepDescriptor(1, {CycScalar()}, 1, too_big), std::invalid_argument);
    CentralCharDescriptor missing_finite;
    missing_finite.cond_exp = 1;
    CHECK_THROWS_AS(RepDescriptor(1, {CycScalar()}, 1, missing_finite), std::invalid_argument);
}

TEST_CASE("langlands_sum concatenates and multiplies") {
    const RepDescriptor a = langlands_sum(unram_char(2), unram_char(1));
    CHECK(a.degree() == 2);
    CHECK(a.params() == std::vector<CycScalar>{CycScalar(2L), CycScalar(1L)});
    CHECK(a.cond_exp() == 0);
    CHECK(a.central().unram_value == CycScalar(2L));

    const RepDescriptor b = langlands_sum(a, ram_char());
    CHECK(b.degree() == 3);
    CHECK(b.cond_exp() == 1);
    CHECK(b.central().cond_exp == 1);

    // Two quadratic finite parts multiply to the trivial one.
    const RepDescriptor c = langlands_sum(ram_char(), ram_char());
    CHECK(c.central().cond_exp == 0);
    CHECK_FALSE(c.central().finite_part.has_value());
}

TEST_CASE("sigma_b") {
    const RepDescriptor seg = sigma_b(unram_char(5), 2, kQ);
    CHECK(seg.degree() == 2);
    CHECK(seg.params() == std::vector<CycScalar>{CycScalar(rat(5, 3)), CycScalar()});
    CHECK(seg.cond_exp() == 1);

    const RepDescriptor sc(2, {CycScalar(), CycScalar()}, 2);
    const RepDescriptor seg3 = sigma_b(sc, 3, kQ);
    CHECK(seg3.degree() == 6);
    for (const CycScalar& p : seg3.params()) CHECK(p.is_zero());

    CHECK(sigma_b(unram_char(7), 1, kQ) == unram_char(7));
    CHECK_THROWS_AS(sigma_b(unram_char(1), 0, kQ), std::invalid_argument);
}

TEST_CASE("twist_unramified") {
    const RepDescriptor a(2, {CycScalar(2L), CycScalar()}, 1);
    CHECK(twist_unramified(a, CycScalar(1L)) == a);
    const RepDescriptor t = twist_unramified(a, CycScalar(rat(1, 3)));
    CHECK(t.params() == std::vector<CycScalar>{CycScalar(rat(2, 3)), CycScalar()});
    CHECK(t.cond_exp() == 1);
    CHECK_THROWS_AS(twist_unramified(a, CycScalar()), std::invalid_argument);
}

TEST_CASE("twist by q^-k shifts the factor series") {
    testsupport::Values vals(73);
    for (int t = 0; t < 6; ++t) {
        const auto params = vals.tuple(1 + vals.below(3), false);
        const RepDescriptor a(static_cast<unsigned>(params.size()), params, 0);
        const unsigned k = 1 + static_cast<unsigned>(vals.below(2));
        const CycScalar qk(rat_pow(kQ, -static_cast<long long>(k)));
        const XSeries twisted =
            series_of(lfactor_from_params(twist_unramified(a, qk).params()), 8);
        const XSeries plain = series_of(lfactor_from_params(a.params()), 8);
        for (unsigned j = 0; j <= 8; ++j)
            CHECK(twisted.coeff(j) == plain.coeff(j) * qk.pow(j));
    }
}

TEST_CASE("boxtimes_esi closed forms") {
    // sigma_2 x sigma_2 over unramified characters u, v.
    const EsiComponent s2u = make_esi(unram_char(1), 2, kQ);
    const XRational box = boxtimes_esi(s2u, s2u, kQ);
    const XPoly f1(std::vector<CycScalar>{CycScalar(1L), CycScalar(-rat(1, 3))});
    const XPoly f2(std::vector<CycScalar>{CycScalar(1L), CycScalar(-rat(1, 9))});
    CHECK(box == XRational(XPoly::one(), f1 * f2));

    // Supercuspidal stand-in: empty product on either side.
    const RepDescriptor sc(2, {CycScalar(), CycScalar()}, 2);
    CHECK(boxtimes_esi(make_esi(sc, 1, kQ), s2u, kQ) == XRational::one());
    CHECK(boxtimes_esi(s2u, make_esi(sc, 1, kQ), kQ) == XRational::one());

    // m > n branch: chi_1 against sigma_2(chi_2).
    const EsiComponent chi1 = make_esi(unram_char(1), 1, kQ);
    CHECK(boxtimes_esi(chi1, s2u, kQ) == XRational(XPoly::one(), f1));

    // tau with a non-trivial factor but not an unramified-character segment.
    const RepDescriptor bad(2, {CycScalar(1L), CycScalar(1L)}, 1);
    CHECK_THROWS_AS(boxtimes_esi(s2u, EsiComponent{bad, bad, 1}, kQ), UnsupportedEsiPairError);
}

TEST_CASE("correction_polynomial") {
    const std::vector<EsiComponent> s2{make_esi(unram_char(1), 2, kQ)};
    const XPoly p = correction_polynomial(s2, s2, kQ);
    CHECK(p == XPoly(std::vector<CycScalar>{CycScalar(1L), CycScalar(-rat(1, 3))}));

    // All-unramified-character pairs: P = 1.
    const std::vector<EsiComponent> chars{make_esi(unram_char(2), 1, kQ),
                                          make_esi(unram_char(1), 1, kQ)};
    CHECK(correction_polynomial(chars, chars, kQ) == XPoly::one());

    // Ramified supercuspidal stand-in on the tau side: both factors 1, P = 1.
    const RepDescriptor sc(2, {CycScalar(), CycScalar()}, 2);
    const std::vector<EsiComponent> sc_tau{make_esi(sc, 1, kQ)};
    CHECK(correction_polynomial(s2, sc_tau, kQ) == XPoly::one());
    CHECK(naive_rs_lfactor(s2[0].rep, sc_tau[0].rep) == XRational::one());
}

TEST_CASE("naive factor is bi-additive over Langlands sums") {
    testsupport::Values vals(79);
    for (int t = 0; t < 6; ++t) {
        const auto pa = vals.tuple(1 + vals.below(2), false);
        const auto pb = vals.tuple(1 + vals.below(2), false);
        const auto pt = vals.tuple(1 + vals.below(2), false);
        const RepDescriptor a(static_cast<unsigned>(pa.size()), pa, 0);
        const RepDescriptor b(static_cast<unsigned>(pb.size()), pb, 0);
        const RepDescriptor tau(static_cast<unsigned>(pt.size()), pt, 0);
        CHECK(naive_rs_lfactor(langlands_sum(a, b), tau) ==
              naive_rs_lfactor(a, tau) * naive_rs_lfactor(b, tau));
        CHECK(naive_rs_lfactor(tau, langlands_sum(a, b)) ==
              naive_rs_lfactor(tau, a) * naive_rs_lfactor(tau, b));
    }
}
