#include <doctest.h>

#include <complex>
#include <numeric>

#include "rslocal/cyclotomic.hpp"
#include "rslocal/errors.hpp"
#include "rslocal/qgraded.hpp"
#include "test_support.hpp"

using namespace rslocal;

namespace {

// Multiplicative order by direct powering (test oracle).
long mult_order(const CycScalar& x, long cap = 400) {
    CycScalar acc(1L);
    for (long t = 1; t <= cap; ++t) {
        acc *= x;
        if (acc.is_one()) return t;
    }
    return -1;
}

}  // namespace

TEST_CASE("root_of_unity basics") {
    CHECK(CycScalar::root_of_unity(1, 0).is_one());
    CHECK(CycScalar::root_of_unity(4, 2) == CycScalar(-1L));
    CHECK(CycScalar::root_of_unity(3, 1) + CycScalar::root_of_unity(3, 2) == CycScalar(-1L));
    CHECK_THROWS_AS(CycScalar::root_of_unity(0, 1), std::invalid_argument);
}

TEST_CASE("root_of_unity multiplicative order is N/gcd(N,k)") {
    for (unsigned long n = 1; n <= 16; ++n)
        for (long long k = 0; k < static_cast<long long>(n); ++k) {
            const long expected =
                static_cast<long>(n / std::gcd(n, static_cast<unsigned long>(k)));
            CHECK(mult_order(CycScalar::root_of_unity(n, k)) == expected);
        }
}

TEST_CASE("canonical form: zeta_N^N = 1 and commutativity") {
    for (unsigned long n = 1; n <= 24; ++n)
        CHECK(CycScalar::root_of_unity(n, static_cast<long long>(n)).is_one());

    testsupport::Values vals(11);
    for (int i = 0; i < 30; ++i) {
        const CycScalar x = vals.cyclotomic(), y = vals.cyclotomic();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("canonical form minimizes the order") {
    CHECK(CycScalar::root_of_unity(6, 3).order() == 1);   // -1
    CHECK(CycScalar::root_of_unity(6, 1).order() == 3);   // Q(zeta_6) = Q(zeta_3)
    CHECK(CycScalar::root_of_unity(12, 3).order() == 4);  // i
    const CycScalar z5 = CycScalar::root_of_unity(5, 1);
    CHECK((z5 + CycScalar(1L) - z5).order() == 1);
}

TEST_CASE("field axioms on randomized triples") {
    testsupport::Values vals(17);
    for (int i = 0; i < 25; ++i) {
        const CycScalar a = vals.cyclotomic(), b = vals.cyclotomic(), c = vals.cyclotomic();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK(a / a == CycScalar(1L));
        }
    }
    CHECK_THROWS_AS(CycScalar().inverse(), std::domain_error);
}

TEST_CASE("conjugation and powers") {
    const CycScalar i4 = CycScalar::root_of_unity(4, 1);
    CHECK(i4.conjugate() == CycScalar::root_of_unity(4, 3));
    CHECK((i4 * i4.conjugate()).is_one());
    CHECK(i4.pow(-1) == i4.conjugate());
    CHECK(i4.pow(0).is_one());
    testsupport::Values vals(23);
    for (int i = 0; i < 10; ++i) {
        const CycScalar x = vals.cyclotomic();
        CHECK(x.conjugate().conjugate() == x);
        CHECK(x.pow(3) == x * x * x);
    }
}

TEST_CASE("to_complex embedding") {
    const auto one = to_complex(CycScalar(1L), 15);
    CHECK(std::abs(one - std::complex<double>(1.0, 0.0)) < 1e-12);

    const auto i = to_complex(CycScalar::root_of_unity(4, 1), 15);
    CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) < 1e-10);

    const CycScalar root3 =
        CycScalar::root_of_unity(3, 1) - CycScalar::root_of_unity(3, 2);  // i sqrt(3)
    const auto z = to_complex(root3, 15);
    CHECK(std::abs(z.real()) < 1e-9);
    CHECK(std::abs(z.imag() - 1.7320508075688772) < 1e-9);
}

TEST_CASE("to_complex: 30-digit and 15-digit evaluations agree") {
    testsupport::Values vals(31);
    for (int i = 0; i < 20; ++i) {
        const CycScalar x = vals.cyclotomic();
        const auto lo = to_complex(x, 15);
        const auto hi = to_complex(x, 30);
        CHECK(std::abs(lo - hi) < 1e-14);
    }
}

TEST_CASE("scalar text form") {
    CHECK(CycScalar(rat(-3, 4)).to_string() == "-3/4");
    CHECK(CycScalar::root_of_unity(8, 3).to_string() == "zeta(8)^3");
    CHECK((CycScalar(2L) * CycScalar::root_of_unity(8, 1)).to_string() == "2*zeta(8)");
    CHECK(CycScalar().to_string() == "0");
}

TEST_CASE("QGraded multiplication adds grades") {
    const QGraded a(CycScalar(1L), 1, 9);
    CHECK(qgraded_mul(a, a) == QGraded(CycScalar(1L), 2, 9));
    CHECK(qgraded_mul(a, a).collapse() == CycScalar(9L));

    const QGraded identity(CycScalar(1L), 0, 9);
    const QGraded x(CycScalar(rat(5, 7)), -3, 9);
    CHECK(qgraded_mul(identity, x) == x);

    const QGraded b(CycScalar(2L), -1, 9), c(CycScalar(3L), 3, 9);
    const QGraded bc = qgraded_mul(b, c);
    CHECK(bc == QGraded(CycScalar(6L), 2, 9));
    CHECK(bc.collapse() == CycScalar(54L));
}

TEST_CASE("QGraded addition requires matching grades, zero is agnostic") {
    const QGraded a(CycScalar(1L), 2, 4), b(CycScalar(2L), 2, 4);
    CHECK(qgraded_add(a, b) == QGraded(CycScalar(3L), 2, 4));
    const QGraded mixed(CycScalar(1L), 1, 4);
    CHECK_THROWS_AS(qgraded_add(a, mixed), std::invalid_argument);
    const QGraded zero(CycScalar(), 7, 4);
    CHECK(qgraded_add(zero, a) == a);

    CHECK_THROWS_AS(QGraded(CycScalar(1L), 1, 4).collapse(), InternalInvariantError);
    CHECK(QGraded(CycScalar(5L), -2, 5).collapse() == CycScalar(1L));  // 5 * q^-1 at q = 5
    const QGraded other_q(CycScalar(1L), 2, 5);
    CHECK_THROWS_AS(qgraded_mul(a, other_q), std::invalid_argument);
}
