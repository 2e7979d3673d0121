#include <mpfr.h>

#include "rslocal/cyclotomic.hpp"

namespace rslocal {

std::complex<double> to_complex(const CycScalar& x, unsigned digits) {
    if (digits == 0) digits = 1;
    if (digits > 10000) digits = 10000;
    const auto prec = static_cast<mpfr_prec_t>(digits * 3.33) + 48;

    mpfr_t two_pi, angle, cos_v, sin_v, coeff, term, re, im;
    mpfr_inits2(prec, two_pi, angle, cos_v, sin_v, coeff, term, re, im, nullptr);
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);

    const unsigned long n = x.order();
    const auto& c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        mpfr_set_q(coeff, c[k].get_mpq_t(), MPFR_RNDN);
        if (k == 0) {
            mpfr_add(re, re, coeff, MPFR_RNDN);
            continue;
        }
        mpfr_mul_ui(angle, two_pi, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_div_ui(angle, angle, n, MPFR_RNDN);
        mpfr_sin_cos(sin_v, cos_v, angle, MPFR_RNDN);
        mpfr_mul(term, coeff, cos_v, MPFR_RNDN);
        mpfr_add(re, re, term, MPFR_RNDN);
        mpfr_mul(term, coeff, sin_v, MPFR_RNDN);
        mpfr_add(im, im, term, MPFR_RNDN);
    }

    std::complex<double> result(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(two_pi, angle, cos_v, sin_v, coeff, term, re, im, nullptr);
    return result;
}

}  // namespace rslocal
