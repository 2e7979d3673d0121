#pragma once

#include <cstdint>

#include "rslocal/cyclotomic.hpp"

namespace rslocal {

/// A CycScalar times a formal half-integer power of q: coeff * q^(halfq/2).
/// q is the residue cardinality fixed for the pipeline run; operands must
/// share it. Multiplication adds grades; addition requires equal grades
/// (except against the zero value). A value with even grade collapses to
/// an honest CycScalar; odd grades never reach a series coefficient.
struct QGraded {
    CycScalar coeff;
    long long halfq = 0;
    unsigned long long q = 0;

    QGraded() = default;
    QGraded(CycScalar c, long long grade, unsigned long long q_val)
        : coeff(std::move(c)), halfq(grade), q(q_val) {}

    bool is_zero() const { return coeff.is_zero(); }
    bool operator==(const QGraded& rhs) const;

    /// coeff * q^(halfq/2); throws InternalInvariantError on odd grade.
    CycScalar collapse() const;
};

QGraded qgraded_mul(const QGraded& a, const QGraded& b);
QGraded qgraded_add(const QGraded& a, const QGraded& b);

}  // namespace rslocal
