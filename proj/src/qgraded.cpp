#include "rslocal/qgraded.hpp"

#include <stdexcept>

#include "rslocal/errors.hpp"

namespace rslocal {

namespace {

void check_same_q(const QGraded& a, const QGraded& b) {
    if (a.q != b.q)
        throw std::invalid_argument("QGraded operands belong to different residue cardinalities");
}

}  // namespace

bool QGraded::operator==(const QGraded& rhs) const {
    if (is_zero() && rhs.is_zero()) return true;
    return q == rhs.q && halfq == rhs.halfq && coeff == rhs.coeff;
}

CycScalar QGraded::collapse() const {
    if (coeff.is_zero()) return CycScalar();
    if (halfq % 2 != 0)
        throw InternalInvariantError("QGraded collapse on odd half-power of q");
    return coeff * CycScalar(rat_pow(q, halfq / 2));
}

QGraded qgraded_mul(const QGraded& a, const QGraded& b) {
    check_same_q(a, b);
    return QGraded(a.coeff * b.coeff, a.halfq + b.halfq, a.q);
}

QGraded qgraded_add(const QGraded& a, const QGraded& b) {
    // The zero value is grade-agnostic.
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    check_same_q(a, b);
    if (a.halfq != b.halfq)
        throw std::invalid_argument("QGraded addition with mixed q-grades");
    return QGraded(a.coeff + b.coeff, a.halfq, a.q);
}

}  // namespace rslocal
