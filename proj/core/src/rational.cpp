#include "qgp/rational.hpp"

#include "qgp/errors.hpp"

#include <cmath>

namespace qgp {

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        fail(ErrorCode::InvalidArgument, "cost must be finite");
    }
    if (value == 0.0) {
        return Rational(0);
    }
    int exp = 0;
    double mantissa = std::frexp(value, &exp); // value = mantissa * 2^exp, |mantissa| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    int64_t numerator = static_cast<int64_t>(std::ldexp(mantissa, 53));
    exp -= 53;
    while (numerator != 0 && (numerator & 1) == 0) {
        numerator >>= 1;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 9) {
            fail(ErrorCode::InvalidArgument, "cost magnitude too large for exact arithmetic");
        }
        return Rational(numerator << exp);
    }
    if (exp < -62) {
        fail(ErrorCode::InvalidArgument, "cost requires too fine a dyadic denominator");
    }
    return Rational(numerator, int64_t(1) << -exp);
}

} // namespace qgp
