#ifndef QGP_RATIONAL_HPP
#define QGP_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace qgp {

/// Exact rational arithmetic for polynomial coefficients, energies and costs.
/// int64 components are ample for the coefficient/cost ranges this library
/// produces (dyadic denominators, desk-scale sums).
using Rational = boost::rational<int64_t>;

std::string to_string(const Rational &r);

inline double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double value);

} // namespace qgp

#endif
