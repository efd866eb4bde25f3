#ifndef GRADEX_NUMERIC_HPP
#define GRADEX_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace gradex {

// All ring arithmetic is exact; nothing in the library uses floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace gradex

#endif
