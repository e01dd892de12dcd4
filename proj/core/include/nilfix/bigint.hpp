#ifndef NILFIX_BIGINT_HPP
#define NILFIX_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace nilfix {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace nilfix

#endif
