#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace projstat {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace projstat
