#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chowflag {

// All counts in this library are exact; they outgrow 64 bits quickly
// (n! already overflows at n = 21).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace chowflag
