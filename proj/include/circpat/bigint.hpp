#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace circpat {

// Counts grow like 2^n and F_{2n}; everything that returns a count uses this.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace circpat
