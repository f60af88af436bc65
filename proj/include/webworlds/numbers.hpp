#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "webworlds/errors.hpp"

namespace webworlds {

// all arithmetic is exact; no floating point anywhere in the library
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int parse_int(const std::string& s);

// accepts "num" or "num/den", den nonzero
Rat parse_rat(const std::string& s);

std::string int_string(const Int& v);

// canonical reduced "num/den" (always carries the denominator, e.g. "-1/2", "0/1")
std::string rat_string(const Rat& v);

// compact form for human-facing output: "3", "-1/2"
std::string rat_pretty(const Rat& v);

} // namespace webworlds
