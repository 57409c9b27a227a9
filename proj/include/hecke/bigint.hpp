#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline long double to_long_double(const BigInt& v) { return v.convert_to<long double>(); }

}  // namespace hecke
