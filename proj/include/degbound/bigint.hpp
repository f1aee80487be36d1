#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace degbound {

// Exact arbitrary-precision counting arithmetic.
using Bigint = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Bigint& x) { return x.str(); }
inline Bigint bigint_from_decimal(const std::string& s) { return Bigint(s); }

}  // namespace degbound
