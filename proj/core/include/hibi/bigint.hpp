#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hibi {

// Extension and chain counts overflow 64 bits quickly; keep them exact.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace hibi
