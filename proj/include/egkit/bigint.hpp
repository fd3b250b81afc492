#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace egkit {
using BigInt = boost::multiprecision::cpp_int;
}
