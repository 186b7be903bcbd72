#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hocolim {

/// Arbitrary-precision signed integer used for weights, ranks and every
/// quantity that is reported as an exact value.
using Integer = boost::multiprecision::cpp_int;

}  // namespace hocolim
