#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace cocycle {

using Rational = boost::rational<int64_t>;

}  // namespace cocycle
