#pragma once

#include <ostream>

#include "bethe/big_float.hpp"

namespace bethe {

inline void PrintTo(const BigFloat& x, std::ostream* os) { *os << x.to_string(30); }

}  // namespace bethe
