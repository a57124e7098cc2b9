#pragma once

#include <string>
#include <vector>

#include "qblocks/coord.hpp"
#include "qblocks/oracle.hpp"
#include "qblocks/weight.hpp"

namespace qt {

using namespace qblocks;

inline Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }
inline const Scalar s = Scalar::symbol("s");
inline const Scalar pi = Scalar::symbol("pi");

inline oracle::Rng rng(std::uint64_t seed) { return oracle::Rng(seed); }

}  // namespace qt
