// rational.hpp
//
// Exact rational scalar used throughout the root-system layer.  All weight
// and root bookkeeping is done over Q; nothing in that layer may fall back
// to floating point.

#ifndef ORBITQ_RATIONAL_HPP
#define ORBITQ_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace orbitq {

using Rat = boost::rational<std::int64_t>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

}  // namespace orbitq

#endif
