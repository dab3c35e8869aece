#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lie {

// All scalar arithmetic in the engine is exact. Rationals are kept in
// lowest terms with positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r))
    throw std::domain_error("expected integer, got " + r.str());
  return numerator(r);
}

inline long long to_ll(const Rat& r) {
  return static_cast<long long>(to_integer(r));
}

// Render as "p/q", plain integer when q == 1.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace lie
