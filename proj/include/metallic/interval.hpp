#pragma once

#include <cstdint>

#include "metallic/quadfield.hpp"

namespace metallic {

// [start, start + gamma^-length_exponent]
struct Interval {
  QuadElement start;
  int length_exponent;

  QuadElement length() const { return gamma_pow(start.field(), -length_exponent); }
  QuadElement end() const { return start + length(); }
};

// Inclusive range of grid-box indices met by one interval.
struct BoxRange {
  std::int64_t first;
  std::int64_t last;
};

}  // namespace metallic
