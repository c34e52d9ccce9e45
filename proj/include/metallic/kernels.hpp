#pragma once

// Data-parallel inner loops of the cover construction and the estimators.
// Each kernel has a serial reference and an OpenMP version; the two must
// agree exactly (integer results) or bitwise (floating-point results), which
// the kernel tests check.

#include <cstdint>
#include <span>
#include <vector>

#include "metallic/bigfloat.hpp"
#include "metallic/interval.hpp"
#include "metallic/quadfield.hpp"

namespace metallic::kernels {

// Relative survivor layout in [0,1] used to re-tile every parent interval.
struct Pattern {
  std::vector<QuadElement> offsets;
  std::vector<int> exponents;

  std::size_t size() const { return exponents.size(); }
};

// Cached gamma^-m for 0 <= m <= max_exponent.
class PowerTable {
 public:
  PowerTable(Field field, int max_exponent);

  const QuadElement& inverse_power(int m) const { return powers_.at(static_cast<std::size_t>(m)); }
  int max_exponent() const { return static_cast<int>(powers_.size()) - 1; }

 private:
  std::vector<QuadElement> powers_;
};

// Float endpoints of one interval.
struct Endpoints {
  BigFloat start;
  BigFloat end;
};

// Survivor layout in floating point, for descending toward the limit set.
struct FloatPattern {
  std::vector<BigFloat> offsets;
  std::vector<int> exponents;
};

// Limits of a descent toward the limit set. Nodes deeper than max_depth are
// leaves even when they straddle a box boundary; more than `budget` visited
// nodes raises kCapExceeded.
struct LimitQuery {
  BigFloat gamma;
  BigFloat scale;  // boxes are [j / scale, (j + 1) / scale)
  int max_depth;
  std::uint64_t budget;
};

// Pairwise summation over fixed blocks of this many terms, so the rounding
// pattern does not depend on the thread count.
inline constexpr std::size_t kSumBlock = 1024;

namespace serial {

// Children are emitted parent by parent, survivors left to right; output is
// sorted when the input is.
std::vector<Interval> refine(std::span<const Interval> parents, const Pattern& pattern,
                             const PowerTable& powers);

// Enumerates every depth-`depth` path through the pattern and histograms the
// summed exponent; result[m] counts intervals of length gamma^-m.
std::vector<std::uint64_t> exponent_histogram(std::span<const int> exponents, int depth);

std::vector<Endpoints> endpoints(std::span<const Interval> intervals, const BigFloat& gamma,
                                 mpfr_prec_t bits);

// Box j is [j/scale, (j+1)/scale). Values within 2^-96 of an integer are
// snapped to it before flooring, so exact ties are not lost to rounding.
std::vector<BoxRange> box_ranges(std::span<const Endpoints> endpoints, const BigFloat& scale);

// Distinct boxes met by ranges sorted by position (as produced from sorted,
// disjoint intervals).
std::uint64_t count_boxes(std::span<const BoxRange> ranges);

double pairwise_sum(std::span<const double> terms);

// Box ranges met by the limit set, left to right. A node whose interval lies
// in a single box is a leaf, since every interval contains limit points.
std::vector<BoxRange> limit_box_ranges(const FloatPattern& pattern, const LimitQuery& query);

}  // namespace serial

namespace parallel {

std::vector<Interval> refine(std::span<const Interval> parents, const Pattern& pattern,
                             const PowerTable& powers);
std::vector<std::uint64_t> exponent_histogram(std::span<const int> exponents, int depth);
std::vector<Endpoints> endpoints(std::span<const Interval> intervals, const BigFloat& gamma,
                                 mpfr_prec_t bits);
std::vector<BoxRange> box_ranges(std::span<const Endpoints> endpoints, const BigFloat& scale);
std::uint64_t count_boxes(std::span<const BoxRange> ranges);
double pairwise_sum(std::span<const double> terms);

std::vector<BoxRange> limit_box_ranges(const FloatPattern& pattern, const LimitQuery& query);

}  // namespace parallel

// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace metallic::kernels
