#pragma once

// The (n, l, s) removal fractal: drop l long and s short tiles from the
// step-n tiling, then re-tile every surviving interval with the same
// relative survivor pattern, recursively.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "metallic/interval.hpp"
#include "metallic/kernels.hpp"
#include "metallic/quadfield.hpp"
#include "metallic/substitution.hpp"
#include "metallic/tiling.hpp"

namespace metallic {

enum class RemovalPolicy {
  kKeepFirst,  // remove the last l long and last s short tiles in word order
  kKeepLast,   // remove the first l long and first s short tiles
  kExplicit,   // remove the listed 0-based word positions
};

const char* to_string(RemovalPolicy policy);
RemovalPolicy parse_policy(const std::string& text);

struct FractalSpec {
  MetallicParams params;
  int n;
  int remove_long;
  int remove_short;
  RemovalPolicy policy = RemovalPolicy::kKeepFirst;
  std::vector<int> indices;  // only for kExplicit

  // Throws kInvalidArgument, kInvalidRemovalCount, kEmptyFractal or
  // kPolicyIndexMismatch with a message naming the offending value.
  void validate() const;

  // Survivor counts N_a' = a_n - l and N_b' = q a_{n-1} - s.
  mpz_class long_survivors() const;
  mpz_class short_survivors() const;
};

struct Survivor {
  TileKind kind;
  QuadElement start;  // relative to [0,1]
  int length_exponent;
  int word_position;
};

std::vector<Survivor> survivors(const FractalSpec& spec);

kernels::Pattern make_pattern(const std::vector<Survivor>& survivors);

struct IntervalCover {
  FractalSpec spec;
  int depth;
  std::vector<Interval> intervals;
};

IntervalCover unit_cover(const FractalSpec& spec);

// Depth k -> k + 1: every interval is replaced by the survivor pattern scaled
// to it and translated to its start.
IntervalCover refine(const IntervalCover& cover);

// k-fold refinement from [0,1]. Throws kCapExceeded when the interval count
// (N_a' + N_b')^k is above `cap`.
IntervalCover cover_at_depth(const FractalSpec& spec, int k, std::uint64_t cap = kDefaultCap);

// Streams the depth-k cover in sorted order without materializing it.
// `visit(index, interval)` is called once per interval.
void for_each_interval(const FractalSpec& spec, int k,
                       const std::function<void(std::uint64_t, const Interval&)>& visit);

// Letters of the survivor chosen at each level on the way to interval `index`.
std::string kind_path(const std::vector<Survivor>& survivors, int depth, std::uint64_t index);

struct Gap {
  QuadElement start;
  QuadElement length;
};

// Open complement of the cover in [0,1]; zero-length gaps are omitted.
std::vector<Gap> gaps(const IntervalCover& cover);

// Interval counts by length exponent. counts[i] intervals have length
// gamma^-(min_exponent + i).
struct ExponentHistogram {
  FractalSpec spec;
  int depth;
  int min_exponent;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

ExponentHistogram histogram(const IntervalCover& cover);

// Histogram of the depth-k cover by enumerating every construction path,
// without computing any endpoints. Works far beyond the materialization cap.
ExponentHistogram cover_histogram(const FractalSpec& spec, int k);

}  // namespace metallic
