#pragma once

// Numerical cross-checks of the analytic dimension computed from the
// construction covers themselves.

#include <cstdint>
#include <vector>

#include "metallic/fractal.hpp"

namespace metallic {

// Sum over the depth-k cover of |I|^t, and the per-level factor
// Y(t) = N_a' gamma^-(n-1)t + N_b' gamma^-nt. The cover is a k-fold product,
// so value == y^k.
struct HausdorffSum {
  int depth;
  double t;
  double value;
  double y;
};

HausdorffSum hausdorff_sum(const ExponentHistogram& hist, double t);
HausdorffSum hausdorff_sum(const IntervalCover& cover, double t);

// Per-interval form of the same sum: one term per interval, added with the
// fixed-order pairwise reduction. Kept as an independent route.
double hausdorff_sum_direct(const IntervalCover& cover, double t);

// The t in [0,1] where the cover sum equals 1, by bisection to 1e-12.
// A cover whose pattern keeps a single interval gives 0.
double empirical_dimension(const ExponentHistogram& hist);
double empirical_dimension(const IntervalCover& cover);

// Grid boxes [j eps, (j+1) eps) met by the cover.
std::uint64_t box_count(const IntervalCover& cover, double eps);
// Same with eps = gamma^-exponent exactly.
std::uint64_t box_count_scaled(const IntervalCover& cover, int exponent);

struct BoxFitPoint {
  int k;
  double log_inv_eps;
  double log_count;
  std::uint64_t count;
};

struct BoxFit {
  double slope;
  double intercept;
  // Residual standard error sqrt(SSR / (N - 2)) of the least-squares line.
  double residual;
  double rms_residual;
  double slope_stderr;
  int max_depth;  // descent limit at the finest scale
  std::vector<BoxFitPoint> points;
};

// Levels a descent may go past the depth where intervals first fit in a box.
inline constexpr int kLimitExtraDepth = 32;

// Grid boxes of width gamma^-exponent met by the limit set itself, found by
// descending only into intervals that straddle a box boundary. `cap` bounds
// the visited nodes.
std::uint64_t limit_box_count(const FractalSpec& spec, int exponent,
                              std::uint64_t cap = kDefaultCap);

// Least-squares slope of log N(eps_k) against log(1/eps_k) for
// eps_k = gamma^-(n k), k = 2..k_max, with N from limit_box_count.
BoxFit box_dimension(const FractalSpec& spec, int k_max, std::uint64_t cap = kDefaultCap);

}  // namespace metallic
