#include "metallic/estimate.hpp"

#include <cmath>

#include "metallic/errors.hpp"

namespace metallic {

namespace {

constexpr mpfr_prec_t kBits = 128;

// sum_i counts[i] * exp(-(min_exponent + i) * t * ln gamma)
BigFloat weighted_sum(const ExponentHistogram& hist, const BigFloat& t_log_gamma) {
  BigFloat sum(kBits);
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    if (hist.counts[i] == 0) continue;
    BigFloat m(mpz_class(hist.min_exponent + static_cast<long>(i)), kBits);
    BigFloat count(mpz_class(std::to_string(hist.counts[i])), kBits);
    sum += count * exp(-(m * t_log_gamma));
  }
  return sum;
}

BigFloat level_factor(const FractalSpec& spec, const BigFloat& t_log_gamma) {
  const BigFloat long_count(spec.long_survivors(), kBits);
  const BigFloat short_count(spec.short_survivors(), kBits);
  const BigFloat long_exp(mpz_class(spec.n - 1), kBits);
  const BigFloat short_exp(mpz_class(spec.n), kBits);
  return long_count * exp(-(long_exp * t_log_gamma)) +
         short_count * exp(-(short_exp * t_log_gamma));
}

}  // namespace

HausdorffSum hausdorff_sum(const ExponentHistogram& hist, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "exponent t must be non-negative");
  const BigFloat t_log_gamma = BigFloat(t, kBits) * log(hist.spec.params.gamma(kBits));
  return HausdorffSum{hist.depth, t, weighted_sum(hist, t_log_gamma).to_double(),
                      level_factor(hist.spec, t_log_gamma).to_double()};
}

HausdorffSum hausdorff_sum(const IntervalCover& cover, double t) {
  return hausdorff_sum(histogram(cover), t);
}

double hausdorff_sum_direct(const IntervalCover& cover, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "exponent t must be non-negative");
  const double log_gamma = log(cover.spec.params.gamma(kBits)).to_double();
  std::vector<double> terms;
  terms.reserve(cover.intervals.size());
  for (const Interval& iv : cover.intervals) {
    terms.push_back(std::exp(-static_cast<double>(iv.length_exponent) * t * log_gamma));
  }
  return kernels::parallel::pairwise_sum(terms);
}

double empirical_dimension(const ExponentHistogram& hist) {
  if (hist.depth < 1) throw Error(ErrorCode::kInvalidArgument, "empirical dimension needs depth >= 1");
  if (hist.total() <= 1) return 0.0;
  const BigFloat log_gamma = log(hist.spec.params.gamma(kBits));
  const BigFloat one(1.0, kBits);
  // The sum is strictly decreasing in t: >= 1 at t = 0, <= 1 at t = 1.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    BigFloat value = weighted_sum(hist, BigFloat(mid, kBits) * log_gamma);
    int c = compare(value, one);
    if (c == 0) return mid;
    (c > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double empirical_dimension(const IntervalCover& cover) {
  return empirical_dimension(histogram(cover));
}

namespace {

std::uint64_t count_with_scale(const IntervalCover& cover, const BigFloat& scale) {
  const BigFloat gamma = cover.spec.params.gamma();
  const auto ends = kernels::parallel::endpoints(cover.intervals, gamma, kBits);
  const auto ranges = kernels::parallel::box_ranges(ends, scale);
  return kernels::parallel::count_boxes(ranges);
}

}  // namespace

std::uint64_t box_count(const IntervalCover& cover, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "box size must lie in (0, 1]");
  return count_with_scale(cover, BigFloat(1.0, kBits) / BigFloat(eps, kBits));
}

std::uint64_t box_count_scaled(const IntervalCover& cover, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "box exponent must be non-negative");
  return count_with_scale(cover, pow(cover.spec.params.gamma(), exponent).with_bits(kBits));
}

int limit_depth(const FractalSpec& spec, int exponent) {
  return (exponent + spec.n - 2) / (spec.n - 1) + kLimitExtraDepth;
}

std::uint64_t limit_box_count(const FractalSpec& spec, int exponent, std::uint64_t cap) {
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "box exponent must be non-negative");
  spec.validate();
  constexpr mpfr_prec_t bits = 160;
  kernels::FloatPattern pattern;
  for (const Survivor& s : survivors(spec)) {
    pattern.offsets.push_back(to_float(s.start, bits));
    pattern.exponents.push_back(s.length_exponent);
  }
  const BigFloat gamma = spec.params.gamma(bits);
  const kernels::LimitQuery query{gamma, pow(gamma, exponent).with_bits(bits),
                                  limit_depth(spec, exponent), cap};
  return kernels::parallel::count_boxes(kernels::parallel::limit_box_ranges(pattern, query));
}

BoxFit box_dimension(const FractalSpec& spec, int k_max, std::uint64_t cap) {
  if (k_max < 4) throw Error(ErrorCode::kInvalidArgument, "box dimension needs k_max >= 4");
  spec.validate();
  const double log_gamma = log(spec.params.gamma()).to_double();

  BoxFit fit{};
  fit.max_depth = limit_depth(spec, spec.n * k_max);
  for (int k = 2; k <= k_max; ++k) {
    const int exponent = spec.n * k;
    const std::uint64_t count = limit_box_count(spec, exponent, cap);
    fit.points.push_back(BoxFitPoint{k, exponent * log_gamma,
                                     std::log(static_cast<double>(count)), count});
  }

  const double n = static_cast<double>(fit.points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const BoxFitPoint& pt : fit.points) {
    mean_x += pt.log_inv_eps;
    mean_y += pt.log_count;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const BoxFitPoint& pt : fit.points) {
    sxx += (pt.log_inv_eps - mean_x) * (pt.log_inv_eps - mean_x);
    sxy += (pt.log_inv_eps - mean_x) * (pt.log_count - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ssr = 0.0;
  for (const BoxFitPoint& pt : fit.points) {
    double r = pt.log_count - (fit.intercept + fit.slope * pt.log_inv_eps);
    ssr += r * r;
  }
  fit.residual = std::sqrt(ssr / (n - 2.0));
  fit.rms_residual = std::sqrt(ssr / n);
  fit.slope_stderr = fit.residual / std::sqrt(sxx);
  return fit;
}

}  // namespace metallic
