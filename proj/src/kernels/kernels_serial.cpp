#include <algorithm>

#include "common.hpp"
#include "metallic/errors.hpp"
#include "metallic/kernels.hpp"

namespace metallic::kernels {

PowerTable::PowerTable(Field field, int max_exponent) {
  if (max_exponent < 0) throw Error(ErrorCode::kInvalidArgument, "negative power-table size");
  const QuadElement inv = gamma_pow(field, -1);
  powers_.reserve(static_cast<std::size_t>(max_exponent) + 1);
  powers_.push_back(QuadElement::one(field));
  for (int m = 1; m <= max_exponent; ++m) powers_.push_back(powers_.back() * inv);
}

namespace serial {

std::vector<Interval> refine(std::span<const Interval> parents, const Pattern& pattern,
                             const PowerTable& powers) {
  std::vector<Interval> out;
  out.reserve(parents.size() * pattern.size());
  for (const Interval& parent : parents) {
    const QuadElement& scale = powers.inverse_power(parent.length_exponent);
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      out.push_back(Interval{parent.start + scale * pattern.offsets[j],
                             parent.length_exponent + pattern.exponents[j]});
    }
  }
  return out;
}

std::vector<std::uint64_t> exponent_histogram(std::span<const int> exponents, int depth) {
  std::vector<std::uint64_t> hist(detail::histogram_size(exponents, depth), 0);
  if (exponents.empty()) return hist;
  detail::walk(exponents, depth, 0, hist);
  return hist;
}

std::vector<Endpoints> endpoints(std::span<const Interval> intervals, const BigFloat& gamma,
                                 mpfr_prec_t bits) {
  std::vector<Endpoints> out;
  out.reserve(intervals.size());
  for (const Interval& iv : intervals) {
    BigFloat start = to_float(iv.start, gamma);
    BigFloat length = pow(gamma, -static_cast<long>(iv.length_exponent));
    BigFloat end = start + length;
    out.push_back(Endpoints{start.with_bits(bits), end.with_bits(bits)});
  }
  return out;
}

std::vector<BoxRange> box_ranges(std::span<const Endpoints> endpoints, const BigFloat& scale) {
  std::vector<BoxRange> out;
  out.reserve(endpoints.size());
  for (const Endpoints& e : endpoints) out.push_back(detail::box_range(e.start, e.end, scale));
  return out;
}

std::uint64_t count_boxes(std::span<const BoxRange> ranges) {
  std::uint64_t count = 0;
  std::int64_t covered = 0;
  bool any = false;
  for (const BoxRange& r : ranges) {
    std::int64_t from = any ? std::max(r.first, covered + 1) : r.first;
    if (r.last >= from) count += static_cast<std::uint64_t>(r.last - from + 1);
    covered = any ? std::max(covered, r.last) : r.last;
    any = true;
  }
  return count;
}

double pairwise_sum(std::span<const double> terms) {
  const std::size_t blocks = detail::block_count(terms.size(), kSumBlock);
  std::vector<double> partial(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t begin = b * kSumBlock;
    std::size_t len = std::min(kSumBlock, terms.size() - begin);
    partial[b] = detail::pairwise(terms.subspan(begin, len));
  }
  return detail::pairwise(partial);
}

std::vector<BoxRange> limit_box_ranges(const FloatPattern& pattern, const LimitQuery& query) {
  std::atomic<std::uint64_t> visited{0};
  detail::LimitWalker walker(pattern, query, visited);
  std::vector<BoxRange> out;
  walker.descend(BigFloat(query.scale.bits()), 0, 0, out);
  detail::check_budget(visited, query.budget);
  return out;
}

}  // namespace serial
}  // namespace metallic::kernels
