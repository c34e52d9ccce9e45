#include <omp.h>

#include <algorithm>

#include "common.hpp"
#include "metallic/kernels.hpp"

namespace metallic::kernels {

int thread_count() { return omp_get_max_threads(); }

namespace parallel {

std::vector<Interval> refine(std::span<const Interval> parents, const Pattern& pattern,
                             const PowerTable& powers) {
  const std::size_t width = pattern.size();
  const Field field = pattern.offsets.empty() ? Field{} : pattern.offsets.front().field();
  std::vector<Interval> out(parents.size() * width, Interval{QuadElement::zero(field), 0});
  const auto count = static_cast<std::int64_t>(parents.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const Interval& parent = parents[static_cast<std::size_t>(i)];
    const QuadElement& scale = powers.inverse_power(parent.length_exponent);
    for (std::size_t j = 0; j < width; ++j) {
      out[static_cast<std::size_t>(i) * width + j] =
          Interval{parent.start + scale * pattern.offsets[j],
                   parent.length_exponent + pattern.exponents[j]};
    }
  }
  return out;
}

std::vector<std::uint64_t> exponent_histogram(std::span<const int> exponents, int depth) {
  const std::size_t size = detail::histogram_size(exponents, depth);
  std::vector<std::uint64_t> hist(size, 0);
  if (exponents.empty()) return hist;

  // Expand a prefix breadth-first until there is enough independent work.
  const std::size_t target = static_cast<std::size_t>(std::max(1, thread_count())) * 64;
  std::vector<int> prefixes{0};
  int levels = 0;
  while (levels < depth && prefixes.size() < target) {
    std::vector<int> next;
    next.reserve(prefixes.size() * exponents.size());
    for (int acc : prefixes)
      for (int e : exponents) next.push_back(acc + e);
    prefixes.swap(next);
    ++levels;
  }
  const int remaining = depth - levels;
  const auto count = static_cast<std::int64_t>(prefixes.size());

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(size, 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      detail::walk(exponents, remaining, prefixes[static_cast<std::size_t>(i)], local);
    }
#pragma omp critical
    for (std::size_t m = 0; m < size; ++m) hist[m] += local[m];
  }
  return hist;
}

std::vector<Endpoints> endpoints(std::span<const Interval> intervals, const BigFloat& gamma,
                                 mpfr_prec_t bits) {
  std::vector<Endpoints> out(intervals.size(), Endpoints{BigFloat(bits), BigFloat(bits)});
  const auto count = static_cast<std::int64_t>(intervals.size());
#pragma omp parallel
  {
    // MPFR values are not shared between threads; each gets its own gamma.
    const BigFloat local_gamma = gamma;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const Interval& iv = intervals[static_cast<std::size_t>(i)];
      BigFloat start = to_float(iv.start, local_gamma);
      BigFloat end = start + pow(local_gamma, -static_cast<long>(iv.length_exponent));
      out[static_cast<std::size_t>(i)] = Endpoints{start.with_bits(bits), end.with_bits(bits)};
    }
  }
  return out;
}

std::vector<BoxRange> box_ranges(std::span<const Endpoints> endpoints, const BigFloat& scale) {
  std::vector<BoxRange> out(endpoints.size());
  const auto count = static_cast<std::int64_t>(endpoints.size());
#pragma omp parallel
  {
    const BigFloat local_scale = scale;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const Endpoints& e = endpoints[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = detail::box_range(e.start, e.end, local_scale);
    }
  }
  return out;
}

std::uint64_t count_boxes(std::span<const BoxRange> ranges) {
  std::uint64_t count = 0;
  const auto n = static_cast<std::int64_t>(ranges.size());
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i) {
    const BoxRange* prev = i == 0 ? nullptr : &ranges[static_cast<std::size_t>(i - 1)];
    count += detail::fresh_boxes(ranges[static_cast<std::size_t>(i)], prev);
  }
  return count;
}

double pairwise_sum(std::span<const double> terms) {
  const std::size_t blocks = detail::block_count(terms.size(), kSumBlock);
  std::vector<double> partial(blocks);
  const auto n = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < n; ++b) {
    std::size_t begin = static_cast<std::size_t>(b) * kSumBlock;
    std::size_t len = std::min(kSumBlock, terms.size() - begin);
    partial[static_cast<std::size_t>(b)] = detail::pairwise(terms.subspan(begin, len));
  }
  return detail::pairwise(partial);
}

std::vector<BoxRange> limit_box_ranges(const FloatPattern& pattern, const LimitQuery& query) {
  std::atomic<std::uint64_t> visited{0};
  detail::LimitWalker root(pattern, query, visited);

  // Breadth-first frontier in left-to-right order; resolved leaves keep their
  // place so the concatenated output stays sorted.
  struct Item {
    BigFloat start;
    int exponent;
    int depth;
    std::optional<BoxRange> range;
  };
  std::vector<Item> frontier;
  frontier.push_back(Item{BigFloat(query.scale.bits()), 0, 0, std::nullopt});
  const std::size_t target = static_cast<std::size_t>(std::max(1, thread_count())) * 64;
  bool open = true;
  while (open && frontier.size() < target && !root.exhausted()) {
    open = false;
    std::vector<Item> next;
    for (Item& item : frontier) {
      if (!item.range) item.range = root.leaf(item.start, item.exponent, item.depth);
      if (item.range) {
        next.push_back(std::move(item));
        continue;
      }
      open = true;
      for (std::size_t j = 0; j < root.width(); ++j) {
        next.push_back(Item{root.child_start(item.start, item.exponent, j),
                            root.child_exponent(item.exponent, j), item.depth + 1, std::nullopt});
      }
    }
    frontier.swap(next);
  }

  std::vector<std::vector<BoxRange>> parts(frontier.size());
  const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
  {
    detail::LimitWalker walker(pattern, query, visited);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      const Item& item = frontier[static_cast<std::size_t>(i)];
      auto& part = parts[static_cast<std::size_t>(i)];
      if (item.range) {
        if (item.range->last >= item.range->first) part.push_back(*item.range);
      } else if (!walker.exhausted()) {
        walker.descend(item.start, item.exponent, item.depth, part);
      }
    }
  }
  detail::check_budget(visited, query.budget);
  std::vector<BoxRange> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace parallel
}  // namespace metallic::kernels
