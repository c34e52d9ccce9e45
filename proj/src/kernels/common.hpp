#pragma once

// Pieces shared verbatim by the serial and OpenMP kernels.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metallic/bigfloat.hpp"
#include "metallic/errors.hpp"
#include "metallic/interval.hpp"
#include "metallic/kernels.hpp"

namespace metallic::kernels::detail {

// Rounds x to the nearest integer when it is that close already.
inline BigFloat snap(const BigFloat& x) {
  BigFloat r = round(x);
  BigFloat tol = abs(x);
  if (tol < BigFloat(1.0, x.bits())) tol = BigFloat(1.0, x.bits());
  mpfr_div_2ui(tol.get(), tol.get(), 96, MPFR_RNDN);
  return abs(x - r) <= tol ? r : x;
}

inline BoxRange box_range(const BigFloat& start, const BigFloat& end, const BigFloat& scale) {
  BigFloat lo = floor(snap(start * scale));
  BigFloat hi = ceil(snap(end * scale));
  auto first = static_cast<std::int64_t>(mpfr_get_sj(lo.get(), MPFR_RNDN));
  auto last = static_cast<std::int64_t>(mpfr_get_sj(hi.get(), MPFR_RNDN)) - 1;
  if (last < first) last = first;
  return BoxRange{first, last};
}

// Boxes of `cur` not already counted by its predecessor. Ranges come from
// sorted disjoint intervals, so only the previous range can overlap.
inline std::uint64_t fresh_boxes(const BoxRange& cur, const BoxRange* prev) {
  std::int64_t from = cur.first;
  if (prev != nullptr && prev->last + 1 > from) from = prev->last + 1;
  return cur.last >= from ? static_cast<std::uint64_t>(cur.last - from + 1) : 0;
}

// Depth-first descent below one node, emitting leaf box ranges in order.
class LimitWalker {
 public:
  LimitWalker(const FloatPattern& pattern, const LimitQuery& query,
              std::atomic<std::uint64_t>& visited)
      : offsets_(pattern.offsets),
        exponents_(pattern.exponents),
        scale_(query.scale),
        max_depth_(query.max_depth),
        budget_(query.budget),
        visited_(visited) {
    int max_e = 0;
    for (int e : exponents_) max_e = std::max(max_e, e);
    const BigFloat inv = BigFloat(1.0, query.scale.bits()) / query.gamma;
    inverse_powers_.push_back(BigFloat(1.0, query.scale.bits()));
    for (int m = 1; m <= max_e * (max_depth_ + 1); ++m) {
      inverse_powers_.push_back(inverse_powers_.back() * inv);
    }
  }

  bool exhausted() const { return visited_.load(std::memory_order_relaxed) > budget_; }

  // Returns the node's range when it is a leaf.
  std::optional<BoxRange> leaf(const BigFloat& start, int exponent, int depth) {
    if (visited_.fetch_add(1, std::memory_order_relaxed) >= budget_) return BoxRange{0, -1};
    const BoxRange r = box_range(start, start + power(exponent), scale_);
    if (r.first == r.last || depth >= max_depth_) return r;
    return std::nullopt;
  }

  BigFloat child_start(const BigFloat& start, int exponent, std::size_t j) const {
    return start + power(exponent) * offsets_[j];
  }

  void descend(const BigFloat& start, int exponent, int depth, std::vector<BoxRange>& out) {
    if (auto r = leaf(start, exponent, depth)) {
      if (r->last >= r->first) out.push_back(*r);
      return;
    }
    for (std::size_t j = 0; j < offsets_.size(); ++j) {
      descend(child_start(start, exponent, j), exponent + exponents_[j], depth + 1, out);
    }
  }

  std::size_t width() const { return offsets_.size(); }
  int child_exponent(int exponent, std::size_t j) const { return exponent + exponents_[j]; }

 private:
  const BigFloat& power(int m) const { return inverse_powers_.at(static_cast<std::size_t>(m)); }

  std::vector<BigFloat> offsets_;
  std::vector<int> exponents_;
  BigFloat scale_;
  int max_depth_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& visited_;
  std::vector<BigFloat> inverse_powers_;
};

inline void check_budget(const std::atomic<std::uint64_t>& visited, std::uint64_t budget) {
  if (visited.load() > budget) {
    throw Error(ErrorCode::kCapExceeded, "limit-set box count visited more than " +
                                             std::to_string(budget) + " nodes");
  }
}

inline double pairwise(std::span<const double> terms) {
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  std::size_t half = terms.size() / 2;
  return pairwise(terms.first(half)) + pairwise(terms.subspan(half));
}

inline std::size_t block_count(std::size_t n, std::size_t block) { return (n + block - 1) / block; }

// Depth-first walk below a fixed prefix; the last level is a flat loop.
inline void walk(std::span<const int> exponents, int remaining, int acc,
                 std::vector<std::uint64_t>& hist) {
  if (remaining == 0) {
    ++hist[static_cast<std::size_t>(acc)];
    return;
  }
  if (remaining == 1) {
    for (int e : exponents) ++hist[static_cast<std::size_t>(acc + e)];
    return;
  }
  for (int e : exponents) walk(exponents, remaining - 1, acc + e, hist);
}

inline std::size_t histogram_size(std::span<const int> exponents, int depth) {
  int max_e = 0;
  for (int e : exponents) max_e = e > max_e ? e : max_e;
  return static_cast<std::size_t>(max_e) * static_cast<std::size_t>(depth) + 1;
}

}  // namespace metallic::kernels::detail
