#include "metallic/fractal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "metallic/errors.hpp"

namespace metallic {

const char* to_string(RemovalPolicy policy) {
  switch (policy) {
    case RemovalPolicy::kKeepFirst: return "keep-first";
    case RemovalPolicy::kKeepLast: return "keep-last";
    case RemovalPolicy::kExplicit: return "explicit";
  }
  return "unknown";
}

RemovalPolicy parse_policy(const std::string& text) {
  if (text == "keep-first") return RemovalPolicy::kKeepFirst;
  if (text == "keep-last") return RemovalPolicy::kKeepLast;
  if (text == "explicit") return RemovalPolicy::kExplicit;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown removal policy '" + text + "' (expected keep-first, keep-last or explicit)");
}

mpz_class FractalSpec::long_survivors() const {
  return tile_counts(params, n).long_count - remove_long;
}

mpz_class FractalSpec::short_survivors() const {
  return tile_counts(params, n).short_count - remove_short;
}

void FractalSpec::validate() const {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "step n must be at least 2 (got " + std::to_string(n) + ")");
  }
  const CountVector counts = tile_counts(params, n);
  if (remove_long < 0 || counts.long_count < remove_long) {
    throw Error(ErrorCode::kInvalidRemovalCount,
                "cannot remove " + std::to_string(remove_long) + " long tiles: step " +
                    std::to_string(n) + " has " + counts.long_count.get_str());
  }
  if (remove_short < 0 || counts.short_count < remove_short) {
    throw Error(ErrorCode::kInvalidRemovalCount,
                "cannot remove " + std::to_string(remove_short) + " short tiles: step " +
                    std::to_string(n) + " has " + counts.short_count.get_str());
  }
  if (counts.total() - remove_long - remove_short < 1) {
    throw Error(ErrorCode::kEmptyFractal, "removal leaves no tiles; the fractal is empty");
  }
  if (policy != RemovalPolicy::kExplicit) {
    if (!indices.empty()) {
      throw Error(ErrorCode::kPolicyIndexMismatch,
                  "removal indices are only accepted with the explicit policy");
    }
    return;
  }
  if (counts.total() > mpz_class(std::to_string(kDefaultCap))) {
    throw Error(ErrorCode::kCapExceeded, "explicit removal needs W_n materialized; too long");
  }
  const Word word = word_at_step(params, n);
  std::set<int> seen;
  int longs = 0;
  int shorts = 0;
  for (int idx : indices) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= word.size()) {
      throw Error(ErrorCode::kPolicyIndexMismatch,
                  "removal index " + std::to_string(idx) + " outside word of length " +
                      std::to_string(word.size()));
    }
    if (!seen.insert(idx).second) {
      throw Error(ErrorCode::kPolicyIndexMismatch,
                  "removal index " + std::to_string(idx) + " listed twice");
    }
    (word[static_cast<std::size_t>(idx)] == 'a' ? longs : shorts)++;
  }
  if (longs != remove_long || shorts != remove_short) {
    std::ostringstream os;
    os << "explicit indices name " << longs << " long and " << shorts
       << " short tiles, but the spec removes " << remove_long << " long and " << remove_short
       << " short (word " << word << ")";
    throw Error(ErrorCode::kPolicyIndexMismatch, os.str());
  }
}

std::vector<Survivor> survivors(const FractalSpec& spec) {
  spec.validate();
  const Tiling tiling = tiling_at_step(spec.params, spec.n);

  std::vector<int> long_pos;
  std::vector<int> short_pos;
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    (tiling.tiles[i].kind == TileKind::kLong ? long_pos : short_pos).push_back(static_cast<int>(i));
  }

  std::set<int> removed;
  switch (spec.policy) {
    case RemovalPolicy::kKeepFirst:
      removed.insert(long_pos.end() - spec.remove_long, long_pos.end());
      removed.insert(short_pos.end() - spec.remove_short, short_pos.end());
      break;
    case RemovalPolicy::kKeepLast:
      removed.insert(long_pos.begin(), long_pos.begin() + spec.remove_long);
      removed.insert(short_pos.begin(), short_pos.begin() + spec.remove_short);
      break;
    case RemovalPolicy::kExplicit:
      removed.insert(spec.indices.begin(), spec.indices.end());
      break;
  }

  std::vector<Survivor> out;
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    if (removed.count(static_cast<int>(i)) != 0) continue;
    const Tile& t = tiling.tiles[i];
    out.push_back(Survivor{t.kind, t.start, t.length_exponent, static_cast<int>(i)});
  }
  return out;
}

kernels::Pattern make_pattern(const std::vector<Survivor>& survivors) {
  kernels::Pattern pattern;
  for (const Survivor& s : survivors) {
    pattern.offsets.push_back(s.start);
    pattern.exponents.push_back(s.length_exponent);
  }
  return pattern;
}

IntervalCover unit_cover(const FractalSpec& spec) {
  return IntervalCover{spec, 0, {Interval{QuadElement::zero(spec.params.field()), 0}}};
}

namespace {

int max_exponent(const std::vector<Interval>& intervals) {
  int m = 0;
  for (const Interval& iv : intervals) m = std::max(m, iv.length_exponent);
  return m;
}

}  // namespace

IntervalCover refine(const IntervalCover& cover) {
  const kernels::Pattern pattern = make_pattern(survivors(cover.spec));
  const kernels::PowerTable powers(cover.spec.params.field(), max_exponent(cover.intervals));
  return IntervalCover{cover.spec, cover.depth + 1,
                       kernels::parallel::refine(cover.intervals, pattern, powers)};
}

IntervalCover cover_at_depth(const FractalSpec& spec, int k, std::uint64_t cap) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "cover depth must be non-negative");
  const std::vector<Survivor> surv = survivors(spec);
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), surv.size(), static_cast<unsigned long>(k));
  if (count > mpz_class(std::to_string(cap))) {
    throw Error(ErrorCode::kCapExceeded, "depth-" + std::to_string(k) + " cover has " +
                                             count.get_str() + " intervals, above the cap of " +
                                             std::to_string(cap));
  }
  const kernels::Pattern pattern = make_pattern(surv);
  const kernels::PowerTable powers(spec.params.field(), spec.n * k);
  IntervalCover cover = unit_cover(spec);
  for (int level = 0; level < k; ++level) {
    cover.intervals = kernels::parallel::refine(cover.intervals, pattern, powers);
    cover.depth = level + 1;
  }
  return cover;
}

namespace {

struct StreamWalker {
  const kernels::Pattern& pattern;
  const kernels::PowerTable& powers;
  const std::function<void(std::uint64_t, const Interval&)>& visit;
  std::uint64_t next_index = 0;

  void descend(const Interval& parent, int remaining) {
    if (remaining == 0) {
      visit(next_index++, parent);
      return;
    }
    const QuadElement& scale = powers.inverse_power(parent.length_exponent);
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      descend(Interval{parent.start + scale * pattern.offsets[j],
                       parent.length_exponent + pattern.exponents[j]},
              remaining - 1);
    }
  }
};

}  // namespace

void for_each_interval(const FractalSpec& spec, int k,
                       const std::function<void(std::uint64_t, const Interval&)>& visit) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "cover depth must be non-negative");
  const kernels::Pattern pattern = make_pattern(survivors(spec));
  const kernels::PowerTable powers(spec.params.field(), spec.n * k);
  StreamWalker walker{pattern, powers, visit};
  walker.descend(Interval{QuadElement::zero(spec.params.field()), 0}, k);
}

std::string kind_path(const std::vector<Survivor>& survivors, int depth, std::uint64_t index) {
  std::string path(static_cast<std::size_t>(depth), '?');
  const std::uint64_t base = survivors.size();
  for (int level = depth - 1; level >= 0; --level) {
    path[static_cast<std::size_t>(level)] = letter(survivors[index % base].kind);
    index /= base;
  }
  return path;
}

std::vector<Gap> gaps(const IntervalCover& cover) {
  const Field field = cover.spec.params.field();
  std::vector<Gap> out;
  QuadElement cursor = QuadElement::zero(field);
  auto emit = [&](const QuadElement& until) {
    QuadElement len = until - cursor;
    if (sign(len) > 0) out.push_back(Gap{cursor, std::move(len)});
  };
  for (const Interval& iv : cover.intervals) {
    emit(iv.start);
    cursor = iv.end();
  }
  emit(QuadElement::one(field));
  return out;
}

std::uint64_t ExponentHistogram::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

ExponentHistogram histogram(const IntervalCover& cover) {
  int lo = cover.intervals.empty() ? 0 : cover.intervals.front().length_exponent;
  int hi = lo;
  for (const Interval& iv : cover.intervals) {
    lo = std::min(lo, iv.length_exponent);
    hi = std::max(hi, iv.length_exponent);
  }
  ExponentHistogram h{cover.spec, cover.depth, lo,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(hi - lo + 1), 0)};
  for (const Interval& iv : cover.intervals) ++h.counts[static_cast<std::size_t>(iv.length_exponent - lo)];
  return h;
}

ExponentHistogram cover_histogram(const FractalSpec& spec, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "cover depth must be non-negative");
  const kernels::Pattern pattern = make_pattern(survivors(spec));
  std::vector<std::uint64_t> raw = kernels::parallel::exponent_histogram(pattern.exponents, k);
  std::size_t lo = 0;
  while (lo + 1 < raw.size() && raw[lo] == 0) ++lo;
  std::size_t hi = raw.size();
  while (hi > lo + 1 && raw[hi - 1] == 0) --hi;
  return ExponentHistogram{spec, k, static_cast<int>(lo),
                           std::vector<std::uint64_t>(raw.begin() + static_cast<long>(lo),
                                                      raw.begin() + static_cast<long>(hi))};
}

}  // namespace metallic
