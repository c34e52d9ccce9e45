#include "metallic/substitution.hpp"

#include "metallic/errors.hpp"

namespace metallic {

namespace {

void require_step(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "step index must be non-negative");
}

}  // namespace

Word substitute(std::string_view word, const MetallicParams& params) {
  const std::string image_a = std::string(params.p(), 'a') + std::string(params.q(), 'b');
  Word out;
  out.reserve(word.size() * 2);
  for (char c : word) {
    if (c == 'a') {
      out += image_a;
    } else if (c == 'b') {
      out += 'a';
    } else {
      throw Error(ErrorCode::kInvalidArgument, std::string("letter outside {a,b}: ") + c);
    }
  }
  return out;
}

Word word_at_step(const MetallicParams& params, int n, std::uint64_t cap) {
  require_step(n);
  mpz_class length = tile_counts(params, n).total();
  if (length > mpz_class(std::to_string(cap))) {
    throw Error(ErrorCode::kCapExceeded, "word W_" + std::to_string(n) + " has " +
                                             length.get_str() + " letters, above the cap of " +
                                             std::to_string(cap));
  }
  Word word = "b";
  for (int i = 0; i < n; ++i) word = substitute(word, params);
  return word;
}

WordStream::WordStream(const MetallicParams& params, int n)
    : image_a_(std::string(params.p(), 'a') + std::string(params.q(), 'b')) {
  require_step(n);
  stack_.push_back(Frame{Image::kSeed, 0, n});
}

const std::string& WordStream::image(Image which) const {
  static const std::string kSeed = "b";
  static const std::string kImageB = "a";
  switch (which) {
    case Image::kA: return image_a_;
    case Image::kB: return kImageB;
    case Image::kSeed: break;
  }
  return kSeed;
}

std::optional<char> WordStream::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    const std::string& letters = image(top.image);
    if (top.pos == letters.size()) {
      stack_.pop_back();
      continue;
    }
    char c = letters[top.pos++];
    if (top.depth == 0) return c;
    int depth = top.depth - 1;
    stack_.push_back(Frame{c == 'a' ? Image::kA : Image::kB, 0, depth});
  }
  return std::nullopt;
}

CountVector tile_counts(const MetallicParams& params, int n) {
  require_step(n);
  // W_0 = "b"; N_a' = p N_a + N_b, N_b' = q N_a.
  CountVector counts{0, 0, 1};
  for (int i = 1; i <= n; ++i) {
    mpz_class long_count = params.p() * counts.long_count + counts.short_count;
    mpz_class short_count = params.q() * counts.long_count;
    counts = CountVector{i, std::move(long_count), std::move(short_count)};
  }
  return counts;
}

mpz_class metallic_sequence(const MetallicParams& params, int n) {
  require_step(n);
  mpz_class prev = 0;
  mpz_class cur = 1;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    mpz_class next = params.p() * cur + params.q() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<mpz_class> metallic_prefix(const MetallicParams& params, int count) {
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    if (i < 2) {
      out.emplace_back(i);
    } else {
      out.push_back(params.p() * out[i - 1] + params.q() * out[i - 2]);
    }
  }
  return out;
}

BigFloat metallic_binet(const MetallicParams& params, int n, mpfr_prec_t bits) {
  require_step(n);
  BigFloat root_d = sqrt(BigFloat(mpz_class(params.discriminant()), bits));
  BigFloat p(mpz_class(params.p()), bits);
  BigFloat gamma = p + root_d;
  BigFloat gamma_bar = p - root_d;
  mpfr_div_2ui(gamma.get(), gamma.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(gamma_bar.get(), gamma_bar.get(), 1, MPFR_RNDN);
  return (pow(gamma, n) - pow(gamma_bar, n)) / root_d;
}

}  // namespace metallic
