#pragma once

// Metallic-means substitution a -> a^p b^q, b -> a, its words, letter counts
// and the integer sequence a_0 = 0, a_1 = 1, a_n = p a_{n-1} + q a_{n-2}.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metallic/bigfloat.hpp"
#include "metallic/quadfield.hpp"

namespace metallic {

// Letters are 'a' (long tile) and 'b' (short tile).
using Word = std::string;

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

Word substitute(std::string_view word, const MetallicParams& params);

// W_0 = "b", W_n = rho(W_{n-1}). Throws kCapExceeded if |W_n| > cap.
Word word_at_step(const MetallicParams& params, int n, std::uint64_t cap = kDefaultCap);

// Lazily yields the letters of W_n left to right using O(n) memory.
class WordStream {
 public:
  WordStream(const MetallicParams& params, int n);

  std::optional<char> next();

 private:
  enum class Image { kSeed, kA, kB };
  struct Frame {
    Image image;
    std::size_t pos;
    int depth;
  };

  const std::string& image(Image which) const;

  std::string image_a_;
  std::vector<Frame> stack_;
};

struct CountVector {
  int n = 0;
  mpz_class long_count;   // N_a(n) = a_n
  mpz_class short_count;  // N_b(n) = q a_{n-1}

  mpz_class total() const { return long_count + short_count; }
};

// Integer recurrence; never materializes the word. n >= 0.
CountVector tile_counts(const MetallicParams& params, int n);

mpz_class metallic_sequence(const MetallicParams& params, int n);
std::vector<mpz_class> metallic_prefix(const MetallicParams& params, int count);

// Binet form (gamma^n - gamma_bar^n) / sqrt(D), gamma_bar = (p - sqrt D) / 2.
BigFloat metallic_binet(const MetallicParams& params, int n, mpfr_prec_t bits = 256);

}  // namespace metallic
