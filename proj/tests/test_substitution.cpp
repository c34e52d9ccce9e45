#include <doctest.h>

#include "metallic/errors.hpp"
#include "metallic/substitution.hpp"
#include "oracles.hpp"

using namespace metallic;

TEST_CASE("known words") {
  CHECK(word_at_step(MetallicParams(1, 1), 0) == "b");
  CHECK(word_at_step(MetallicParams(1, 1), 1) == "a");
  CHECK(word_at_step(MetallicParams(1, 1), 4) == "abaab");
  CHECK(word_at_step(MetallicParams(2, 1), 3) == "aabaaba");
  CHECK(substitute("ab", MetallicParams(1, 2)) == "abba");
}

TEST_CASE("substitute rejects foreign letters") {
  CHECK_THROWS_AS(substitute("abc", MetallicParams(1, 1)), Error);
}

TEST_CASE("word cap") {
  try {
    word_at_step(MetallicParams(1, 1), 40, 1000);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
}

TEST_CASE("oracle: words and counts agree with brute-force iteration") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      MetallicParams params(p, q);
      for (int n = 0; n <= 9; ++n) {
        const std::string brute = oracle::word(p, q, n);
        CHECK(word_at_step(params, n) == brute);
        auto [a, b] = oracle::letter_counts(brute);
        CountVector c = tile_counts(params, n);
        CHECK(c.long_count == a);
        CHECK(c.short_count == b);
        CHECK(c.total() == static_cast<long>(brute.size()));
      }
    }
  }
}

TEST_CASE("property: streamed word equals the materialized word") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      MetallicParams params(p, q);
      for (int n : {0, 1, 2, 5, 8}) {
        WordStream stream(params, n);
        std::string streamed;
        while (auto c = stream.next()) streamed += *c;
        CHECK(streamed == word_at_step(params, n));
      }
    }
  }
}

TEST_CASE("property: each step is a prefix of the next when q = 1") {
  MetallicParams params(2, 1);
  for (int n = 1; n < 8; ++n) {
    const std::string w = word_at_step(params, n);
    CHECK(word_at_step(params, n + 1).compare(0, w.size(), w) == 0);
  }
}

TEST_CASE("metallic sequence") {
  auto silver = metallic_prefix(MetallicParams(2, 1), 8);
  const long expect[] = {0, 1, 2, 5, 12, 29, 70, 169};
  REQUIRE(silver.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(silver[i] == expect[i]);
  auto fib = metallic_prefix(MetallicParams(1, 1), 10);
  CHECK(fib[9] == 34);
}

TEST_CASE("property: Binet formula matches the recurrence") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      MetallicParams params(p, q);
      for (int n = 0; n <= 60; n += 3) {
        BigFloat b = metallic_binet(params, n);
        CHECK(to_mpz(round(b)) == metallic_sequence(params, n));
      }
    }
  }
}
