#include "metallic/tiling.hpp"

#include <map>
#include <string>

#include "metallic/errors.hpp"

namespace metallic {

Word Tiling::word() const {
  Word out;
  out.reserve(tiles.size());
  for (const Tile& t : tiles) out += letter(t.kind);
  return out;
}

Tiling tiling_at_step(const MetallicParams& params, int n, std::uint64_t cap) {
  Word word = word_at_step(params, n, cap);
  const Field field = params.field();
  // n = 0 is the single short tile [0,1]; long tiles only appear from n = 1.
  const int long_exp = n - 1;
  const int short_exp = n;
  const QuadElement long_len = gamma_pow(field, -long_exp);
  const QuadElement short_len = gamma_pow(field, -short_exp);

  Tiling tiling{params, n, {}};
  tiling.tiles.reserve(word.size());
  QuadElement cursor = QuadElement::zero(field);
  for (char c : word) {
    if (c == 'a') {
      tiling.tiles.push_back(Tile{TileKind::kLong, cursor, long_exp});
      cursor += long_len;
    } else {
      tiling.tiles.push_back(Tile{TileKind::kShort, cursor, short_exp});
      cursor += short_len;
    }
  }
  return tiling;
}

QuadElement total_length(const Tiling& tiling) {
  const Field field = tiling.params.field();
  std::map<int, QuadElement> lengths;
  QuadElement sum = QuadElement::zero(field);
  for (const Tile& t : tiling.tiles) {
    auto it = lengths.find(t.length_exponent);
    if (it == lengths.end()) it = lengths.emplace(t.length_exponent, t.length()).first;
    sum += it->second;
  }
  return sum;
}

Tiling deflate(const Tiling& tiling) {
  const Field field = tiling.params.field();
  Tiling out{tiling.params, tiling.n + 1, {}};
  for (const Tile& t : tiling.tiles) {
    QuadElement cursor = t.start;
    // Type lengths shrink by gamma, so a short tile turns into a long tile of
    // the same length.
    if (t.kind == TileKind::kShort) {
      out.tiles.push_back(Tile{TileKind::kLong, cursor, t.length_exponent});
      continue;
    }
    const int child = t.length_exponent + 1;
    const QuadElement long_len = gamma_pow(field, -child);
    const QuadElement short_len = gamma_pow(field, -(child + 1));
    for (int i = 0; i < tiling.params.p(); ++i) {
      out.tiles.push_back(Tile{TileKind::kLong, cursor, child});
      cursor += long_len;
    }
    for (int i = 0; i < tiling.params.q(); ++i) {
      out.tiles.push_back(Tile{TileKind::kShort, cursor, child + 1});
      cursor += short_len;
    }
  }
  return out;
}

}  // namespace metallic
