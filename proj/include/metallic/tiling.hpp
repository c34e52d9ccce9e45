#pragma once

#include <cstdint>
#include <vector>

#include "metallic/quadfield.hpp"
#include "metallic/substitution.hpp"

namespace metallic {

enum class TileKind : char { kLong = 'a', kShort = 'b' };

inline char letter(TileKind kind) { return static_cast<char>(kind); }

struct Tile {
  TileKind kind;
  QuadElement start;
  int length_exponent;  // length = gamma^-length_exponent

  QuadElement length() const { return gamma_pow(start.field(), -length_exponent); }
  QuadElement end() const { return start + length(); }
};

struct Tiling {
  MetallicParams params;
  int n;
  std::vector<Tile> tiles;

  Word word() const;
};

// Step-n tiling of [0,1]: long tiles have length gamma^-(n-1), short tiles
// gamma^-n, laid out in the order of W_n with exact cumulative endpoints.
Tiling tiling_at_step(const MetallicParams& params, int n, std::uint64_t cap = kDefaultCap);

QuadElement total_length(const Tiling& tiling);

// One substitution applied geometrically: every long tile becomes p long and
// q short tiles, every short tile one long tile, all scaled by 1/gamma.
Tiling deflate(const Tiling& tiling);

}  // namespace metallic
