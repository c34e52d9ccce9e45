#pragma once

// SVG and TikZ figures of tiling stacks and fractal construction stages.

#include <cstdint>
#include <string>

#include "metallic/fractal.hpp"

namespace metallic {

enum class RenderFormat { kSvg, kTikz };

struct RenderPlan {
  RenderFormat format = RenderFormat::kSvg;
  double width = 600.0;  // [0,1] maps affinely onto [margin, width - margin]
  double margin = 20.0;
  double row_height = 48.0;
  double tick_length = 4.0;
  bool tile_letters = true;
  bool length_labels = true;
  bool endpoint_labels = true;
  double label_spacing = 12.0;  // labels closer than this to the previous one are dropped
  std::uint64_t max_segments = 10'000;
};

// One row per step 0..n_max.
std::string render_tiling_stack(const MetallicParams& params, int n_max, const RenderPlan& plan);

// The step-n tiling, then one row per construction depth 1..k_max with the
// removed regions left blank.
std::string render_construction(const FractalSpec& spec, int k_max, const RenderPlan& plan);

}  // namespace metallic
