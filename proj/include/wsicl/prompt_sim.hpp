#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wsicl/rng.hpp"
#include "wsicl/volume.hpp"

namespace wsicl {

// Weak-prompt simulation: slices are sampled with probability proportional
// to the foreground area they contain, then one prompt is rendered per
// 4-connected component of the selected slice. Boxes are tight per-component
// rectangles with rounded Gaussian jitter rendered as filled rectangles;
// points are sampled uniformly inside a component and rendered as soft
// spheres with profile 1 - d/R (the normalized Euclidean distance transform
// of a radius-R ball), composed across prompts by voxelwise max.

struct SliceDistribution {
    std::vector<double> probs;  // length D, non-negative, sums to 1
};

/// probs[k] = foreground area of slice k / total foreground. Rejects empty masks.
SliceDistribution slice_area_distribution(const Mask3D& mask);

int sample_slice(const SliceDistribution& dist, Rng& rng);

struct BoundingBox2D {
    int slice_index = 0;
    int row_min = 0, row_max = 0;  // inclusive
    int col_min = 0, col_max = 0;  // inclusive
};

using Pixel2D = std::pair<int, int>;          // (row, col)
using Component2D = std::vector<Pixel2D>;     // BFS discovery order

/// 4-connected components of one slice, ordered by scanline position of the
/// first (discovery) pixel. Empty slices yield an empty list.
std::vector<Component2D> connected_components_2d(const Mask3D& mask, int slice_index);

BoundingBox2D tight_bbox(const Component2D& component, int slice_index);

/// Adds the given rounded addends to (row_min, row_max, col_min, col_max),
/// clamps to slice bounds and reorders inverted coordinate pairs.
BoundingBox2D jitter_bbox(const BoundingBox2D& box, Shape3 bounds, const std::array<double, 4>& draws);

/// Same with draws taken from round(N(0,1)).
BoundingBox2D jitter_bbox(const BoundingBox2D& box, Shape3 bounds, Rng& rng);

/// Sets every voxel of the box's slice rectangle to 1. Idempotent; composes
/// across boxes by max.
void render_box(PromptChannel& channel, const BoundingBox2D& box);

struct PointPrompt {
    int slice_index = 0;
    int row = 0;
    int col = 0;
    double radius_voxels = 4.0;
};

/// Uniform draw over the component's pixels.
PointPrompt sample_point(const Component2D& component, int slice_index, double radius_voxels, Rng& rng);

/// Soft sphere: channel[v] = max(channel[v], 1 - d/R) for d(v, center) < R.
/// The center voxel gets exactly 1; voxels at d >= R are untouched.
void render_point(PromptChannel& channel, const PointPrompt& p);

struct PromptSpec {
    PromptType prompt_type = PromptType::box;
    int prompts_per_image = 1;   // P: number of slice draws
    bool jitter_enabled = true;  // box mode only
    std::uint64_t rng_seed = 0;
    double point_radius = 0.0;   // <= 0 selects the shape-scaled default
};

void validate(const PromptSpec& spec);

/// Default sphere radius: 4 voxels at edge length 32, scaled by the mean
/// edge length of the volume.
double default_point_radius(Shape3 shape);

/// Full pipeline: P slice draws (with replacement) from the area
/// distribution, one prompt per component per drawn slice. Pure function of
/// (mask, spec): the RNG stream is seeded from spec.rng_seed.
PromptChannel simulate_prompts(const Mask3D& mask, const PromptSpec& spec);

/// Variant drawing randomness from a caller-owned stream.
PromptChannel simulate_prompts(const Mask3D& mask, const PromptSpec& spec, Rng& rng);

}  // namespace wsicl
