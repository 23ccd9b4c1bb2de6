#include "wsicl/prompt_sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace wsicl {

SliceDistribution slice_area_distribution(const Mask3D& mask) {
    validate_mask(mask, "slice_area_distribution");
    std::vector<double> areas(static_cast<std::size_t>(mask.shape.d), 0.0);
    double total = 0.0;
    const std::size_t slice_size = static_cast<std::size_t>(mask.shape.h) * mask.shape.w;
    for (int z = 0; z < mask.shape.d; ++z) {
        std::size_t count = 0;
        const std::uint8_t* slice = mask.data.data() + static_cast<std::size_t>(z) * slice_size;
        for (std::size_t i = 0; i < slice_size; ++i) count += slice[i];
        areas[static_cast<std::size_t>(z)] = static_cast<double>(count);
        total += static_cast<double>(count);
    }
    if (total == 0.0) fail(ErrorKind::data, "slice_area_distribution: empty mask, no target to prompt");
    for (double& a : areas) a /= total;
    return SliceDistribution{std::move(areas)};
}

int sample_slice(const SliceDistribution& dist, Rng& rng) {
    const double u = uniform01(rng);
    double acc = 0.0;
    int last_nonzero = -1;
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
        if (dist.probs[k] <= 0.0) continue;
        last_nonzero = static_cast<int>(k);
        acc += dist.probs[k];
        if (u < acc) return static_cast<int>(k);
    }
    return last_nonzero;  // u landed in the rounding tail
}

std::vector<Component2D> connected_components_2d(const Mask3D& mask, int slice_index) {
    validate_mask(mask, "connected_components_2d");
    if (slice_index < 0 || slice_index >= mask.shape.d) {
        fail(ErrorKind::data, "connected_components_2d: slice index out of range");
    }
    const int h = mask.shape.h, w = mask.shape.w;
    std::vector<bool> visited(static_cast<std::size_t>(h) * w, false);
    std::vector<Component2D> components;

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!mask.at(slice_index, r, c) || visited[static_cast<std::size_t>(r) * w + c]) continue;
            Component2D comp;
            std::deque<Pixel2D> queue{{r, c}};
            visited[static_cast<std::size_t>(r) * w + c] = true;
            while (!queue.empty()) {
                const auto [pr, pc] = queue.front();
                queue.pop_front();
                comp.emplace_back(pr, pc);
                const int nr[4] = {pr - 1, pr + 1, pr, pr};
                const int nc[4] = {pc, pc, pc - 1, pc + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nr[k] < 0 || nr[k] >= h || nc[k] < 0 || nc[k] >= w) continue;
                    const std::size_t idx = static_cast<std::size_t>(nr[k]) * w + nc[k];
                    if (visited[idx] || !mask.at(slice_index, nr[k], nc[k])) continue;
                    visited[idx] = true;
                    queue.emplace_back(nr[k], nc[k]);
                }
            }
            components.push_back(std::move(comp));
        }
    }
    return components;
}

BoundingBox2D tight_bbox(const Component2D& component, int slice_index) {
    if (component.empty()) fail(ErrorKind::data, "tight_bbox: empty component");
    BoundingBox2D box;
    box.slice_index = slice_index;
    box.row_min = box.row_max = component.front().first;
    box.col_min = box.col_max = component.front().second;
    for (const auto& [r, c] : component) {
        box.row_min = std::min(box.row_min, r);
        box.row_max = std::max(box.row_max, r);
        box.col_min = std::min(box.col_min, c);
        box.col_max = std::max(box.col_max, c);
    }
    return box;
}

BoundingBox2D jitter_bbox(const BoundingBox2D& box, Shape3 bounds, const std::array<double, 4>& draws) {
    auto clamp_row = [&](long v) { return static_cast<int>(std::clamp(v, 0L, static_cast<long>(bounds.h - 1))); };
    auto clamp_col = [&](long v) { return static_cast<int>(std::clamp(v, 0L, static_cast<long>(bounds.w - 1))); };
    BoundingBox2D out;
    out.slice_index = box.slice_index;
    out.row_min = clamp_row(box.row_min + std::lround(draws[0]));
    out.row_max = clamp_row(box.row_max + std::lround(draws[1]));
    out.col_min = clamp_col(box.col_min + std::lround(draws[2]));
    out.col_max = clamp_col(box.col_max + std::lround(draws[3]));
    if (out.row_min > out.row_max) std::swap(out.row_min, out.row_max);
    if (out.col_min > out.col_max) std::swap(out.col_min, out.col_max);
    return out;
}

BoundingBox2D jitter_bbox(const BoundingBox2D& box, Shape3 bounds, Rng& rng) {
    std::array<double, 4> draws;
    for (double& g : draws) g = normal(rng);
    return jitter_bbox(box, bounds, draws);
}

void render_box(PromptChannel& channel, const BoundingBox2D& box) {
    if (box.slice_index < 0 || box.slice_index >= channel.shape.d) {
        fail(ErrorKind::data, "render_box: slice index out of range");
    }
    const int r0 = std::clamp(box.row_min, 0, channel.shape.h - 1);
    const int r1 = std::clamp(box.row_max, 0, channel.shape.h - 1);
    const int c0 = std::clamp(box.col_min, 0, channel.shape.w - 1);
    const int c1 = std::clamp(box.col_max, 0, channel.shape.w - 1);
    for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) channel.at(box.slice_index, r, c) = 1.0f;
    }
}

PointPrompt sample_point(const Component2D& component, int slice_index, double radius_voxels, Rng& rng) {
    if (component.empty()) fail(ErrorKind::data, "sample_point: empty component");
    const auto& [r, c] = component[uniform_index(rng, component.size())];
    return PointPrompt{slice_index, r, c, radius_voxels};
}

void render_point(PromptChannel& channel, const PointPrompt& p) {
    if (!channel.shape.contains(p.slice_index, p.row, p.col)) {
        fail(ErrorKind::data, "render_point: point out of bounds");
    }
    if (p.radius_voxels <= 0.0) fail(ErrorKind::data, "render_point: radius must be positive");
    const double R = p.radius_voxels;
    const int reach = static_cast<int>(std::ceil(R));
    const int z0 = std::max(0, p.slice_index - reach), z1 = std::min(channel.shape.d - 1, p.slice_index + reach);
    const int r0 = std::max(0, p.row - reach), r1 = std::min(channel.shape.h - 1, p.row + reach);
    const int c0 = std::max(0, p.col - reach), c1 = std::min(channel.shape.w - 1, p.col + reach);
    for (int z = z0; z <= z1; ++z) {
        const double dz = z - p.slice_index;
        for (int r = r0; r <= r1; ++r) {
            const double dr = r - p.row;
            for (int c = c0; c <= c1; ++c) {
                const double dc = c - p.col;
                const double d = std::sqrt(dz * dz + dr * dr + dc * dc);
                if (d >= R) continue;
                const float value = static_cast<float>(1.0 - d / R);
                float& voxel = channel.at(z, r, c);
                voxel = std::max(voxel, value);
            }
        }
    }
}

void validate(const PromptSpec& spec) {
    if (spec.prompts_per_image < 1) {
        fail(ErrorKind::config, "prompt spec: prompts_per_image must be >= 1");
    }
}

double default_point_radius(Shape3 shape) {
    const double mean_edge = (shape.d + shape.h + shape.w) / 3.0;
    return 4.0 * mean_edge / 32.0;
}

PromptChannel simulate_prompts(const Mask3D& mask, const PromptSpec& spec) {
    Rng rng = make_rng(spec.rng_seed);
    return simulate_prompts(mask, spec, rng);
}

PromptChannel simulate_prompts(const Mask3D& mask, const PromptSpec& spec, Rng& rng) {
    validate(spec);
    if (foreground_count(mask) == 0) {
        fail(ErrorKind::data, "simulate_prompts: empty mask, no target to prompt");
    }
    const SliceDistribution dist = slice_area_distribution(mask);
    const double radius = spec.point_radius > 0.0 ? spec.point_radius : default_point_radius(mask.shape);

    PromptChannel channel(mask.shape);
    for (int p = 0; p < spec.prompts_per_image; ++p) {
        const int slice = sample_slice(dist, rng);
        for (const Component2D& comp : connected_components_2d(mask, slice)) {
            if (spec.prompt_type == PromptType::box) {
                BoundingBox2D box = tight_bbox(comp, slice);
                if (spec.jitter_enabled) box = jitter_bbox(box, mask.shape, rng);
                render_box(channel, box);
            } else {
                render_point(channel, sample_point(comp, slice, radius, rng));
            }
        }
    }
    return channel;
}

}  // namespace wsicl
