#include "wsicl/volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsicl {

std::string Shape3::str() const {
    return "(" + std::to_string(d) + ", " + std::to_string(h) + ", " + std::to_string(w) + ")";
}

const char* to_string(PromptType t) { return t == PromptType::box ? "box" : "point"; }

PromptType prompt_type_from_string(const std::string& s) {
    if (s == "box") return PromptType::box;
    if (s == "point") return PromptType::point;
    fail(ErrorKind::config, "unknown prompt type '" + s + "' (expected 'box' or 'point')");
}

void validate_finite(const Volume3D& v, const std::string& what) {
    for (const float x : v.data) {
        if (!std::isfinite(x)) fail(ErrorKind::data, what + ": non-finite voxel value");
    }
}

void validate_mask(const Mask3D& m, const std::string& what) {
    for (const std::uint8_t x : m.data) {
        if (x > 1) fail(ErrorKind::data, what + ": mask voxel out of {0,1}");
    }
}

void validate_context_set(const ContextSet& s) {
    if (s.pairs.empty()) fail(ErrorKind::data, "context set must contain at least one pair");
    const Shape3 shape = s.pairs.front().image.shape;
    for (const auto& p : s.pairs) {
        if (p.image.shape != shape || p.prompt.shape != shape) {
            fail(ErrorKind::data, "context set members must share one shape");
        }
    }
}

Volume3D minmax_normalize(const Volume3D& v) {
    if (v.data.empty()) fail(ErrorKind::data, "minmax_normalize: empty volume");
    validate_finite(v, "minmax_normalize");
    const auto [mn_it, mx_it] = std::minmax_element(v.data.begin(), v.data.end());
    const float mn = *mn_it, mx = *mx_it;
    Volume3D out(v.shape);
    if (mn == mx) return out;  // constant volume carries no intensity information
    const float range = mx - mn;
    for (std::size_t i = 0; i < v.data.size(); ++i) out.data[i] = (v.data[i] - mn) / range;
    return out;
}

namespace {

void check_target(Shape3 target) {
    if (target.d < 1 || target.h < 1 || target.w < 1) {
        fail(ErrorKind::data, "resize: target shape must be positive, got " + target.str());
    }
}

// Half-pixel (align-centers) source coordinate for output index i.
inline double src_coord(int i, int n_out, int n_in) {
    return (i + 0.5) * (static_cast<double>(n_in) / n_out) - 0.5;
}

inline int clamp_idx(long v, int n) {
    return static_cast<int>(std::clamp(v, 0L, static_cast<long>(n - 1)));
}

}  // namespace

Volume3D resize(const Volume3D& v, Shape3 target) {
    check_target(target);
    if (v.data.empty()) fail(ErrorKind::data, "resize: empty volume");
    if (target == v.shape) return v;

    Volume3D out(target);
    const Shape3 in = v.shape;
    for (int z = 0; z < target.d; ++z) {
        const double sz = src_coord(z, target.d, in.d);
        const int z0 = clamp_idx(static_cast<long>(std::floor(sz)), in.d);
        const int z1 = std::min(z0 + 1, in.d - 1);
        const float fz = static_cast<float>(std::clamp(sz - z0, 0.0, 1.0));
        for (int y = 0; y < target.h; ++y) {
            const double sy = src_coord(y, target.h, in.h);
            const int y0 = clamp_idx(static_cast<long>(std::floor(sy)), in.h);
            const int y1 = std::min(y0 + 1, in.h - 1);
            const float fy = static_cast<float>(std::clamp(sy - y0, 0.0, 1.0));
            for (int x = 0; x < target.w; ++x) {
                const double sx = src_coord(x, target.w, in.w);
                const int x0 = clamp_idx(static_cast<long>(std::floor(sx)), in.w);
                const int x1 = std::min(x0 + 1, in.w - 1);
                const float fx = static_cast<float>(std::clamp(sx - x0, 0.0, 1.0));

                // Nested lerps: exact for constant inputs.
                auto lerp = [](float a, float b, float f) { return a + f * (b - a); };
                const float c00 = lerp(v.at(z0, y0, x0), v.at(z0, y0, x1), fx);
                const float c01 = lerp(v.at(z0, y1, x0), v.at(z0, y1, x1), fx);
                const float c10 = lerp(v.at(z1, y0, x0), v.at(z1, y0, x1), fx);
                const float c11 = lerp(v.at(z1, y1, x0), v.at(z1, y1, x1), fx);
                out.at(z, y, x) = lerp(lerp(c00, c01, fy), lerp(c10, c11, fy), fz);
            }
        }
    }
    return out;
}

Mask3D resize(const Mask3D& m, Shape3 target) {
    check_target(target);
    if (m.data.empty()) fail(ErrorKind::data, "resize: empty mask");
    validate_mask(m, "resize");
    if (target == m.shape) return m;

    Mask3D out(target);
    const Shape3 in = m.shape;
    for (int z = 0; z < target.d; ++z) {
        const int iz = clamp_idx(std::lround(src_coord(z, target.d, in.d)), in.d);
        for (int y = 0; y < target.h; ++y) {
            const int iy = clamp_idx(std::lround(src_coord(y, target.h, in.h)), in.h);
            for (int x = 0; x < target.w; ++x) {
                const int ix = clamp_idx(std::lround(src_coord(x, target.w, in.w)), in.w);
                out.at(z, y, x) = m.at(iz, iy, ix);
            }
        }
    }
    return out;
}

double dice(const Mask3D& a, const Mask3D& b) {
    if (a.shape != b.shape) {
        fail(ErrorKind::data, "dice: shape mismatch " + a.shape.str() + " vs " + b.shape.str());
    }
    validate_mask(a, "dice");
    validate_mask(b, "dice");
    std::size_t inter = 0, total = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        inter += static_cast<std::size_t>(a.data[i] & b.data[i]);
        total += static_cast<std::size_t>(a.data[i]) + b.data[i];
    }
    if (total == 0) return 1.0;  // both empty: perfect agreement by convention
    return 2.0 * static_cast<double>(inter) / static_cast<double>(total);
}

std::size_t foreground_count(const Mask3D& m) {
    std::size_t n = 0;
    for (const std::uint8_t x : m.data) n += x;
    return n;
}

}  // namespace wsicl
