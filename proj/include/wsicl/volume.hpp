#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsicl/error.hpp"

namespace wsicl {

/// Grid extents (D, H, W). Axis 0 (D) is the slicing axis: prompts are
/// placed on 2D slices taken perpendicular to it.
struct Shape3 {
    int d = 0;
    int h = 0;
    int w = 0;

    bool operator==(const Shape3&) const = default;

    std::size_t size() const {
        return static_cast<std::size_t>(d) * static_cast<std::size_t>(h) *
               static_cast<std::size_t>(w);
    }
    std::size_t index(int z, int y, int x) const {
        return (static_cast<std::size_t>(z) * h + y) * w + x;
    }
    bool contains(int z, int y, int x) const {
        return z >= 0 && z < d && y >= 0 && y < h && x >= 0 && x < w;
    }
    std::string str() const;
};

/// Dense row-major 3D grid.
template <typename T>
struct Grid3 {
    Shape3 shape{};
    std::vector<T> data;

    Grid3() = default;
    explicit Grid3(Shape3 s, T fill = T{}) : shape(s), data() {
        if (s.d < 1 || s.h < 1 || s.w < 1) fail(ErrorKind::data, "grid shape must be positive, got " + s.str());
        data.assign(s.size(), fill);
    }

    T& at(int z, int y, int x) { return data[shape.index(z, y, x)]; }
    const T& at(int z, int y, int x) const { return data[shape.index(z, y, x)]; }
    std::size_t size() const { return data.size(); }

    bool operator==(const Grid3&) const = default;
};

using Volume3D = Grid3<float>;         // intensities, finite; [0,1] after normalization
using Mask3D = Grid3<std::uint8_t>;    // strictly {0,1}
using PromptChannel = Grid3<float>;    // rendered prompts, values in [0,1]

enum class PromptType { box, point };

const char* to_string(PromptType t);
PromptType prompt_type_from_string(const std::string& s);

struct ContextPair {
    Volume3D image;
    PromptChannel prompt;
};

/// Ordered context set S = {(x_i, u_i)}, all members sharing one shape.
struct ContextSet {
    std::vector<ContextPair> pairs;
    PromptType prompt_type = PromptType::box;

    std::size_t size() const { return pairs.size(); }
};

void validate_finite(const Volume3D& v, const std::string& what);
void validate_mask(const Mask3D& m, const std::string& what);
void validate_context_set(const ContextSet& s);

/// Affine rescale to [0,1]; constant input maps to all-zeros.
Volume3D minmax_normalize(const Volume3D& v);

/// Trilinear resample. Identity target shape returns a bitwise copy.
Volume3D resize(const Volume3D& v, Shape3 target);

/// Nearest-neighbor resample; output stays strictly binary.
Mask3D resize(const Mask3D& m, Shape3 target);

/// Dice overlap 2|A∩B| / (|A|+|B|); both-empty pairs score 1.0.
double dice(const Mask3D& a, const Mask3D& b);

std::size_t foreground_count(const Mask3D& m);

}  // namespace wsicl
