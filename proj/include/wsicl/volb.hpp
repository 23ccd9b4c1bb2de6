#pragma once

#include <string>

#include "wsicl/volume.hpp"

namespace wsicl {

// Portable "VOLB" volume format: a raw little-endian binary payload at
// `path` plus a JSON sidecar header at `path + ".json"`:
//   {"shape":[D,H,W], "dtype":"f32"|"u8", "order":"row-major",
//    "endianness":"little", "axes":"DHW (axis 0 is the slicing axis)"}
// Masks use dtype u8 with values {0,1}; volumes and prompt channels use f32.

enum class VolbDtype { f32, u8 };

void save_volume(const std::string& path, const Volume3D& v);
void save_mask(const std::string& path, const Mask3D& m);

/// Reads the sidecar header only.
VolbDtype volb_dtype(const std::string& path);

Volume3D load_volume(const std::string& path);  // requires dtype f32
Mask3D load_mask(const std::string& path);      // requires dtype u8

}  // namespace wsicl
