#include "wsicl/volb.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little, "VOLB I/O assumes a little-endian host");
static_assert(sizeof(float) == 4, "VOLB f32 payload assumes 4-byte float");

namespace wsicl {

namespace {

using nlohmann::json;

std::string sidecar_path(const std::string& path) { return path + ".json"; }

void write_file(const std::string& path, const char* bytes, std::size_t n) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorKind::io, "cannot open '" + path + "' for writing");
    f.write(bytes, static_cast<std::streamsize>(n));
    if (!f) fail(ErrorKind::io, "write failed for '" + path + "'");
}

void write_header(const std::string& path, Shape3 shape, const char* dtype) {
    json h;
    h["shape"] = {shape.d, shape.h, shape.w};
    h["dtype"] = dtype;
    h["order"] = "row-major";
    h["endianness"] = "little";
    h["axes"] = "DHW (axis 0 is the slicing axis)";
    const std::string text = h.dump(2) + "\n";
    write_file(sidecar_path(path), text.data(), text.size());
}

struct Header {
    Shape3 shape;
    VolbDtype dtype;
};

Header read_header(const std::string& path) {
    std::ifstream f(sidecar_path(path));
    if (!f) fail(ErrorKind::io, "cannot open VOLB header '" + sidecar_path(path) + "'");
    json h;
    try {
        f >> h;
    } catch (const json::exception& e) {
        fail(ErrorKind::io, "corrupt VOLB header '" + sidecar_path(path) + "': " + e.what());
    }
    Header out;
    try {
        const auto shape = h.at("shape");
        if (!shape.is_array() || shape.size() != 3) throw json::other_error::create(501, "shape must be [D,H,W]", &h);
        out.shape = Shape3{shape[0].get<int>(), shape[1].get<int>(), shape[2].get<int>()};
        const std::string dtype = h.at("dtype").get<std::string>();
        if (dtype == "f32") {
            out.dtype = VolbDtype::f32;
        } else if (dtype == "u8") {
            out.dtype = VolbDtype::u8;
        } else {
            fail(ErrorKind::io, "VOLB header '" + path + "': unsupported dtype '" + dtype + "'");
        }
        if (h.at("order").get<std::string>() != "row-major") {
            fail(ErrorKind::io, "VOLB header '" + path + "': unsupported order");
        }
        if (h.at("endianness").get<std::string>() != "little") {
            fail(ErrorKind::io, "VOLB header '" + path + "': unsupported endianness");
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::io, "corrupt VOLB header '" + sidecar_path(path) + "': " + e.what());
    }
    if (out.shape.d < 1 || out.shape.h < 1 || out.shape.w < 1) {
        fail(ErrorKind::io, "VOLB header '" + path + "': non-positive shape " + out.shape.str());
    }
    return out;
}

std::vector<char> read_payload(const std::string& path, std::size_t expected_bytes) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) fail(ErrorKind::io, "cannot open VOLB payload '" + path + "'");
    const auto size = static_cast<std::size_t>(f.tellg());
    if (size != expected_bytes) {
        fail(ErrorKind::io, "VOLB payload '" + path + "': expected " + std::to_string(expected_bytes) +
                                " bytes per header, found " + std::to_string(size));
    }
    std::vector<char> bytes(size);
    f.seekg(0);
    f.read(bytes.data(), static_cast<std::streamsize>(size));
    if (!f) fail(ErrorKind::io, "read failed for '" + path + "'");
    return bytes;
}

}  // namespace

void save_volume(const std::string& path, const Volume3D& v) {
    if (v.data.empty()) fail(ErrorKind::data, "save_volume: empty volume");
    validate_finite(v, "save_volume");
    write_header(path, v.shape, "f32");
    write_file(path, reinterpret_cast<const char*>(v.data.data()), v.data.size() * sizeof(float));
}

void save_mask(const std::string& path, const Mask3D& m) {
    if (m.data.empty()) fail(ErrorKind::data, "save_mask: empty mask");
    validate_mask(m, "save_mask");
    write_header(path, m.shape, "u8");
    write_file(path, reinterpret_cast<const char*>(m.data.data()), m.data.size());
}

VolbDtype volb_dtype(const std::string& path) { return read_header(path).dtype; }

Volume3D load_volume(const std::string& path) {
    const Header h = read_header(path);
    if (h.dtype != VolbDtype::f32) {
        fail(ErrorKind::io, "load_volume: '" + path + "' holds u8 data (use load_mask)");
    }
    const auto bytes = read_payload(path, h.shape.size() * sizeof(float));
    Volume3D v(h.shape);
    std::memcpy(v.data.data(), bytes.data(), bytes.size());
    validate_finite(v, "load_volume '" + path + "'");
    return v;
}

Mask3D load_mask(const std::string& path) {
    const Header h = read_header(path);
    if (h.dtype != VolbDtype::u8) {
        fail(ErrorKind::io, "load_mask: '" + path + "' holds f32 data (use load_volume)");
    }
    const auto bytes = read_payload(path, h.shape.size());
    Mask3D m(h.shape);
    std::memcpy(m.data.data(), bytes.data(), bytes.size());
    validate_mask(m, "load_mask '" + path + "'");
    return m;
}

}  // namespace wsicl
