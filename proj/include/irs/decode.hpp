#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "irs/types.hpp"

namespace irs {

// Decodes a PNG, JPEG (baseline or progressive) or BMP byte stream.
// Throws UnsupportedFormat for unknown data, CorruptFile for damaged files.
RgbImage decode_image(std::span<const std::uint8_t> bytes);

// Reads a file and decodes it. Throws IoError if the file cannot be read.
RgbImage load_image(const std::filesystem::path& path);

}  // namespace irs
