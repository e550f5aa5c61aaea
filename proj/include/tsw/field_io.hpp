#pragma once

#include <filesystem>
#include <string>

#include "tsw/field.hpp"

namespace tsw {

// "TSWF" container: magic, u32 version (=1), u32 n, u32 N, f64 L, u8
// representation flag (0 physical, 1 frequency), then N^n interleaved
// little-endian f64 (re, im) pairs in row-major order, last axis fastest.
void write_field(const std::filesystem::path& path, const Field& field);
Field read_field(const std::filesystem::path& path);

// write-temp-then-rename helper shared by all file emitters.
void write_file_atomically(const std::filesystem::path& path,
                           const std::string& bytes);

}  // namespace tsw
