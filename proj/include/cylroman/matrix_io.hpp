#pragma once

// TRPM on-disk format, little-endian throughout:
//
//   offset  size     field
//   0       4        magic "TRPM"
//   4       4        version (u32) = 1
//   8       8        dim (u64)
//   16      4*dim^2  entries, row-major, i32; 2147483647 is infinity

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cylroman/errors.hpp"
#include "cylroman/tropical.hpp"

namespace cylroman {

inline constexpr std::uint32_t kTrpmVersion = 1;
inline constexpr std::size_t kTrpmHeaderBytes = 16;

std::vector<std::uint8_t> encode_matrix(const TropMatrixI& a);
TropMatrixI decode_matrix(std::span<const std::uint8_t> bytes);

void write_matrix(const TropMatrixI& a, const std::filesystem::path& path);
TropMatrixI read_matrix(const std::filesystem::path& path);

/// FNV-1a over the encoded form; used to key power caches.
std::uint64_t content_hash(const TropMatrixI& a);

}  // namespace cylroman
