#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancake/bit_array.hpp"
#include "pancake/cayley.hpp"

namespace pancake {

inline constexpr std::uint32_t kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// BFS state after a finished layer.
///
/// `frontier` holds the vertices of layer `completed_layer` that still need
/// expanding; it is empty once the search has exhausted the graph.
struct SearchCheckpoint {
  GraphKind graph;
  std::uint32_t completed_layer = 0;
  std::vector<std::uint64_t> counts;
  BitArray visited;
  BitArray frontier;

  bool terminal() const { return frontier.none(); }
};

/// Little-endian layout:
///   "PKLS" | u32 version | u8 kind | u8 n | u32 completed_layer | u32 layer count
///   | u64 counts[] | u64 visited words[] | u64 frontier words[] | u32 CRC-32C
///
/// Written to a sibling temporary file and renamed into place.
void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp);

/// Validates magic, version, shape, length, checksum and the popcount invariant.
SearchCheckpoint read_checkpoint(const std::filesystem::path& path);

/// Same checks as read_checkpoint; additionally rejects a graph other than `expected`.
SearchCheckpoint read_checkpoint(const std::filesystem::path& path, const GraphKind& expected);

std::vector<std::uint8_t> encode_checkpoint(const SearchCheckpoint& cp);
SearchCheckpoint decode_checkpoint(const std::vector<std::uint8_t>& bytes);

/// CRC-32C (Castagnoli) of a byte range.
std::uint32_t crc32c(const std::uint8_t* data, std::size_t size);

}  // namespace pancake
