#include "pancake/checkpoint.hpp"

#include <boost/crc.hpp>

#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>

namespace pancake {
namespace {

constexpr char kMagic[4] = {'P', 'K', 'L', 'S'};
constexpr std::size_t kHeaderBytes = 4 + 4 + 1 + 1 + 4 + 4;

class Writer {
 public:
  explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }

 private:
  std::vector<std::uint8_t>& out_;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}
  void need(std::size_t n) const {
    if (pos_ + n > size_) throw CheckpointError("checkpoint truncated");
  }
  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_++]) << (8 * i);
    return v;
  }
  std::size_t position() const { return pos_; }

 private:
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t crc32c(const std::uint8_t* data, std::size_t size) {
  boost::crc_optimal<32, 0x1EDC6F41, 0xFFFFFFFF, 0xFFFFFFFF, true, true> crc;
  crc.process_bytes(data, size);
  return crc.checksum();
}

std::vector<std::uint8_t> encode_checkpoint(const SearchCheckpoint& cp) {
  const std::uint64_t size = cp.graph.order();
  if (cp.visited.size() != size || cp.frontier.size() != size) {
    throw CheckpointError("bit arrays do not match the graph order");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + 8 * cp.counts.size() + 8 * (cp.visited.word_count() * 2) + 4);
  Writer w(out);
  for (char c : kMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u32(kCheckpointVersion);
  w.u8(static_cast<std::uint8_t>(cp.graph.kind));
  w.u8(static_cast<std::uint8_t>(cp.graph.n));
  w.u32(cp.completed_layer);
  w.u32(static_cast<std::uint32_t>(cp.counts.size()));
  for (auto c : cp.counts) w.u64(c);
  for (auto word : cp.visited.words()) w.u64(word);
  for (auto word : cp.frontier.words()) w.u64(word);
  w.u32(crc32c(out.data(), out.size()));
  return out;
}

SearchCheckpoint decode_checkpoint(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderBytes + 4) throw CheckpointError("checkpoint truncated");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw CheckpointError("not a checkpoint (bad magic)");

  Reader r(bytes.data(), bytes.size());
  for (int i = 0; i < 4; ++i) r.u8();
  const std::uint32_t version = r.u32();
  if (version != kCheckpointVersion) {
    throw CheckpointError("checkpoint version " + std::to_string(version) + " not supported (expected " +
                          std::to_string(kCheckpointVersion) + ")");
  }
  const std::uint8_t kind = r.u8();
  const std::uint8_t n = r.u8();
  if (kind > 1) throw CheckpointError("checkpoint has unknown graph kind " + std::to_string(kind));

  SearchCheckpoint cp;
  try {
    cp.graph = GraphKind::make(static_cast<Kind>(kind), n);
    (void)cp.graph.order();
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("checkpoint has invalid graph shape: ") + e.what());
  }
  cp.completed_layer = r.u32();
  const std::uint32_t layers = r.u32();
  const std::uint64_t size = cp.graph.order();
  const std::uint64_t words = BitArray::words_for(size);
  const std::uint64_t expected = kHeaderBytes + 8ull * layers + 16ull * words + 4;
  if (bytes.size() != expected) {
    throw CheckpointError("checkpoint length " + std::to_string(bytes.size()) + " does not match header (expected " +
                          std::to_string(expected) + ")");
  }
  const std::size_t body = bytes.size() - 4;
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) stored |= static_cast<std::uint32_t>(bytes[body + i]) << (8 * i);
  if (stored != crc32c(bytes.data(), body)) throw CheckpointError("checkpoint checksum mismatch");

  if (layers != cp.completed_layer + 1) {
    throw CheckpointError("checkpoint layer count inconsistent with completed layer");
  }
  cp.counts.resize(layers);
  for (auto& c : cp.counts) c = r.u64();
  cp.visited = BitArray(size);
  cp.frontier = BitArray(size);
  for (auto& word : cp.visited.words()) word = r.u64();
  for (auto& word : cp.frontier.words()) word = r.u64();

  const std::uint64_t recorded = std::accumulate(cp.counts.begin(), cp.counts.end(), std::uint64_t{0});
  if (cp.visited.popcount() != recorded) {
    throw CheckpointError("checkpoint visited popcount disagrees with recorded layer counts");
  }
  return cp;
}

void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp) {
  const auto bytes = encode_checkpoint(cp);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot open checkpoint for writing: " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw CheckpointError("failed writing checkpoint: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("failed to move checkpoint into place: " + ec.message());
}

SearchCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint: " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_checkpoint(bytes);
}

SearchCheckpoint read_checkpoint(const std::filesystem::path& path, const GraphKind& expected) {
  auto cp = read_checkpoint(path);
  if (!(cp.graph == expected)) {
    throw CheckpointError("checkpoint is for " + cp.graph.name() + ", expected " + expected.name());
  }
  return cp;
}

}  // namespace pancake
