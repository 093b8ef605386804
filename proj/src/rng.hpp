#ifndef CREDEQ_RNG_HPP
#define CREDEQ_RNG_HPP

#include <array>
#include <cstdint>

namespace credeq {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// A substream is addressed by (seed, stream id, purpose tag); draws are a pure
// function of that address and the draw counter, so path-level results do not
// depend on how work is split across threads.
namespace philox {

std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                   const std::array<std::uint32_t, 2>& key);

} // namespace philox

// Purpose tags keep logically independent randomness on disjoint substreams,
// e.g. Brownian increments vs. the exponential default trigger on the same path.
enum class StreamPurpose : std::uint32_t {
  brownian = 0x1,
  default_trigger = 0x2,
  bootstrap = 0x3,
  generic = 0x4,
};

class Substream {
public:
  Substream(std::uint64_t seed, std::uint64_t stream_id, StreamPurpose purpose);

  std::uint64_t next_u64();

  // Uniform on the open interval (0,1).
  double uniform01();

  // Standard normal via Box-Muller; second deviate is cached.
  double normal();

  // Unit-rate exponential.
  double exponential();

private:
  std::uint32_t next_u32();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

} // namespace credeq

#endif
