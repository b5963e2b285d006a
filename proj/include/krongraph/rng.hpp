#pragma once

#include <cstdint>

namespace krongraph {

// splitmix64 finalizer (Steele/Lea/Vigna).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

// Splittable random stream: the state is derived from (seed, stream id) and
// advanced with the splitmix64 increment. Every consumer owns a stream id, so
// output never depends on thread count or interleaving.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : state_(mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^
                     mix64(stream + 0xd1b54a32d192ed03ull))) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Stream-id namespaces. Edge chunks use their chunk index directly, so other
// purposes live in the upper half of the id space.
inline constexpr std::uint64_t kNoiseStreamBase = 0x8000000000000000ull;
inline constexpr std::uint64_t kEigenStreamBase = 0xc000000000000000ull;

}  // namespace krongraph
