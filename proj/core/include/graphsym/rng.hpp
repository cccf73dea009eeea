#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace graphsym {

/// PCG32 (XSH-RR, 64-bit state) with Fisher-Yates shuffling.
///
/// All randomness in the library flows through this type. The output
/// sequence depends only on (seed, stream), never on the platform or the
/// standard library, so shuffles and relabelings are reproducible
/// byte-for-byte across machines.
class RngStream {
 public:
  static constexpr std::uint64_t kDefaultStream = 0xda3e39cb94b95bdbULL;

  explicit RngStream(std::uint64_t seed,
                     std::uint64_t stream = kDefaultStream) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;

  /// Uniform integer in [0, bound). Unbiased (rejection sampling).
  std::uint32_t bounded(std::uint32_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Standard normal deviate (Box-Muller, no cached second value).
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

  /// In-place Fisher-Yates, walking from the back.
  template <class T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = bounded(static_cast<std::uint32_t>(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_ = 0;
  std::uint64_t increment_ = 0;
};

/// Derives a child seed from a base seed and a tag (splitmix64 over FNV-1a).
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) noexcept;

}  // namespace graphsym
