#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace pftrack {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

namespace detail {

// SplitMix64 finalizer: full-avalanche bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

}  // namespace detail

// Derives a child stream key from (key, id). Used to split one seed into
// decorrelated substreams; distinct ids give distinct children.
constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t id) {
  return detail::mix64((key ^ 0xD1B54A32D192ED03ull) +
                       detail::kGoldenGamma * (id + 1));
}

// Counter-based SplitMix64 stream. The key names the stream, the counter
// advances by one per 64-bit draw, so a value is a pure function of
// (key, draw index). Substreams derive from the key, never from the
// counter, which makes draw order within one stream independent of how
// sibling streams are consumed.
//
// Draw accounting (consumed 64-bit words): uniform01 and uniform take 1,
// normal_pair and normal take 2, uniform_int takes 1.
class RngStream {
 public:
  explicit constexpr RngStream(std::uint64_t key) : key_(key), state_(key) {}

  std::uint64_t next_u64() {
    state_ += detail::kGoldenGamma;
    return detail::mix64(state_);
  }

  // Uniform on the open interval (0, 1): 53-bit resolution, never 0 or 1.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). Modulo bias is ~n/2^64, irrelevant here.
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  // Standard normal pair via Box-Muller; consumes exactly two draws.
  std::pair<double, double> normal_pair() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return {radius * std::cos(2.0 * kPi * u2), radius * std::sin(2.0 * kPi * u2)};
  }

  // Single standard normal; still consumes two draws (the sine half is dropped).
  double normal() { return normal_pair().first; }

  // Child stream for the given id, derived from this stream's key.
  // The caller is responsible for using distinct ids per parent.
  RngStream substream(std::uint64_t id) const { return RngStream(derive_key(key_, id)); }

  RngStream substream(std::uint64_t a, std::uint64_t b) const {
    return substream(a).substream(b);
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t state_;
};

}  // namespace pftrack
