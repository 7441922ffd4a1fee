#ifndef ADAPL_RNG_HPP
#define ADAPL_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace adapl {

/// Seeded random stream. Every sample drawn in an experiment comes from one of these.
///
/// The same seed reproduces a bit-identical sequence on the same build. The
/// distribution algorithms are those of the standard library the build links.
class RngStream {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/std-distributions";

  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return normal_(engine_); }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace adapl

#endif  // ADAPL_RNG_HPP
