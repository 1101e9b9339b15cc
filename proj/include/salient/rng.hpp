#ifndef SALIENT_RNG_HPP
#define SALIENT_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace salient {

// Deterministic PRNG with a fixed algorithm so that seeded runs reproduce
// bit-exactly across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // splitmix64 warm-up so nearby seeds decorrelate
    next_u64();
    next_u64();
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // uniform in [0, 1)
  double next_double() { return double(next_u64() >> 11) * (1.0 / 9007199254740992.0); }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // standard normal via Box-Muller
  double next_gauss();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = size_t(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a, used to derive independent per-stage seeds from one global seed.
uint64_t fnv1a64(std::string_view s);
uint64_t stage_seed(uint64_t global_seed, std::string_view stage);

}  // namespace salient

#endif
