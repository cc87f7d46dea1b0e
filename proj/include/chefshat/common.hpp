#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace chefshat {

// Error taxonomy, mapped to CLI exit codes (usage=2, data/replay=3, agent=4).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AgentFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic RNG. mt19937_64 has a standardized sequence and all bounded
// draws go through our own rejection sampler, so identical seeds give
// identical streams on every platform and toolchain.
class Rng {
 public:
  Rng() : gen_(0) {}
  explicit Rng(uint64_t seed) : gen_(seed) {}

  void seed(uint64_t s) { gen_.seed(s); }

  uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, n).
  uint64_t uniform_int(uint64_t n) {
    if (n == 0) throw ContractViolation("uniform_int: n must be > 0");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform double in [0, 1) with 53 bits of randomness.
  double uniform_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix64 step, used to derive independent seed streams.
inline uint64_t mix_seed(uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t z = a;
  z += 0x9e3779b97f4a7c15ULL * (b + 1);
  z += 0x94d049bb133111ebULL * (c + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace chefshat
