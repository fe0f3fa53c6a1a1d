#ifndef QMCDIP_RNG_HPP
#define QMCDIP_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

// Seed derivation for reproducible parallel runs.  One master seed per run;
// every stage, walker, lineage and generation gets its own stream whose seed
// is a splitmix64 hash of the master seed and the identifying tags.  Results
// are therefore independent of thread count and scheduling.

namespace qmcdip {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_tag(std::string_view s) {
  // FNV-1a, also used for file hashes in run manifests
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  return splitmix64(master ^ splitmix64(tag));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage) {
  return derive_seed(master, hash_tag(stage));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return splitmix64(derive_seed(master, a) ^ splitmix64(b + 0x632be59bd9b4e019ull));
}

// Thin wrapper so call sites do not instantiate distributions ad hoc; the
// distribution objects are recreated per call which keeps streams stateless
// across re-seeding boundaries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  std::uint64_t integer(std::uint64_t n) {  // in [0, n)
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_);
  }

  std::mt19937_64& generator() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qmcdip

#endif
