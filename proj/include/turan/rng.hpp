#ifndef TURAN_RNG_HPP
#define TURAN_RNG_HPP

#include <cstdint>

namespace turan {

// Splittable deterministic generator (splitmix64). All randomness in the
// tool flows from a single 64-bit seed through this, so runs are
// reproducible across platforms and thread counts.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Independent child stream; advances this stream by one draw.
    Rng split() { return Rng(next_u64() ^ 0xd2b74407b1ce6e93ull); }

  private:
    std::uint64_t state_;
};

} // namespace turan

#endif
