#pragma once

#include <cstdint>
#include <vector>

namespace xx0 {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// xoshiro256** with splitmix64 seeding. Deterministic across platforms,
/// splittable into independent streams via split(stream).
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed = 0) {
        std::uint64_t sm = seed;
        for (auto& si : s_) si = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Derived generator for stream `k`; streams from distinct k are independent.
    Xoshiro256 split(std::uint64_t k) const {
        std::uint64_t sm = s_[0] ^ (0xd1342543de82ef95ull * (k + 1));
        Xoshiro256 g(0);
        for (auto& si : g.s_) si = splitmix64(sm);
        return g;
    }

    double uniform01() { return (next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), via rejection; avoids modulo bias and keeps
    /// results identical across standard libraries.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(xs[i - 1], xs[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

} // namespace xx0
