#pragma once

#include <array>
#include <cstdint>

namespace ioncav::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds.
inline Counter philox4x32_10(Counter c, Key k)
{
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kW0;
            k[1] += kW1;
        }
        const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
}

/// Uniform doubles in [0, 1) for stream `stream` under `seed`. Counter words
/// are (stream lo, stream hi, block lo, block hi); each block yields two
/// 53-bit doubles.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream)
    {
    }

    double uniform()
    {
        if (used_ == 2) refill();
        return buffer_[used_++];
    }

    std::uint64_t blocks_consumed() const { return block_; }

private:
    void refill()
    {
        const Counter c{static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)};
        const Counter r = philox4x32_10(c, key_);
        ++block_;
        buffer_[0] = to_double(r[0], r[1]);
        buffer_[1] = to_double(r[2], r[3]);
        used_ = 0;
    }

    static double to_double(std::uint32_t hi, std::uint32_t lo)
    {
        const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32 | lo) >> 11;
        return static_cast<double>(bits) * 0x1.0p-53;
    }

    Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    double buffer_[2] = {0, 0};
    int used_ = 2;
};

}  // namespace ioncav::rng
