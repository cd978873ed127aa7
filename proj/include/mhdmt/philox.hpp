// SPDX-License-Identifier: Apache-2.0
//
// mhdmt - diversity and outage analysis for MIMO multihop relay channels
// Copyright (C) 2026 mhdmt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MHDMT_PHILOX_HPP
#define MHDMT_PHILOX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace mhdmt
{

/// Philox4x32-10 counter-based generator.
///
/// A stream is addressed by (seed, stream_hi, stream_lo); the output is a pure
/// function of that address and the running block counter, so per-trial streams
/// keyed by (master_seed, snr_index, trial_index) produce identical numbers
/// under any parallel schedule. Counter layout: word0 = block counter,
/// words1/2 = stream_lo, word3 = stream_hi; the key is the 64-bit seed.
class PhiloxStream
{
  public:
    PhiloxStream(std::uint64_t seed, std::uint32_t stream_hi, std::uint64_t stream_lo)
        : key0_(static_cast<std::uint32_t>(seed)), key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr1_(static_cast<std::uint32_t>(stream_lo)), ctr2_(static_cast<std::uint32_t>(stream_lo >> 32)),
          ctr3_(stream_hi)
    {
    }

    std::uint32_t next_u32()
    {
        if (pos_ == 4)
            refill();
        return block_[pos_++];
    }

    std::uint64_t next_u64()
    {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; pairs are cached.
    double next_gaussian()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        // 1 - u lies in (0, 1], keeping the log argument away from zero.
        const double u = 1.0 - next_double();
        const double v = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u));
        const double angle = 6.283185307179586476925286766559 * v;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Circularly-symmetric complex Gaussian, zero mean, unit variance
    /// (real and imaginary parts each of variance 1/2).
    std::complex<double> next_cn()
    {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re * 0.70710678118654752440, im * 0.70710678118654752440};
    }

  private:
    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo)
    {
        const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(prod >> 32);
        lo = static_cast<std::uint32_t>(prod);
    }

    void refill()
    {
        std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
        std::uint32_t c1 = ctr1_;
        std::uint32_t c2 = ctr2_;
        std::uint32_t c3 = ctr3_;
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round)
        {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(0xD2511F53u, c0, hi0, lo0);
            mulhilo(0xCD9E8D57u, c2, hi1, lo1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        block_ = {c0, c1, c2, c3};
        ++counter_;
        pos_ = 0;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t ctr1_, ctr2_, ctr3_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace mhdmt

#endif
