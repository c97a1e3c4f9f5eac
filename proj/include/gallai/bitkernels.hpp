#pragma once

#include <cstddef>
#include <cstdint>

// Word-packed bitset kernels. Per-color neighborhoods are stored as arrays of
// 64-bit words; the degree and union/intersection queries that dominate the
// detectors and the search inner loop all reduce to fused popcounts over one
// or two word spans. A scalar reference implementation always exists; an AVX2
// variant is selected at runtime when the CPU supports it. Both variants are
// equivalence-tested against each other and against a naive bit loop.

namespace gallai::bits {

using Word = std::uint64_t;

inline constexpr std::size_t word_bits = 64;
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t words_for(std::size_t bit_count)
{
    return (bit_count + word_bits - 1) / word_bits;
}

inline void set_bit(Word* w, std::size_t i)
{
    w[i / word_bits] |= Word(1) << (i % word_bits);
}

inline void clear_bit(Word* w, std::size_t i)
{
    w[i / word_bits] &= ~(Word(1) << (i % word_bits));
}

inline bool test_bit(const Word* w, std::size_t i)
{
    return (w[i / word_bits] >> (i % word_bits)) & 1;
}

struct Kernels {
    std::size_t (*popcount)(const Word* a, std::size_t len);
    std::size_t (*popcount_and)(const Word* a, const Word* b, std::size_t len);
    std::size_t (*popcount_or)(const Word* a, const Word* b, std::size_t len);
    std::size_t (*popcount_andnot)(const Word* a, const Word* b, std::size_t len); // |a & ~b|
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);

// Table for an explicit backend; throws std::invalid_argument if unavailable.
const Kernels& kernels(Backend b);

// Runtime-selected table (best available unless force_backend overrode it).
const Kernels& active();
Backend active_backend();

// Test hooks.
void force_backend(Backend b);
void reset_backend();

// Index of the lowest set bit, or npos. Scalar on purpose: callers use it for
// witness extraction, never in a hot loop.
std::size_t find_first(const Word* a, std::size_t len);

} // namespace gallai::bits
