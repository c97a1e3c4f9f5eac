#include "gallai/bitkernels.hpp"

// Compiled with -mavx2 on x86-64 (see src/CMakeLists.txt). AVX2 has no vector
// popcount instruction, so the kernels use the nibble-LUT shuffle scheme:
// split each byte into two nibbles, look both up in a per-lane table of bit
// counts, add, then horizontally sum bytes into 64-bit lanes with VPSADBW.

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace gallai::bits {

namespace {

inline __m256i popcnt_bytes(__m256i v)
{
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t reduce(__m256i acc)
{
    alignas(32) Word lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

enum class Op { copy, and_, or_, andnot };

template <Op op>
std::size_t run(const Word* a, const Word* b, std::size_t len)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i v;
        if constexpr (op == Op::copy) {
            v = va;
        } else {
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
            if constexpr (op == Op::and_)
                v = _mm256_and_si256(va, vb);
            else if constexpr (op == Op::or_)
                v = _mm256_or_si256(va, vb);
            else
                v = _mm256_andnot_si256(vb, va); // (~vb) & va
        }
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcnt_bytes(v), _mm256_setzero_si256()));
    }
    std::size_t total = reduce(acc);
    for (; i < len; ++i) {
        Word w;
        if constexpr (op == Op::copy)
            w = a[i];
        else if constexpr (op == Op::and_)
            w = a[i] & b[i];
        else if constexpr (op == Op::or_)
            w = a[i] | b[i];
        else
            w = a[i] & ~b[i];
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t pc(const Word* a, std::size_t len) { return run<Op::copy>(a, nullptr, len); }
std::size_t pc_and(const Word* a, const Word* b, std::size_t len) { return run<Op::and_>(a, b, len); }
std::size_t pc_or(const Word* a, const Word* b, std::size_t len) { return run<Op::or_>(a, b, len); }
std::size_t pc_andnot(const Word* a, const Word* b, std::size_t len) { return run<Op::andnot>(a, b, len); }

} // namespace

const Kernels* avx2_kernels()
{
    static const Kernels table{pc, pc_and, pc_or, pc_andnot};
    return &table;
}

} // namespace gallai::bits

#else

namespace gallai::bits {

const Kernels* avx2_kernels()
{
    return nullptr;
}

} // namespace gallai::bits

#endif
