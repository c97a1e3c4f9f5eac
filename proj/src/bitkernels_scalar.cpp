#include "gallai/bitkernels.hpp"

#include <bit>

namespace gallai::bits {

namespace {

std::size_t pc(const Word* a, std::size_t len)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < len; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t pc_and(const Word* a, const Word* b, std::size_t len)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < len; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t pc_or(const Word* a, const Word* b, std::size_t len)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < len; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
    return total;
}

std::size_t pc_andnot(const Word* a, const Word* b, std::size_t len)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < len; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
    return total;
}

} // namespace

const Kernels& scalar_kernels()
{
    static const Kernels table{pc, pc_and, pc_or, pc_andnot};
    return table;
}

std::size_t find_first(const Word* a, std::size_t len)
{
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] != 0)
            return i * word_bits + static_cast<std::size_t>(std::countr_zero(a[i]));
    return npos;
}

} // namespace gallai::bits
