#include "gallai/bitkernels.hpp"

#include <atomic>
#include <stdexcept>

namespace gallai::bits {

const Kernels& scalar_kernels(); // bitkernels_scalar.cpp
const Kernels* avx2_kernels();   // bitkernels_avx2.cpp; nullptr when not compiled in

namespace {

bool cpu_has_avx2()
{
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect_best()
{
    if (avx2_kernels() != nullptr && cpu_has_avx2())
        return Backend::avx2;
    return Backend::scalar;
}

std::atomic<Backend> g_backend{detect_best()};

} // namespace

const char* backend_name(Backend b)
{
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_available(Backend b)
{
    if (b == Backend::scalar)
        return true;
    return avx2_kernels() != nullptr && cpu_has_avx2();
}

const Kernels& kernels(Backend b)
{
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + backend_name(b));
    if (b == Backend::avx2)
        return *avx2_kernels();
    return scalar_kernels();
}

const Kernels& active()
{
    return kernels(g_backend.load(std::memory_order_relaxed));
}

Backend active_backend()
{
    return g_backend.load(std::memory_order_relaxed);
}

void force_backend(Backend b)
{
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + backend_name(b));
    g_backend.store(b, std::memory_order_relaxed);
}

void reset_backend()
{
    g_backend.store(detect_best(), std::memory_order_relaxed);
}

} // namespace gallai::bits
