#include <cstdlib>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/kernels.hpp"

namespace subsel::kernels {

bool available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(SUBSEL_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(SUBSEL_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa) {
    if (!available(isa)) throw InvalidArgument("kernel variant not available: " + std::string(name(isa)));
    switch (isa) {
#if defined(SUBSEL_HAVE_AVX2)
        case Isa::avx2:
            return avx2_table();
#endif
#if defined(SUBSEL_HAVE_NEON)
        case Isa::neon:
            return neon_table();
#endif
        default:
            return scalar_table();
    }
}

std::string_view name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

namespace {

Isa detect() {
    if (const char* forced = std::getenv("SUBSEL_ISA")) {
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (name(isa) == forced && available(isa)) return isa;
    }
    if (available(Isa::avx2)) return Isa::avx2;
    if (available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

const KernelTable& active() {
    static const KernelTable& t = table(active_isa());
    return t;
}

}  // namespace subsel::kernels
