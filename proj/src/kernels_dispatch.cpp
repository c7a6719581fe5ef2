#include "ac/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ac::kernels {
namespace {

const Kernels* pick_auto() {
    if (const Kernels* k = avx2()) return k;
    return &scalar();
}

const Kernels*& slot() {
    static const Kernels* current = [] {
        if (const char* env = std::getenv("AC_KERNELS")) {
            const std::string s(env);
            if (s == "scalar") return &scalar();
            if (s == "avx2") {
                if (const Kernels* k = avx2()) return k;
                throw std::runtime_error("AC_KERNELS=avx2 but the CPU lacks AVX2");
            }
        }
        return pick_auto();
    }();
    return current;
}

}  // namespace

const Kernels& active() { return *slot(); }

void force(const std::string& which) {
    if (which == "scalar") {
        slot() = &scalar();
    } else if (which == "avx2") {
        const Kernels* k = avx2();
        if (!k) throw std::runtime_error("AVX2 kernels not available on this CPU");
        slot() = k;
    } else if (which == "auto") {
        slot() = pick_auto();
    } else {
        throw std::invalid_argument("unknown kernel set: " + which);
    }
}

}  // namespace ac::kernels
