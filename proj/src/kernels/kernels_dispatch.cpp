#include "moodflow/kernels.hpp"

#include "moodflow/error.hpp"

namespace moodflow::kernels {

extern const Ops kScalarOps;
#ifdef MOODFLOW_HAVE_AVX2
extern const Ops kAvx2Ops;
#endif

namespace {

bool cpu_has_avx2() {
#ifdef MOODFLOW_HAVE_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* initial_ops() {
    return cpu_has_avx2() ?
#ifdef MOODFLOW_HAVE_AVX2
                          &kAvx2Ops
#else
                          &kScalarOps
#endif
                          : &kScalarOps;
}

// Process-global active table; selected once at startup, overridable by
// select() before any numeric work (tests flip it between runs).
const Ops* g_active = initial_ops();

} // namespace

std::vector<Backend> available_backends() {
    std::vector<Backend> out = {Backend::Scalar};
    if (cpu_has_avx2()) out.push_back(Backend::Avx2);
    return out;
}

const Ops& ops_for(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return kScalarOps;
    case Backend::Avx2:
#ifdef MOODFLOW_HAVE_AVX2
        if (cpu_has_avx2()) return kAvx2Ops;
#endif
        throw_internal("avx2 backend not available on this machine");
    }
    throw_internal("unknown kernel backend");
}

const Ops& active_ops() { return *g_active; }

bool select(Backend b) {
    switch (b) {
    case Backend::Scalar:
        g_active = &kScalarOps;
        return true;
    case Backend::Avx2:
#ifdef MOODFLOW_HAVE_AVX2
        if (cpu_has_avx2()) {
            g_active = &kAvx2Ops;
            return true;
        }
#endif
        return false;
    }
    return false;
}

Backend active_backend() {
#ifdef MOODFLOW_HAVE_AVX2
    if (g_active == &kAvx2Ops) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

std::string_view backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

} // namespace moodflow::kernels
