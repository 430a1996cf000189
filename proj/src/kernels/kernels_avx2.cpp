// AVX2 kernels. This TU is compiled with -mavx2 (and -ffp-contract=off);
// nothing else in the library may call these symbols except through the
// dispatch table, so the rest of the binary stays runnable on non-AVX2 CPUs.
//
// Bitwise equivalence with the scalar kernels relies on every lane op being
// a single correctly-rounded IEEE-754 instruction (vaddpd, vmulpd, vdivpd,
// vsqrtpd) and on sumsq6 using the same fixed reduction tree.
#include "moodflow/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace moodflow::kernels {

namespace avx2 {

inline __m256d lo(const Vec8d& a) { return _mm256_load_pd(a.v); }
inline __m256d hi(const Vec8d& a) { return _mm256_load_pd(a.v + 4); }
inline void store(Vec8d& out, __m256d l, __m256d h) {
    _mm256_store_pd(out.v, l);
    _mm256_store_pd(out.v + 4, h);
}

void add(Vec8d& acc, const Vec8d& x) {
    store(acc, _mm256_add_pd(lo(acc), lo(x)), _mm256_add_pd(hi(acc), hi(x)));
}

void sub(Vec8d& out, const Vec8d& a, const Vec8d& b) {
    store(out, _mm256_sub_pd(lo(a), lo(b)), _mm256_sub_pd(hi(a), hi(b)));
}

void mul(Vec8d& out, const Vec8d& a, const Vec8d& b) {
    store(out, _mm256_mul_pd(lo(a), lo(b)), _mm256_mul_pd(hi(a), hi(b)));
}

void scale(Vec8d& out, const Vec8d& a, double s) {
    const __m256d vs = _mm256_set1_pd(s);
    store(out, _mm256_mul_pd(lo(a), vs), _mm256_mul_pd(hi(a), vs));
}

void div_scalar(Vec8d& out, const Vec8d& a, double s) {
    const __m256d vs = _mm256_set1_pd(s);
    store(out, _mm256_div_pd(lo(a), vs), _mm256_div_pd(hi(a), vs));
}

void sqrt_lanes(Vec8d& out, const Vec8d& a) {
    store(out, _mm256_sqrt_pd(lo(a)), _mm256_sqrt_pd(hi(a)));
}

double sumsq6(const Vec8d& a) {
    // Extract squared lanes, then reduce with the pinned scalar tree; the
    // tree order is the contract, not a performance detail.
    const __m256d l = lo(a);
    const __m256d h = hi(a);
    alignas(32) double sq[8];
    _mm256_store_pd(sq, _mm256_mul_pd(l, l));
    _mm256_store_pd(sq + 4, _mm256_mul_pd(h, h));
    const double s01 = sq[0] + sq[1];
    const double s23 = sq[2] + sq[3];
    const double s45 = sq[4] + sq[5];
    return (s01 + s23) + s45;
}

bool unit6(Vec8d& out, const Vec8d& a) {
    const double ss = sumsq6(a);
    if (ss == 0.0) return false;
    const __m256d norm = _mm256_set1_pd(std::sqrt(ss));
    store(out, _mm256_div_pd(lo(a), norm), _mm256_div_pd(hi(a), norm));
    return true;
}

void zscore6(Vec8d& out, const Vec8d& x, const Vec8d& mean, const Vec8d& sigma) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d dl = _mm256_sub_pd(lo(x), lo(mean));
    const __m256d dh = _mm256_sub_pd(hi(x), hi(mean));
    // sigma != 0 mask; masked divide matches the scalar ternary because the
    // quotient in a masked-off lane is discarded before it can differ.
    const __m256d ml = _mm256_cmp_pd(lo(sigma), zero, _CMP_NEQ_OQ);
    const __m256d mh = _mm256_cmp_pd(hi(sigma), zero, _CMP_NEQ_OQ);
    const __m256d ql = _mm256_div_pd(dl, lo(sigma));
    const __m256d qh = _mm256_div_pd(dh, hi(sigma));
    store(out, _mm256_and_pd(ql, ml), _mm256_and_pd(qh, mh));
}

void sigdiv6(Vec8d& out, const Vec8d& x, const Vec8d& sigma) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d ml = _mm256_cmp_pd(lo(sigma), zero, _CMP_NEQ_OQ);
    const __m256d mh = _mm256_cmp_pd(hi(sigma), zero, _CMP_NEQ_OQ);
    const __m256d ql = _mm256_div_pd(lo(x), lo(sigma));
    const __m256d qh = _mm256_div_pd(hi(x), hi(sigma));
    store(out, _mm256_and_pd(ql, ml), _mm256_and_pd(qh, mh));
}

} // namespace avx2

extern const Ops kAvx2Ops;
const Ops kAvx2Ops = {
    "avx2",        avx2::add,    avx2::sub,     avx2::mul,
    avx2::scale,   avx2::div_scalar, avx2::sqrt_lanes, avx2::sumsq6,
    avx2::unit6,   avx2::zscore6, avx2::sigdiv6,
};

} // namespace moodflow::kernels
