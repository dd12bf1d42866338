// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence
//
// AVX2+FMA kernels over complex<double>, two complex values per 256-bit lane.
// Compiled with -mavx2 -mfma for this TU only; selection happens at runtime.

#include <immintrin.h>

#include <complex>
#include <cstddef>

namespace coexsim::kernels::detail {

using cplx = std::complex<double>;

bool cpu_has_avx2_fma() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

// [re0 im0 re1 im1] -> re0+re1, im0+im1
inline cplx reduce_pairs(__m256d acc) {
    alignas(32) double t[4];
    _mm256_store_pd(t, acc);
    return {t[0] + t[2], t[1] + t[3]};
}

} // namespace

double sum_abs2_avx2(const cplx* x, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, acc);
    double sum = t[0] + t[1] + t[2] + t[3];
    for (; i < n; ++i) {
        sum += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return sum;
}

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d bre = _mm256_movedup_pd(vb);        // [br0 br0 br1 br1]
        __m256d bim = _mm256_permute_pd(vb, 0xF);   // [bi0 bi0 bi1 bi1]
        __m256d asw = _mm256_permute_pd(va, 0x5);   // [ai0 ar0 ai1 ar1]
        // even lanes: ar*br - ai*bi, odd lanes: ai*br + ar*bi
        __m256d prod = _mm256_fmaddsub_pd(va, bre, _mm256_mul_pd(asw, bim));
        acc = _mm256_add_pd(acc, prod);
    }
    cplx sum = reduce_pairs(acc);
    for (; i < n; ++i) {
        sum += cplx{a[i].real() * b[i].real() - a[i].imag() * b[i].imag(),
                    a[i].real() * b[i].imag() + a[i].imag() * b[i].real()};
    }
    return sum;
}

cplx cdot_conj_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d are = _mm256_movedup_pd(va);        // [ar0 ar0 ar1 ar1]
        __m256d aim = _mm256_permute_pd(va, 0xF);   // [ai0 ai0 ai1 ai1]
        __m256d bsw = _mm256_permute_pd(vb, 0x5);   // [bi0 br0 bi1 br1]
        // even lanes: ar*br + ai*bi, odd lanes: ar*bi - ai*br
        __m256d prod = _mm256_fmsubadd_pd(are, vb, _mm256_mul_pd(aim, bsw));
        acc = _mm256_add_pd(acc, prod);
    }
    cplx sum = reduce_pairs(acc);
    for (; i < n; ++i) {
        sum += cplx{a[i].real() * b[i].real() + a[i].imag() * b[i].imag(),
                    a[i].real() * b[i].imag() - a[i].imag() * b[i].real()};
    }
    return sum;
}

} // namespace coexsim::kernels::detail
