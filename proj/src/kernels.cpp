// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence
//
// Scalar reference kernels and runtime backend dispatch. The AVX2 variants
// live in kernels_avx2.cpp, compiled with -mavx2 -mfma only for that TU.

#include "coexsim/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "coexsim/errors.hpp"

namespace coexsim::kernels {

namespace detail {

double sum_abs2_scalar(const cplx* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx cdot_conj_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

#if COEXSIM_HAVE_AVX2
double sum_abs2_avx2(const cplx* x, std::size_t n);
cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n);
cplx cdot_conj_avx2(const cplx* a, const cplx* b, std::size_t n);
bool cpu_has_avx2_fma();
#endif

} // namespace detail

namespace {

struct Dispatch {
    Backend backend;
    double (*sum_abs2)(const cplx*, std::size_t);
    cplx (*cdot)(const cplx*, const cplx*, std::size_t);
    cplx (*cdot_conj)(const cplx*, const cplx*, std::size_t);
};

constexpr Dispatch kScalar{Backend::Scalar, detail::sum_abs2_scalar,
                           detail::cdot_scalar, detail::cdot_conj_scalar};

#if COEXSIM_HAVE_AVX2
constexpr Dispatch kAvx2{Backend::Avx2, detail::sum_abs2_avx2,
                         detail::cdot_avx2, detail::cdot_conj_avx2};
#endif

bool runtime_avx2() {
#if COEXSIM_HAVE_AVX2
    static const bool ok = detail::cpu_has_avx2_fma();
    return ok;
#else
    return false;
#endif
}

const Dispatch* resolve_auto() {
#if COEXSIM_HAVE_AVX2
    if (runtime_avx2()) {
        const char* env = std::getenv("COEXSIM_SIMD");
        if (env == nullptr || std::strcmp(env, "scalar") != 0) {
            return &kAvx2;
        }
    }
#endif
    return &kScalar;
}

const Dispatch* g_active = nullptr;

const Dispatch* active() {
    if (g_active == nullptr) {
        g_active = resolve_auto();
    }
    return g_active;
}

} // namespace

Backend active_backend() { return active()->backend; }

bool avx2_available() { return runtime_avx2(); }

void force_backend(std::optional<Backend> backend) {
    if (!backend.has_value()) {
        g_active = resolve_auto();
        return;
    }
    if (*backend == Backend::Scalar) {
        g_active = &kScalar;
        return;
    }
#if COEXSIM_HAVE_AVX2
    if (runtime_avx2()) {
        g_active = &kAvx2;
        return;
    }
#endif
    throw InvalidParameter("kernels: AVX2 backend not available on this machine");
}

double sum_abs2(const cplx* x, std::size_t n) { return active()->sum_abs2(x, n); }

cplx cdot(const cplx* a, const cplx* b, std::size_t n) { return active()->cdot(a, b, n); }

cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n) {
    return active()->cdot_conj(a, b, n);
}

} // namespace coexsim::kernels
