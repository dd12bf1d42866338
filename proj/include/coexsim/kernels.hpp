// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#pragma once

#include <complex>
#include <cstddef>
#include <optional>

namespace coexsim::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// Backend in use for the kernels below. Resolved once on first call:
/// AVX2 when compiled in and the CPU supports avx2+fma, unless the
/// COEXSIM_SIMD=scalar environment variable or force_backend() says otherwise.
Backend active_backend();

/// Override the dispatch decision (nullopt restores automatic selection).
/// Requesting Avx2 on a machine without it is an InvalidParameter error.
void force_backend(std::optional<Backend> backend);

/// true when the AVX2 variants were compiled in and the CPU can run them.
bool avx2_available();

/// sum_i |x_i|^2
double sum_abs2(const cplx* x, std::size_t n);

/// sum_i a_i * b_i (no conjugation; channel row times precoder column)
cplx cdot(const cplx* a, const cplx* b, std::size_t n);

/// sum_i conj(a_i) * b_i
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n);

} // namespace coexsim::kernels
