// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace coexsim {

using cplx = std::complex<double>;

/// Channel rows and precoder columns are plain complex vectors.
using CVector = std::vector<cplx>;

/// Small dense row-major complex matrix. Sizes in this project never
/// exceed 8x8; everything is value-semantic and allocation-light.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix from_rows(const std::vector<CVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    const cplx* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }
    cplx* row_ptr(std::size_t i) { return a_.data() + i * cols_; }

    CVector col(std::size_t j) const;

    const std::vector<cplx>& data() const { return a_; }

    bool finite() const;
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> a_;
};

/// Conjugate transpose.
CMatrix hermitian(const CMatrix& m);

/// Standard complex matrix product; dimension mismatch is rejected.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Solve a X = b for Hermitian positive definite a via Cholesky.
/// A pivot at or below 1e-12 raises SingularMatrix (rank-deficient
/// compound channel).
CMatrix solve_hermitian(const CMatrix& a, const CMatrix& b);

/// Right pseudoinverse of a full-row-rank fat matrix h (R x N_t, R <= N_t):
/// W = h^H (h h^H)^{-1}, so h W = I_R. R > N_t raises InsufficientAntennas.
CMatrix pinv_right(const CMatrix& h);

} // namespace coexsim
