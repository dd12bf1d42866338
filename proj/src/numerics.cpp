// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#include "coexsim/numerics.hpp"

#include <cmath>
#include <utility>

#include "coexsim/errors.hpp"

namespace coexsim {

namespace {
constexpr double kPivotFloor = 1e-12;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) {
        throw DimensionMismatch("CMatrix: entry count does not match rows*cols");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<CVector>& rows) {
    if (rows.empty()) throw DimensionMismatch("CMatrix::from_rows: no rows");
    const std::size_t cols = rows.front().size();
    CMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionMismatch("CMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

CVector CMatrix::col(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool CMatrix::finite() const {
    for (const cplx& z : a_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

CMatrix hermitian(const CMatrix& m) {
    CMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(j, i) = std::conj(m(i, j));
        }
    }
    return r;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: inner dimensions disagree");
    }
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

CMatrix solve_hermitian(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("solve_hermitian: a not square");
    if (b.rows() != n) throw DimensionMismatch("solve_hermitian: b rows mismatch");

    // Cholesky a = L L^H with pivot positivity as the definiteness check.
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > kPivotFloor)) {
            throw SingularMatrix("solve_hermitian: non-positive pivot (rank-deficient)");
        }
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / ljj;
        }
    }

    // Forward then back substitution, one b column at a time.
    CMatrix x(n, b.cols());
    std::vector<cplx> y(n);
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = b(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
            y[i] = s / l(i, i).real();
        }
        for (std::size_t ii = n; ii-- > 0;) {
            cplx s = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k) {
                s -= std::conj(l(k, ii)) * x(k, c);
            }
            x(ii, c) = s / l(ii, ii).real();
        }
    }
    return x;
}

CMatrix pinv_right(const CMatrix& h) {
    if (h.rows() > h.cols()) {
        throw InsufficientAntennas(
            "pinv_right: more receivers than transmit antennas");
    }
    const CMatrix hh = hermitian(h);
    const CMatrix gram = matmul(h, hh);  // R x R, Hermitian PSD
    const CMatrix x = solve_hermitian(gram, CMatrix::identity(h.rows()));
    return matmul(hh, x);
}

} // namespace coexsim
