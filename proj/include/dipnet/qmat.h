// Copyright 2026 The dipnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIPNET_QMAT_H
#define DIPNET_QMAT_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dipnet/errors.h"

namespace dipnet {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kOracle = 1e-10;
/// Looser symmetry check used on eigen-solver inputs.
inline constexpr double kEigenInput = 1e-10;
}  // namespace tol

/// Dense square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> diag);

    size_t dim() const {
        return dim_;
    }

    /// Bounds-checked; throws std::out_of_range.
    cplx &operator()(size_t r, size_t c);
    const cplx &operator()(size_t r, size_t c) const;

    std::span<cplx> data() {
        return entries_;
    }
    std::span<const cplx> data() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scalar);

    /// Largest |a_rc - conj(a_cr)|.
    double hermiticity_error() const;
    bool is_hermitian(double tolerance = tol::kHermitian) const;

    std::string str() const;

   private:
    size_t dim_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix a);

/// Elementwise max |a - b|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &a);

/// Multi-qubit density matrix. Qubit 0 is the most significant bit of the
/// computational-basis index.
///
/// Construction checks dimension, Hermiticity and unit trace. Positivity is
/// an eigenvalue computation and is only checked by `validated`.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix mat);

    /// Additionally checks that all eigenvalues are >= -tol::kPsd.
    static DensityMatrix validated(ComplexMatrix mat);

    const ComplexMatrix &mat() const {
        return mat_;
    }
    size_t nqubits() const {
        return nqubits_;
    }
    size_t dim() const {
        return mat_.dim();
    }
    cplx operator()(size_t r, size_t c) const {
        return mat_(r, c);
    }

   private:
    ComplexMatrix mat_;
    size_t nqubits_ = 0;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
DensityMatrix kron(const DensityMatrix &a, const DensityMatrix &b);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi on a Hermitian matrix. Throws NotHermitian.
EigenSystem hermitian_eigensystem(const ComplexMatrix &a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

/// Sum of |eigenvalue| for a Hermitian matrix.
double trace_norm(const ComplexMatrix &a);

/// `keep` must be nonempty, strictly increasing and in range.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const size_t> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<size_t> keep);

/// Transposes the tensor indices of the named qubits.
ComplexMatrix partial_transpose(const ComplexMatrix &mat, size_t nqubits, std::span<const size_t> subsystem);
ComplexMatrix partial_transpose(const DensityMatrix &rho, std::span<const size_t> subsystem);
ComplexMatrix partial_transpose(const DensityMatrix &rho, std::initializer_list<size_t> subsystem);

/// exp(-i h t) by spectral decomposition.
ComplexMatrix matrix_exp_hermitian(const ComplexMatrix &h, double t);

/// Returns log2(dim) or throws BadDimension.
size_t qubit_count_for_dim(size_t dim);

}  // namespace dipnet

#endif
