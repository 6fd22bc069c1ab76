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

#include "dipnet/qmat.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dipnet {

namespace {

constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw BadDimension(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
    }
}

// Bit position of qubit q inside an n-qubit index (qubit 0 is the MSB).
inline size_t bit_of(size_t q, size_t n) {
    return n - 1 - q;
}

void check_subsystem(std::span<const size_t> qubits, size_t n, bool require_increasing, const char *op) {
    if (qubits.empty()) {
        throw BadSubsystem(std::string(op) + ": empty qubit set");
    }
    std::vector<bool> seen(n, false);
    for (size_t k = 0; k < qubits.size(); k++) {
        size_t q = qubits[k];
        if (q >= n) {
            throw BadSubsystem(std::string(op) + ": qubit " + std::to_string(q) + " out of range for " +
                               std::to_string(n) + " qubits");
        }
        if (seen[q]) {
            throw BadSubsystem(std::string(op) + ": duplicate qubit " + std::to_string(q));
        }
        if (require_increasing && k > 0 && qubits[k - 1] > q) {
            throw BadSubsystem(std::string(op) + ": qubit list must be strictly increasing");
        }
        seen[q] = true;
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw BadDimension("ComplexMatrix: dim must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim) {
        throw BadDimension("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(entries_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
    if (dim_ == 0) {
        throw BadDimension("ComplexMatrix: empty initializer");
    }
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw BadDimension("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m.entries_[k * dim + k] = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m.entries_[k * diag.size() + k] = diag[k];
    }
    return m;
}

cplx &ComplexMatrix::operator()(size_t r, size_t c) {
    if (r >= dim_ || c >= dim_) {
        throw std::out_of_range("ComplexMatrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") out of range for dim " + std::to_string(dim_));
    }
    return entries_[r * dim_ + c];
}

const cplx &ComplexMatrix::operator()(size_t r, size_t c) const {
    if (r >= dim_ || c >= dim_) {
        throw std::out_of_range("ComplexMatrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") out of range for dim " + std::to_string(dim_));
    }
    return entries_[r * dim_ + c];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out.entries_[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out.entries_[c * dim_ + r] = entries_[r * dim_ + c];
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += entries_[k * dim_ + k];
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+=");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-=");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scalar) {
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs(entries_[r * dim_ + c] - std::conj(entries_[c * dim_ + r])));
        }
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
    return hermiticity_error() <= tolerance;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            const cplx &e = entries_[r * dim_ + c];
            out << (c ? " " : "") << e.real() << (e.imag() < 0 ? "-" : "+") << std::abs(e.imag()) << "i";
        }
        out << "\n";
    }
    return out.str();
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator*");
    size_t n = a.dim();
    ComplexMatrix out(n);
    auto A = a.data();
    auto B = b.data();
    auto C = out.data();
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            cplx aik = A[i * n + k];
            if (aik == cplx{}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                C[i * n + j] += aik * B[k * n + j];
            }
        }
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix a) {
    a *= scalar;
    return a;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    auto A = a.data();
    auto B = b.data();
    for (size_t k = 0; k < A.size(); k++) {
        worst = std::max(worst, std::abs(A[k] - B[k]));
    }
    return worst;
}

double frobenius_norm(const ComplexMatrix &a) {
    double s = 0;
    for (const auto &e : a.data()) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

size_t qubit_count_for_dim(size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw BadDimension("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(dim));
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    nqubits_ = qubit_count_for_dim(mat_.dim());
    if (nqubits_ == 0) {
        throw BadDimension("DensityMatrix needs at least one qubit");
    }
    double herr = mat_.hermiticity_error();
    if (herr > tol::kHermitian) {
        throw NotHermitian("DensityMatrix: hermiticity error " + std::to_string(herr));
    }
    cplx tr = mat_.trace();
    if (std::abs(tr - 1.0) > tol::kTrace) {
        throw NotPositive("DensityMatrix: trace " + std::to_string(tr.real()) + " differs from 1");
    }
}

DensityMatrix DensityMatrix::validated(ComplexMatrix mat) {
    DensityMatrix rho(std::move(mat));
    auto ev = hermitian_eigenvalues(rho.mat());
    if (ev.front() < -tol::kPsd) {
        throw NotPositive("DensityMatrix: negative eigenvalue " + std::to_string(ev.front()));
    }
    return rho;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    size_t n = na * nb;
    ComplexMatrix out(n);
    auto A = a.data();
    auto B = b.data();
    auto C = out.data();
    for (size_t i = 0; i < na; i++) {
        for (size_t j = 0; j < na; j++) {
            cplx aij = A[i * na + j];
            for (size_t k = 0; k < nb; k++) {
                for (size_t l = 0; l < nb; l++) {
                    C[(i * nb + k) * n + (j * nb + l)] = aij * B[k * nb + l];
                }
            }
        }
    }
    return out;
}

DensityMatrix kron(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(kron(a.mat(), b.mat()));
}

EigenSystem hermitian_eigensystem(const ComplexMatrix &input) {
    double herr = input.hermiticity_error();
    if (herr > tol::kEigenInput) {
        throw NotHermitian("hermitian_eigensystem: hermiticity error " + std::to_string(herr));
    }
    const size_t n = input.dim();
    // Work on the exactly-Hermitian part so rounding asymmetry cannot bias the rotations.
    ComplexMatrix a(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    auto A = a.data();
    auto V = v.data();

    double scale = std::max(1.0, frobenius_norm(a));
    auto off_norm = [&] {
        double s = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                if (r != c) {
                    s += std::norm(A[r * n + c]);
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_norm() >= kJacobiOffTol * scale; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                cplx apq = A[p * n + q];
                double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                cplx phase = apq / mag;
                double app = A[p * n + p].real();
                double aqq = A[q * n + q].real();
                double zeta = (aqq - app) / (2 * mag);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                // G = diag(1, .., conj(phase) at q, ..) * real rotation; A <- G^dag A G.
                cplx gpp = c;
                cplx gpq = s;
                cplx gqp = -s * std::conj(phase);
                cplx gqq = c * std::conj(phase);
                for (size_t k = 0; k < n; k++) {
                    cplx akp = A[k * n + p];
                    cplx akq = A[k * n + q];
                    A[k * n + p] = akp * gpp + akq * gqp;
                    A[k * n + q] = akp * gpq + akq * gqq;
                    cplx vkp = V[k * n + p];
                    cplx vkq = V[k * n + q];
                    V[k * n + p] = vkp * gpp + vkq * gqp;
                    V[k * n + q] = vkp * gpq + vkq * gqq;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx apk = A[p * n + k];
                    cplx aqk = A[q * n + k];
                    A[p * n + k] = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    A[q * n + k] = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                A[p * n + q] = 0;
                A[q * n + p] = 0;
                A[p * n + p] = A[p * n + p].real();
                A[q * n + q] = A[q * n + q].real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return A[x * n + x].real() < A[y * n + y].real(); });
    EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        out.values[k] = A[order[k] * n + order[k]].real();
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, k) = V[r * n + order[k]];
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    return hermitian_eigensystem(a).values;
}

double trace_norm(const ComplexMatrix &a) {
    double s = 0;
    for (double ev : hermitian_eigenvalues(a)) {
        s += std::abs(ev);
    }
    return s;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const size_t> keep) {
    const size_t n = rho.nqubits();
    check_subsystem(keep, n, true, "partial_trace");
    std::vector<size_t> traced;
    for (size_t q = 0; q < n; q++) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    const size_t nk = keep.size();
    const size_t dk = size_t{1} << nk;
    const size_t dt = size_t{1} << traced.size();

    // Full-register index for (kept bits, traced bits).
    auto compose = [&](size_t kept_bits, size_t traced_bits) {
        size_t idx = 0;
        for (size_t k = 0; k < nk; k++) {
            if ((kept_bits >> (nk - 1 - k)) & 1) {
                idx |= size_t{1} << bit_of(keep[k], n);
            }
        }
        for (size_t k = 0; k < traced.size(); k++) {
            if ((traced_bits >> (traced.size() - 1 - k)) & 1) {
                idx |= size_t{1} << bit_of(traced[k], n);
            }
        }
        return idx;
    };

    std::vector<size_t> base_rows(dk);
    std::vector<size_t> offsets(dt);
    for (size_t i = 0; i < dk; i++) {
        base_rows[i] = compose(i, 0);
    }
    for (size_t t = 0; t < dt; t++) {
        offsets[t] = compose(0, t);
    }

    const size_t d = rho.dim();
    auto src = rho.mat().data();
    ComplexMatrix out(dk);
    for (size_t i = 0; i < dk; i++) {
        for (size_t j = 0; j < dk; j++) {
            cplx s = 0;
            for (size_t t = 0; t < dt; t++) {
                s += src[(base_rows[i] | offsets[t]) * d + (base_rows[j] | offsets[t])];
            }
            out(i, j) = s;
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<size_t> keep) {
    return partial_trace(rho, std::span<const size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix &mat, size_t nqubits, std::span<const size_t> subsystem) {
    if (qubit_count_for_dim(mat.dim()) != nqubits) {
        throw BadDimension("partial_transpose: matrix does not hold " + std::to_string(nqubits) + " qubits");
    }
    check_subsystem(subsystem, nqubits, false, "partial_transpose");
    size_t mask = 0;
    for (size_t q : subsystem) {
        mask |= size_t{1} << bit_of(q, nqubits);
    }
    const size_t d = mat.dim();
    auto src = mat.data();
    ComplexMatrix out(d);
    auto dst = out.data();
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            size_t swapped = (r ^ c) & mask;
            dst[(r ^ swapped) * d + (c ^ swapped)] = src[r * d + c];
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, std::span<const size_t> subsystem) {
    return partial_transpose(rho.mat(), rho.nqubits(), subsystem);
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, std::initializer_list<size_t> subsystem) {
    return partial_transpose(rho, std::span<const size_t>(subsystem.begin(), subsystem.size()));
}

ComplexMatrix matrix_exp_hermitian(const ComplexMatrix &h, double t) {
    EigenSystem es = hermitian_eigensystem(h);
    const size_t n = h.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            cplx s = 0;
            for (size_t k = 0; k < n; k++) {
                s += es.vectors(r, k) * std::polar(1.0, -es.values[k] * t) * std::conj(es.vectors(c, k));
            }
            out(r, c) = s;
        }
    }
    return out;
}

}  // namespace dipnet
