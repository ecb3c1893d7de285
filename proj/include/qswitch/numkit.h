// Copyright 2026 The qswitch Authors
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

#ifndef QSWITCH_NUMKIT_H
#define QSWITCH_NUMKIT_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qswitch {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Carries states, Kraus operators and Choi
/// matrices; every entry is finite.
class CMatrix {
   public:
    /// Zero matrix.
    CMatrix(size_t rows, size_t cols);
    CMatrix(size_t rows, size_t cols, std::vector<Complex> data);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(size_t n);
    /// |v><v| for a column vector v.
    static CMatrix outer(std::span<const Complex> v);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> data() const { return data_; }

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex scale);

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(Complex scale, CMatrix a);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

CMatrix mat_mul(const CMatrix &a, const CMatrix &b);
CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix dagger(const CMatrix &a);
CMatrix transpose(const CMatrix &a);
Complex trace(const CMatrix &a);

double frobenius_norm(const CMatrix &a);
double frobenius_distance(const CMatrix &a, const CMatrix &b);
/// Largest elementwise |a_ij - conj(a_ji)|.
double hermiticity_defect(const CMatrix &a);

enum class Keep { First, Second };

/// Partial trace of a (d1*d2)x(d1*d2) operator over the factor not kept.
CMatrix partial_trace(const CMatrix &a, size_t d1, size_t d2, Keep keep);

/// Eigenvalues of a Hermitian matrix (ascending) by cyclic complex Jacobi
/// rotations. Throws DomainError when a is not Hermitian within 1e-10 and
/// ConvergenceError if 100 sweeps do not bring the off-diagonal norm below
/// 1e-12 (relative to max(1, ||a||_F)).
std::vector<double> hermitian_eigenvalues(const CMatrix &a);

/// H(x) in bits, with 0 log 0 = 0.
double binary_entropy(double x);
/// h(lambda) = H((1 + lambda) / 2).
double h_lambda(double lambda);
/// Shannon entropy in bits. Entries down to -1e-12 are treated as 0; the sum
/// must be within 1e-9 of 1.
double shannon_entropy(std::span<const double> p);
/// Von Neumann entropy in bits of a density matrix (PSD and unit trace within
/// 1e-9).
double von_neumann_entropy(const CMatrix &rho);

}  // namespace qswitch

#endif
