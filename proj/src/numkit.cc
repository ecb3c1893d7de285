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

#include "qswitch/numkit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qswitch/errors.h"

namespace qswitch {

namespace {

void require_finite(const Complex &z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("CMatrix entries must be finite");
    }
}

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

}  // namespace

CMatrix::CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("CMatrix dimensions must be positive");
    }
}

CMatrix::CMatrix(size_t rows, size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("CMatrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw DimensionError("CMatrix data length " + std::to_string(data_.size()) + " != rows*cols " +
                             std::to_string(rows * cols));
    }
    for (const auto &z : data_) require_finite(z);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("CMatrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged CMatrix initializer");
        for (const auto &z : row) {
            require_finite(z);
            data_.push_back(z);
        }
    }
}

CMatrix CMatrix::identity(size_t n) {
    CMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::outer(std::span<const Complex> v) {
    CMatrix m(v.size(), v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    }
    return m;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

CMatrix &CMatrix::operator*=(Complex scale) {
    for (auto &z : data_) z *= scale;
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(Complex scale, CMatrix a) { return a *= scale; }
CMatrix operator*(const CMatrix &a, const CMatrix &b) { return mat_mul(a, b); }

CMatrix mat_mul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    CMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (size_t k = 0; k < b.rows(); ++k) {
                for (size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

CMatrix dagger(const CMatrix &a) {
    CMatrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    }
    return out;
}

CMatrix transpose(const CMatrix &a) {
    CMatrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

Complex trace(const CMatrix &a) {
    if (!a.is_square()) throw DimensionError("trace of non-square matrix");
    Complex t{};
    for (size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const CMatrix &a) {
    double s = 0;
    for (const auto &z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_distance(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0;
    for (size_t k = 0; k < a.data().size(); ++k) s += std::norm(a.data()[k] - b.data()[k]);
    return std::sqrt(s);
}

double hermiticity_defect(const CMatrix &a) {
    if (!a.is_square()) throw DimensionError("hermiticity_defect of non-square matrix");
    double worst = 0;
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = i; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
    return worst;
}

CMatrix partial_trace(const CMatrix &a, size_t d1, size_t d2, Keep keep) {
    if (!a.is_square() || a.rows() != d1 * d2) {
        throw DimensionError("partial_trace: matrix side " + std::to_string(a.rows()) + " != " +
                             std::to_string(d1) + "*" + std::to_string(d2));
    }
    if (keep == Keep::First) {
        CMatrix out(d1, d1);
        for (size_t i = 0; i < d1; ++i) {
            for (size_t j = 0; j < d1; ++j) {
                for (size_t k = 0; k < d2; ++k) out(i, j) += a(i * d2 + k, j * d2 + k);
            }
        }
        return out;
    }
    CMatrix out(d2, d2);
    for (size_t i = 0; i < d2; ++i) {
        for (size_t j = 0; j < d2; ++j) {
            for (size_t k = 0; k < d1; ++k) out(i, j) += a(k * d2 + i, k * d2 + j);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &a) {
    if (!a.is_square()) throw DimensionError("hermitian_eigenvalues: non-square matrix");
    if (hermiticity_defect(a) > 1e-10) throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");

    const size_t n = a.rows();
    // Work on the exactly Hermitian part.
    CMatrix m = 0.5 * (a + dagger(a));
    const double threshold = 1e-12 * std::max(1.0, frobenius_norm(m));

    auto off_norm = [&] {
        double s = 0;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (i != j) s += std::norm(m(i, j));
            }
        }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_norm() >= threshold) {
        if (sweep++ == kMaxSweeps) {
            throw ConvergenceError("hermitian_eigenvalues: no convergence after 100 sweeps");
        }
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(m(p, q));
                if (g == 0) continue;
                const Complex u = m(p, q) / g;
                const double alpha = m(p, p).real();
                const double beta = m(q, q).real();
                const double tau = (beta - alpha) / (2 * g);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;

                // m <- J^dagger m J with J = [[c, s u], [-s conj(u), c]] on (p, q).
                for (size_t k = 0; k < n; ++k) {
                    const Complex kp = m(k, p);
                    const Complex kq = m(k, q);
                    m(k, p) = c * kp - s * std::conj(u) * kq;
                    m(k, q) = s * u * kp + c * kq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const Complex pk = m(p, k);
                    const Complex qk = m(q, k);
                    m(p, k) = c * pk - s * u * qk;
                    m(q, k) = s * std::conj(u) * pk + c * qk;
                }
                m(p, q) = 0;
                m(q, p) = 0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }

    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = m(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double binary_entropy(double x) {
    if (!(x >= -1e-12 && x <= 1 + 1e-12)) {
        throw DomainError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    return -xlog2x(x) - xlog2x(1 - x);
}

double h_lambda(double lambda) {
    if (!(std::abs(lambda) <= 1 + 1e-12)) {
        throw DomainError("h_lambda: argument " + std::to_string(lambda) + " outside [-1, 1]");
    }
    return binary_entropy(std::clamp((1 + lambda) / 2, 0.0, 1.0));
}

double shannon_entropy(std::span<const double> p) {
    double sum = 0;
    for (double x : p) {
        if (!(x >= -1e-12)) throw DomainError("shannon_entropy: negative probability " + std::to_string(x));
        sum += std::max(x, 0.0);
    }
    if (std::abs(sum - 1) > 1e-9) throw DomainError("shannon_entropy: probabilities sum to " + std::to_string(sum));
    double h = 0;
    for (double x : p) h -= xlog2x(std::max(x, 0.0));
    return h;
}

double von_neumann_entropy(const CMatrix &rho) {
    if (!rho.is_square()) throw DimensionError("von_neumann_entropy: non-square matrix");
    if (std::abs(trace(rho) - Complex(1.0)) > 1e-9) throw DomainError("von_neumann_entropy: trace is not 1");
    auto eig = hermitian_eigenvalues(rho);
    if (eig.front() < -1e-9) throw DomainError("von_neumann_entropy: matrix is not positive semidefinite");
    for (double &x : eig) x = std::max(x, 0.0);
    double h = 0;
    for (double x : eig) h -= xlog2x(x);
    return h;
}

}  // namespace qswitch
