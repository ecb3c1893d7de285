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

#ifndef QSWITCH_TESTS_TEST_UTIL_H
#define QSWITCH_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>
#include <vector>

#include "qswitch/channel_model.h"
#include "qswitch/numkit.h"

namespace qswitch::testutil {

inline CMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    std::normal_distribution<double> g;
    CMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m(r, c) = Complex(g(rng), g(rng));
    return m;
}

inline CMatrix random_hermitian(std::mt19937_64 &rng, size_t n) {
    CMatrix a = random_matrix(rng, n, n);
    return Complex(0.5) * (a + dagger(a));
}

/// Random full-rank density matrix.
inline CMatrix random_state(std::mt19937_64 &rng, size_t n) {
    CMatrix a = random_matrix(rng, n, n);
    CMatrix rho = a * dagger(a);
    return Complex(1.0 / trace(rho).real()) * rho;
}

inline std::vector<Complex> random_vector(std::mt19937_64 &rng, size_t n) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(n);
    double norm = 0;
    for (auto &x : v) {
        x = Complex(g(rng), g(rng));
        norm += std::norm(x);
    }
    for (auto &x : v) x /= std::sqrt(norm);
    return v;
}

/// Uniform point of the probability simplex.
inline PauliChannel random_pauli(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e;
    std::array<double, 4> p;
    double sum = 0;
    for (auto &x : p) sum += (x = e(rng));
    for (auto &x : p) x /= sum;
    return PauliChannel(p);
}

/// Random channel with r Kraus operators, built from an isometry.
inline KrausChannel random_channel(std::mt19937_64 &rng, size_t d, size_t r) {
    // Gram-Schmidt on the columns of a (r d) x d Gaussian matrix.
    CMatrix v = random_matrix(rng, r * d, d);
    for (size_t c = 0; c < d; ++c) {
        for (size_t prev = 0; prev < c; ++prev) {
            Complex dot = 0;
            for (size_t i = 0; i < r * d; ++i) dot += std::conj(v(i, prev)) * v(i, c);
            for (size_t i = 0; i < r * d; ++i) v(i, c) -= dot * v(i, prev);
        }
        double norm = 0;
        for (size_t i = 0; i < r * d; ++i) norm += std::norm(v(i, c));
        for (size_t i = 0; i < r * d; ++i) v(i, c) /= std::sqrt(norm);
    }
    std::vector<CMatrix> kraus;
    for (size_t k = 0; k < r; ++k) {
        CMatrix m(d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) m(i, j) = v(k * d + i, j);
        kraus.push_back(m);
    }
    return KrausChannel(d, d, std::move(kraus));
}

inline double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    double m = 0;
    for (size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace qswitch::testutil

#endif
