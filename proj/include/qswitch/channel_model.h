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

#ifndef QSWITCH_CHANNEL_MODEL_H
#define QSWITCH_CHANNEL_MODEL_H

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qswitch/numkit.h"

namespace qswitch {

/// A CPTP map given by Kraus operators, each dim_out x dim_in. Construction
/// checks sum_i K_i^dagger K_i = I within 1e-9.
class KrausChannel {
   public:
    KrausChannel(size_t dim_in, size_t dim_out, std::vector<CMatrix> kraus);

    size_t dim_in() const { return dim_in_; }
    size_t dim_out() const { return dim_out_; }
    const std::vector<CMatrix> &kraus() const { return kraus_; }

   private:
    size_t dim_in_;
    size_t dim_out_;
    std::vector<CMatrix> kraus_;
};

/// rho -> sum_i p_i sigma_i rho sigma_i over sigma = (I, X, Y, Z).
struct PauliChannel {
    std::array<double, 4> p;

    /// Entries must be >= 0 and sum to 1 within 1e-12.
    explicit PauliChannel(std::array<double, 4> probabilities);
};

/// rho -> (1 - p) rho + p tr(rho) I / d.
struct DepolChannel {
    int d;
    double p;

    DepolChannel(int dimension, double probability);
};

/// A channel description as read from JSON.
using ChannelSpec = std::variant<PauliChannel, DepolChannel, KrausChannel>;

/// sigma_0..sigma_3 = I, X, Y, Z.
const CMatrix &pauli_matrix(int index);

/// The d^2 unitaries X^a Z^b (a major, b minor), orthonormal under
/// tr(A^dagger B) / d.
std::vector<CMatrix> heisenberg_weyl_basis(int d);

KrausChannel unitary_channel(const CMatrix &u);

/// sqrt(p_i) sigma_i, zero-probability terms dropped.
KrausChannel pauli_to_kraus(const PauliChannel &ch);
/// sqrt(1 - p) I followed by sqrt(p) / d * U_i over the Heisenberg-Weyl
/// basis; zero-weight terms dropped.
KrausChannel depol_to_kraus(const DepolChannel &ch);
KrausChannel to_kraus(const ChannelSpec &spec);

CMatrix apply_channel(const KrausChannel &ch, const CMatrix &rho);

/// (ch (x) id)(|Omega><Omega|) with |Omega> = sum_i |ii> unnormalized; the
/// output factor comes first.
CMatrix choi(const KrausChannel &ch);
/// Choi matrix of an arbitrary linear map given as a function on operators.
CMatrix choi_of_map(size_t dim_in, size_t dim_out, const std::function<CMatrix(const CMatrix &)> &map);
/// Applies a map given by its Choi matrix: tr_in[J (I (x) rho^T)].
CMatrix apply_choi(const CMatrix &choi_matrix, size_t dim_in, size_t dim_out, const CMatrix &rho);
/// Coherent information at the maximally mixed input, computed from the Choi
/// matrix: S(tr_in J / d_in) - S(J / d_in).
double coherent_info_at_maximally_mixed(const CMatrix &choi_matrix, size_t dim_in, size_t dim_out);
/// Number of Choi eigenvalues above tol.
size_t choi_rank(const KrausChannel &ch, double tol = 1e-10);
/// Representation-independent equality: Choi Frobenius distance < tol.
bool channels_equal(const KrausChannel &a, const KrausChannel &b, double tol = 1e-9);

/// lambda_i = p_0 + 2 p_i - (p_1 + p_2 + p_3), i = 1..3.
std::array<double, 3> pauli_transfer_eigenvalues(const PauliChannel &ch);
/// Inverse of pauli_transfer_eigenvalues. Throws DomainError when the triple
/// is not completely positive (some probability below -1e-12).
PauliChannel eigs_to_pauli(const std::array<double, 3> &lambda);
/// The n-fold composition, as a Pauli channel.
PauliChannel pauli_power(const PauliChannel &ch, int n);

/// a after b: Kraus set {A_i B_j}.
KrausChannel compose(const KrausChannel &a, const KrausChannel &b);

/// Parses {"kind":"pauli","p":[...]}, {"kind":"depolarizing","d":..,"p":..}
/// or {"kind":"kraus","dim_in":..,"dim_out":..,"matrices":[[[re,im],...],...]}.
/// Throws DomainError on malformed input.
ChannelSpec parse_channel_spec(std::string_view json_text);
std::string channel_spec_to_json(const ChannelSpec &spec);

}  // namespace qswitch

#endif
