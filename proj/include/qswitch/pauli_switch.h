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

#ifndef QSWITCH_PAULI_SWITCH_H
#define QSWITCH_PAULI_SWITCH_H

#include <array>
#include <cstdint>
#include <optional>

#include "qswitch/channel_model.h"
#include "qswitch/numkit.h"

// Closed forms for n copies of one Pauli channel in a superposition of the
// forward and backward orders with control |+>.

namespace qswitch {

/// Largest n accepted by the closed forms; multinomials stay exact in 64 bits.
inline constexpr int kMaxClosedFormN = 20;

using Vec4 = std::array<double, 4>;

/// Unnormalized coefficients of the |+> branch (s) and the |-> branch (t):
/// S^n(rho) = sum_i s_i s_i rho s_i (x) |+><+| + sum_i t_i s_i rho s_i (x) |-><-|.
struct BranchCoeffs {
    Vec4 s;
    Vec4 t;
};

struct SwitchBranches {
    double pn;
    PauliChannel phi_plus;
    /// Absent when pn < 1e-12.
    std::optional<PauliChannel> phi_minus;
};

struct GainReport {
    double pn;
    /// max |eigenvalue| of N^n, Phi_+ and Phi_- (nu absent with Phi_-).
    double lambda;
    double mu;
    std::optional<double> nu;
    double capacity_composite;
    double capacity_switch;
    double delta_c;
    double coherent_composite;
    double coherent_switch;
    double delta_i;
};

enum class PnZeroClass { EvenCommuting, OddAtMostTwoKraus, Nonzero };

const char *to_string(PnZeroClass c);

/// k! / (r1! r2! r3!) with r1 + r2 + r3 = k <= 20.
std::uint64_t multinomial(int r1, int r2, int r3);
std::uint64_t binomial(int n, int k);

/// Coefficients of sigma_i in the sum over k-fold products of the non-identity
/// Kraus operators that come out the same in both orders. k even fills entry
/// 0, k odd entries 1..3.
Vec4 coeff_d(int k, const Vec4 &p);
/// Same for the products that change sign between the two orders (k >= 2).
/// k even fills entries 1..3, k odd entry 0.
Vec4 coeff_e(int k, const Vec4 &p);

BranchCoeffs branch_coeffs(const PauliChannel &ch, int n);
double pn_pauli(const PauliChannel &ch, int n);
SwitchBranches switch_branches(const PauliChannel &ch, int n);

/// Choi matrix of the closed-form S^n over (system, control) x input, laid
/// out like SwitchOutput::choi with m = 2.
CMatrix switch_choi_pauli(const PauliChannel &ch, int n);
CMatrix switch_choi_pauli(const BranchCoeffs &b);

/// max_i |lambda_i|, lowest index on ties.
double max_abs_transfer_eigenvalue(const PauliChannel &ch);

/// 1 - h(max_i |lambda_i|).
double classical_capacity_pauli(const PauliChannel &ch);
/// (1 - P) C(Phi_+) + P C(Phi_-).
double classical_capacity_switch(const SwitchBranches &b);
/// Hashing bound 1 - H(p).
double coherent_info_pauli(const PauliChannel &ch);
/// 1 - (1 - P) H(s~) - P H(t~): coherent information of S^n at input I/2.
double coherent_info_switch(const SwitchBranches &b);

GainReport gain_report(const PauliChannel &ch, int n);
double delta_c(const PauliChannel &ch, int n);
double delta_i(const PauliChannel &ch, int n);

/// Structural zero test for P_n (n >= 2): for even n the Kraus operators
/// commute, for odd n there are at most two of them.
PnZeroClass pn_zero_classify(const PauliChannel &ch, int n);

/// Sign relations between the branch coefficients and p. Where the
/// difference s_j - s_k (or t_j - t_k) is a positive multiple of p_j - p_k
/// the signs must agree; where the multiplier can vanish (products of other
/// probabilities equal to zero) only the weak inequality is required.
bool sign_properties_check(const PauliChannel &ch, int n);

/// True iff some index i attains both max |mu_i| and max |nu_i| (ties within
/// 1e-12). Requires Phi_- to be present.
bool same_index_check(const SwitchBranches &b);

}  // namespace qswitch

#endif
