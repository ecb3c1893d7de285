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

#ifndef QSWITCH_SWITCH_BRUTEFORCE_H
#define QSWITCH_SWITCH_BRUTEFORCE_H

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qswitch/channel_model.h"
#include "qswitch/numkit.h"

// Reference construction of the quantum SWITCH by explicit enumeration of
// Kraus index tuples. Everything here works for arbitrary channels, any set
// of orders and any control state; it is the ground truth the closed forms
// are checked against.

namespace qswitch {

/// A set of m distinct orderings of n channels. perms[k][j] is the (0-based)
/// channel placed at position j of the k-th product, so the Kraus product for
/// order k and tuple s is K^{perms[k][0]}_{s[perms[k][0]]} ... K^{perms[k][n-1]}_{...}.
class PermutationSet {
   public:
    PermutationSet(int n, std::vector<std::vector<int>> perms);

    /// Identity and reversal; needs n >= 2 so the two differ.
    static PermutationSet forward_backward(int n);
    /// The n cyclic shifts of (0, ..., n-1).
    static PermutationSet cyclic(int n);

    int n() const { return n_; }
    size_t m() const { return perms_.size(); }
    const std::vector<std::vector<int>> &perms() const { return perms_; }

   private:
    int n_;
    std::vector<std::vector<int>> perms_;
};

/// m x m density matrix on the control register (PSD, unit trace within 1e-10).
class ControlState {
   public:
    explicit ControlState(CMatrix omega);

    /// |omega> = sum_k |k> / sqrt(m).
    static ControlState uniform(size_t m);
    static ControlState pure(std::span<const Complex> amplitudes);

    const CMatrix &matrix() const { return omega_; }
    size_t m() const { return omega_.rows(); }
    bool is_pure(double tol = 1e-10) const;

   private:
    CMatrix omega_;
};

/// The effective channel rho -> sum_{k,l} C_{kl}(rho) (x) omega_{kl} |k><l|,
/// stored as a Choi matrix whose rows/cols are indexed by
/// ((system_out * m + control) * dim_in + input).
struct SwitchOutput {
    CMatrix choi;
    int n;
    size_t m;
    size_t dim_in;
    size_t dim_out;

    /// System and control together.
    size_t output_dim() const { return dim_out * m; }
};

struct EnumerationOptions {
    /// Upper bound on (number of Kraus tuples) * m^2.
    std::uint64_t cap = 10'000'000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

SwitchOutput effective_switch(std::span<const KrausChannel> channels, const PermutationSet &orders,
                              const ControlState &control, const EnumerationOptions &options = {});

/// Same channel in every slot.
std::vector<KrausChannel> copies(const KrausChannel &ch, int n);

/// Operator G on the input with tr[(I (x) F) S(rho)] = tr[G rho] for the
/// control-side effect F.
CMatrix control_effect_operator(const SwitchOutput &out, const CMatrix &control_effect);

/// Maximum probability of F2 = I - |omega><omega| with omega the uniform
/// superposition: the largest eigenvalue of the adjoint image of I (x) F2.
double pn_exact(std::span<const KrausChannel> channels, const PermutationSet &orders,
                const EnumerationOptions &options = {});
/// The same maximum for an already assembled switch with uniform control.
double pn_from_output(const SwitchOutput &out);

struct StateDependence {
    double min;
    double max;
    double sampled_min;
    double sampled_max;
    double spectral_min;
    double spectral_max;

    double spread() const { return max - min; }
};

/// Extremes of the F2 probability over input states, with F2 = I - omega for
/// a pure control state omega. Samples a fixed deterministic grid of pure
/// states (Pauli eigenstates for d = 2, d + 1 quadratic-phase bases
/// otherwise, plus 100 seeded Haar vectors) and also reports the exact
/// spectral extremes.
StateDependence pn_state_dependence(std::span<const KrausChannel> channels, const PermutationSet &orders,
                                    const ControlState &control, const EnumerationOptions &options = {});

/// The pure test states used by pn_state_dependence.
std::vector<std::vector<Complex>> probe_states(size_t d);

struct SInvariance {
    bool invariant;
    /// First Kraus index tuple (lexicographic) whose products differ.
    std::optional<std::vector<size_t>> violating_tuple;
    /// The two orders (indices into the permutation set) that disagree.
    std::optional<std::pair<size_t, size_t>> violating_orders;
};

/// True iff every Kraus product is the same in all orders (elementwise within
/// 1e-10).
SInvariance s_invariance_check(std::span<const KrausChannel> channels, const PermutationSet &orders,
                               const EnumerationOptions &options = {});

/// For S-invariant inputs, checks that the effective channel factorizes as
/// (composite channel) (x) omega on Choi within 1e-9. Throws DomainError when
/// the inputs are not S-invariant.
bool capacity_floor_check(std::span<const KrausChannel> channels, const PermutationSet &orders,
                          const ControlState &control, const EnumerationOptions &options = {});

/// Choi matrix (system_out, input) after discarding the control.
CMatrix trace_out_control(const SwitchOutput &out);

}  // namespace qswitch

#endif
