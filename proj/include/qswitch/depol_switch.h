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

#ifndef QSWITCH_DEPOL_SWITCH_H
#define QSWITCH_DEPOL_SWITCH_H

#include <optional>
#include <vector>

#include "qswitch/numkit.h"

// Closed forms for n copies of the qudit depolarizing channel
// rho -> (1 - p) rho + p I / d under forward/backward superposition. Both
// branch channels are again depolarizing, rho -> (1 - l) rho + l I / d, with
// l = lambda1 on |+> and l = lambda2 on |->.

namespace qswitch {

inline constexpr int kMaxScanN = 64;

struct DepolBranches {
    int d;
    int n;
    double p;
    double pn;
    /// In [0, 1].
    double lambda1;
    /// In [1, d^2 / (d^2 - 1)]; absent when pn < 1e-12.
    std::optional<double> lambda2;
};

double pn_depol(int d, double p, int n);
DepolBranches depol_branches(int d, double p, int n);

/// Minimum output entropy of rho -> (1 - l) rho + l I / d: the output of any
/// pure state has eigenvalues 1 - l + l/d and (d - 1) times l/d.
double hmin_depol(int d, double l);

/// Capacity of the n-fold composition, which is depolarizing with
/// l = 1 - (1 - p)^n.
double capacity_depol(int d, double p, int n);
double capacity_depol_switch(const DepolBranches &b);
double delta_c_depol(int d, double p, int n);

/// Choi matrix of the closed-form S^n, laid out like SwitchOutput::choi with
/// m = 2.
CMatrix switch_choi_depol(int d, double p, int n);
CMatrix switch_choi_depol(const DepolBranches &b);

struct NOptScan {
    int n_opt;
    /// delta_c[k] is the gain at n = k + 1.
    std::vector<double> delta_c;
};

/// Gain for n = 1..n_max (n_max <= 64); ties go to the smallest n.
NOptScan n_opt_scan(int d, double p, int n_max);

}  // namespace qswitch

#endif
