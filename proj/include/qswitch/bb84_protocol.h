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

#ifndef QSWITCH_BB84_PROTOCOL_H
#define QSWITCH_BB84_PROTOCOL_H

#include <optional>
#include <vector>

#include "qswitch/channel_model.h"

namespace qswitch {

/// Pauli channel seen by a BB84 qubit with bit error rate q on each of two
/// conjugate bases: ((1-q)^2, q(1-q), q^2, q(1-q)).
struct BB84Channel {
    double q;

    explicit BB84Channel(double error_rate);
};

PauliChannel bb84_as_pauli(double q);

/// H(1/2 - 2x(1-x)) - H(2x(1-x)) for error rate x, without clamping.
double private_upper_bound_raw(double x);
/// max(0, private_upper_bound_raw(x)).
double private_upper_bound(double x);

/// sigma_Y applied after N_q, which is N_{1-q}.
PauliChannel sigma_y_conjugate(const BB84Channel &ch);

struct ProtocolReport {
    double q;
    /// Error rate of N_q composed with itself: 2q - 2q^2.
    double composite_error_rate;
    double raw_upper_bound;
    double composite_upper_bound;
    /// Coherent information at I/2 of the switch of two copies of N_{1-q}.
    double switch_coherent_info;
    bool advantage;
};

ProtocolReport protocol_report(double q);

struct CrossoverScan {
    std::vector<ProtocolReport> rows;
    /// Longest run of grid points with an advantage (first one on ties).
    std::optional<double> grid_low;
    std::optional<double> grid_high;
    /// The run's ends refined by bisection against the neighbouring grid
    /// points.
    std::optional<double> low;
    std::optional<double> high;
};

/// Evaluates q = q_min + k * step for k = 0..round((q_max - q_min) / step).
CrossoverScan crossover_scan(double q_min, double q_max, double step);

}  // namespace qswitch

#endif
