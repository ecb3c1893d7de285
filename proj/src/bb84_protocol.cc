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

#include "qswitch/bb84_protocol.h"

#include <algorithm>
#include <cmath>

#include "qswitch/errors.h"
#include "qswitch/pauli_switch.h"

namespace qswitch {

namespace {

void check_rate(double q) {
    if (!(q >= 0 && q <= 1)) throw DomainError("error rate must lie in [0, 1]");
}

// Positive inside the advantage region, negative outside; continuous in q.
double margin(double q) {
    ProtocolReport r = protocol_report(q);
    return std::min(r.switch_coherent_info, -r.raw_upper_bound);
}

double bisect(double inside, double outside) {
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (inside + outside);
        (margin(mid) >= 0 ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
}

}  // namespace

BB84Channel::BB84Channel(double error_rate) : q(error_rate) { check_rate(q); }

PauliChannel bb84_as_pauli(double q) {
    check_rate(q);
    return PauliChannel({(1 - q) * (1 - q), q * (1 - q), q * q, q * (1 - q)});
}

double private_upper_bound_raw(double x) {
    check_rate(x);
    double e = 2 * x * (1 - x);
    return binary_entropy(0.5 - e) - binary_entropy(e);
}

double private_upper_bound(double x) { return std::max(0.0, private_upper_bound_raw(x)); }

PauliChannel sigma_y_conjugate(const BB84Channel &ch) {
    // Y I = Y, Y X ~ Z, Y Y = I, Y Z ~ X up to phases.
    PauliChannel n = bb84_as_pauli(ch.q);
    return PauliChannel({n.p[2], n.p[3], n.p[0], n.p[1]});
}

ProtocolReport protocol_report(double q) {
    BB84Channel ch(q);
    ProtocolReport r{};
    r.q = q;
    r.composite_error_rate = 2 * q - 2 * q * q;
    r.raw_upper_bound = private_upper_bound_raw(r.composite_error_rate);
    r.composite_upper_bound = std::max(0.0, r.raw_upper_bound);
    r.switch_coherent_info = coherent_info_switch(switch_branches(sigma_y_conjugate(ch), 2));
    r.advantage = r.composite_upper_bound <= 0 && r.switch_coherent_info > 0;
    return r;
}

CrossoverScan crossover_scan(double q_min, double q_max, double step) {
    check_rate(q_min);
    check_rate(q_max);
    if (!(step > 0) || q_max < q_min) throw DomainError("need step > 0 and q_min <= q_max");
    auto count = static_cast<long>(std::llround((q_max - q_min) / step));
    CrossoverScan scan;
    for (long k = 0; k <= count; ++k) {
        scan.rows.push_back(protocol_report(std::min(q_max, q_min + static_cast<double>(k) * step)));
    }

    size_t best_start = 0, best_len = 0;
    for (size_t i = 0; i < scan.rows.size();) {
        if (!scan.rows[i].advantage) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < scan.rows.size() && scan.rows[j].advantage) ++j;
        if (j - i > best_len) {
            best_start = i;
            best_len = j - i;
        }
        i = j;
    }
    if (best_len == 0) return scan;

    size_t last = best_start + best_len - 1;
    scan.grid_low = scan.rows[best_start].q;
    scan.grid_high = scan.rows[last].q;
    scan.low = best_start > 0 ? bisect(*scan.grid_low, scan.rows[best_start - 1].q) : *scan.grid_low;
    scan.high = last + 1 < scan.rows.size() ? bisect(*scan.grid_high, scan.rows[last + 1].q) : *scan.grid_high;
    return scan;
}

}  // namespace qswitch
