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

#include "qswitch/depol_switch.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qswitch/channel_model.h"
#include "qswitch/errors.h"

namespace qswitch {

namespace {

void check_args(int d, double p, int n) {
    if (d < 2) throw DomainError("d must be at least 2");
    if (!(p >= 0 && p <= 1)) throw DomainError("p must lie in [0, 1]");
    if (n < 1) throw DomainError("n must be positive");
}

struct Powers {
    double a;  // (1 - p + p/d)^n
    double b;  // (1 - p - p/d)^n
    double c;  // (1 - p)^n
};

Powers powers(int d, double p, int n) {
    double dd = d;
    return {std::pow(1 - p + p / dd, n), std::pow(1 - p - p / dd, n), std::pow(1 - p, n)};
}

double pn_from(int d, const Powers &w) { return 0.5 - 0.25 * ((d + 1) * w.a - (d - 1) * w.b); }

// Output of a pure state under the depolarizing map with parameter l.
double depol_output_entropy(int d, double l) {
    double top = 1 - l + l / d;
    std::vector<double> spectrum(static_cast<size_t>(d), l / d);
    spectrum[0] = top;
    return shannon_entropy(spectrum);
}

CMatrix depol_map(const CMatrix &rho, double l) {
    size_t d = rho.rows();
    return Complex(1 - l) * rho + Complex(l / static_cast<double>(d)) * trace(rho) * CMatrix::identity(d);
}

}  // namespace

double pn_depol(int d, double p, int n) {
    check_args(d, p, n);
    double pn = pn_from(d, powers(d, p, n));
    if (pn < -1e-12 || pn > 0.5 + 1e-12) {
        throw ConvergenceError("P_n left [0, 1/2]: " + std::to_string(pn));
    }
    return std::clamp(pn, 0.0, 0.5);
}

DepolBranches depol_branches(int d, double p, int n) {
    double pn = pn_depol(d, p, n);
    Powers w = powers(d, p, n);
    double mixed = 1 - w.c;
    double split = 0.5 * d * (w.a - w.b);
    DepolBranches r{d, n, p, pn, 0.0, std::nullopt};
    r.lambda1 = std::clamp((mixed + split) / (2 * (1 - pn)), 0.0, 1.0);
    if (pn >= 1e-12) {
        double upper = static_cast<double>(d) * d / (static_cast<double>(d) * d - 1);
        r.lambda2 = std::clamp((mixed - split) / (2 * pn), 1.0, upper);
    }
    return r;
}

double hmin_depol(int d, double l) {
    if (d < 2) throw DomainError("d must be at least 2");
    double upper = static_cast<double>(d) * d / (static_cast<double>(d) * d - 1);
    if (l < -1e-12 || l > upper + 1e-12) throw DomainError("depolarizing parameter out of range");
    return depol_output_entropy(d, std::clamp(l, 0.0, upper));
}

double capacity_depol(int d, double p, int n) {
    check_args(d, p, n);
    return std::log2(d) - hmin_depol(d, 1 - std::pow(1 - p, n));
}

double capacity_depol_switch(const DepolBranches &b) {
    double c = std::log2(b.d) - (1 - b.pn) * hmin_depol(b.d, b.lambda1);
    if (b.lambda2) c -= b.pn * hmin_depol(b.d, *b.lambda2);
    return c;
}

double delta_c_depol(int d, double p, int n) {
    return capacity_depol_switch(depol_branches(d, p, n)) - capacity_depol(d, p, n);
}

CMatrix switch_choi_depol(int d, double p, int n) { return switch_choi_depol(depol_branches(d, p, n)); }

CMatrix switch_choi_depol(const DepolBranches &b) {
    int d = b.d;
    double r = 1 / std::sqrt(2.0);
    CMatrix plus = CMatrix::outer(std::vector<Complex>{r, r});
    CMatrix minus = CMatrix::outer(std::vector<Complex>{r, -r});
    auto dim = static_cast<size_t>(d);
    return choi_of_map(dim, 2 * dim, [&](const CMatrix &rho) {
        CMatrix out = kron(Complex(1 - b.pn) * depol_map(rho, b.lambda1), plus);
        if (b.lambda2) out += kron(Complex(b.pn) * depol_map(rho, *b.lambda2), minus);
        return out;
    });
}

NOptScan n_opt_scan(int d, double p, int n_max) {
    if (n_max < 1 || n_max > kMaxScanN) {
        throw DomainError("n_max must be in [1, " + std::to_string(kMaxScanN) + "]");
    }
    NOptScan scan{1, {}};
    for (int n = 1; n <= n_max; ++n) {
        scan.delta_c.push_back(delta_c_depol(d, p, n));
        if (scan.delta_c.back() > scan.delta_c[scan.n_opt - 1]) scan.n_opt = n;
    }
    return scan;
}

}  // namespace qswitch
