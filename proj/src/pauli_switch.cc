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

#include "qswitch/pauli_switch.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qswitch/errors.h"

namespace qswitch {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxClosedFormN) {
        throw DomainError("n must be in [1, " + std::to_string(kMaxClosedFormN) + "], got " + std::to_string(n));
    }
}

double term(int r1, int r2, int r3, const Vec4 &p) {
    return static_cast<double>(multinomial(r1, r2, r3)) * std::pow(p[1], r1) * std::pow(p[2], r2) *
           std::pow(p[3], r3);
}

PauliChannel normalized(const Vec4 &v, double total) {
    Vec4 out;
    for (int i = 0; i < 4; ++i) out[i] = v[i] / total;
    double sum = out[0] + out[1] + out[2] + out[3];
    for (auto &x : out) x /= sum;
    return PauliChannel(out);
}

// diff is expected to carry the sign of ref. Where ref vanishes diff must
// vanish too; small |ref| only rules out a clearly wrong sign.
bool sign_agrees(double diff, double ref) {
    if (std::abs(ref) <= 1e-12) return std::abs(diff) <= 1e-10;
    double aligned = ref > 0 ? diff : -diff;
    if (std::abs(ref) >= 1e-6) return aligned > 0;
    return aligned >= -1e-14;
}

bool is_zero(double x) { return std::abs(x) <= 1e-10; }

}  // namespace

const char *to_string(PnZeroClass c) {
    switch (c) {
        case PnZeroClass::EvenCommuting:
            return "even_commuting";
        case PnZeroClass::OddAtMostTwoKraus:
            return "odd_at_most_two_kraus";
        case PnZeroClass::Nonzero:
            return "nonzero";
    }
    return "?";
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t multinomial(int r1, int r2, int r3) {
    if (r1 < 0 || r2 < 0 || r3 < 0 || r1 + r2 + r3 > kMaxClosedFormN) {
        throw DomainError("multinomial arguments out of range");
    }
    return binomial(r1 + r2 + r3, r1) * binomial(r2 + r3, r2);
}

Vec4 coeff_d(int k, const Vec4 &p) {
    if (k < 0) throw DomainError("k must be nonnegative");
    Vec4 d{0, 0, 0, 0};
    for (int r1 = 0; r1 <= k; ++r1) {
        for (int r2 = 0; r1 + r2 <= k; ++r2) {
            int r3 = k - r1 - r2;
            std::array<int, 3> odd{r1 % 2, r2 % 2, r3 % 2};
            int odd_count = odd[0] + odd[1] + odd[2];
            if (k % 2 == 0 && odd_count == 0) {
                d[0] += term(r1, r2, r3, p);
            } else if (k % 2 == 1 && odd_count == 1) {
                int i = odd[0] ? 1 : odd[1] ? 2 : 3;
                d[i] += term(r1, r2, r3, p);
            }
        }
    }
    return d;
}

Vec4 coeff_e(int k, const Vec4 &p) {
    if (k < 0) throw DomainError("k must be nonnegative");
    Vec4 e{0, 0, 0, 0};
    for (int r1 = 0; r1 <= k; ++r1) {
        for (int r2 = 0; r1 + r2 <= k; ++r2) {
            int r3 = k - r1 - r2;
            std::array<int, 3> odd{r1 % 2, r2 % 2, r3 % 2};
            int odd_count = odd[0] + odd[1] + odd[2];
            if (k % 2 == 0 && odd_count == 2) {
                int i = !odd[0] ? 1 : !odd[1] ? 2 : 3;
                e[i] += term(r1, r2, r3, p);
            } else if (k % 2 == 1 && odd_count == 3) {
                e[0] += term(r1, r2, r3, p);
            }
        }
    }
    return e;
}

BranchCoeffs branch_coeffs(const PauliChannel &ch, int n) {
    check_n(n);
    const Vec4 &p = ch.p;
    BranchCoeffs b{{0, 0, 0, 0}, {0, 0, 0, 0}};
    for (int k = 0; k <= n; ++k) {
        double weight = std::pow(p[0], n - k) * static_cast<double>(binomial(n, k));
        if (weight == 0) continue;
        Vec4 d = coeff_d(k, p);
        for (int i = 0; i < 4; ++i) b.s[i] += weight * d[i];
        if (k >= 2) {
            Vec4 e = coeff_e(k, p);
            for (int i = 0; i < 4; ++i) b.t[i] += weight * e[i];
        }
    }
    return b;
}

double pn_pauli(const PauliChannel &ch, int n) {
    BranchCoeffs b = branch_coeffs(ch, n);
    return b.t[0] + b.t[1] + b.t[2] + b.t[3];
}

SwitchBranches switch_branches(const PauliChannel &ch, int n) {
    BranchCoeffs b = branch_coeffs(ch, n);
    double pn = b.t[0] + b.t[1] + b.t[2] + b.t[3];
    SwitchBranches out{pn, normalized(b.s, 1 - pn), std::nullopt};
    if (pn >= 1e-12) out.phi_minus = normalized(b.t, pn);
    return out;
}

CMatrix switch_choi_pauli(const PauliChannel &ch, int n) { return switch_choi_pauli(branch_coeffs(ch, n)); }

CMatrix switch_choi_pauli(const BranchCoeffs &b) {
    double r = 1 / std::sqrt(2.0);
    CMatrix plus = CMatrix::outer(std::vector<Complex>{r, r});
    CMatrix minus = CMatrix::outer(std::vector<Complex>{r, -r});
    return choi_of_map(2, 4, [&](const CMatrix &rho) {
        CMatrix sp(2, 2), sm(2, 2);
        for (int i = 0; i < 4; ++i) {
            CMatrix conj = pauli_matrix(i) * rho * pauli_matrix(i);
            sp += Complex(b.s[i]) * conj;
            sm += Complex(b.t[i]) * conj;
        }
        return kron(sp, plus) + kron(sm, minus);
    });
}

double max_abs_transfer_eigenvalue(const PauliChannel &ch) {
    auto lambda = pauli_transfer_eigenvalues(ch);
    double best = std::abs(lambda[0]);
    for (int i = 1; i < 3; ++i) best = std::max(best, std::abs(lambda[i]));
    return std::min(best, 1.0);
}

double classical_capacity_pauli(const PauliChannel &ch) { return 1 - h_lambda(max_abs_transfer_eigenvalue(ch)); }

double classical_capacity_switch(const SwitchBranches &b) {
    double c = (1 - b.pn) * classical_capacity_pauli(b.phi_plus);
    if (b.phi_minus) c += b.pn * classical_capacity_pauli(*b.phi_minus);
    return c;
}

double coherent_info_pauli(const PauliChannel &ch) { return 1 - shannon_entropy(ch.p); }

double coherent_info_switch(const SwitchBranches &b) {
    double loss = (1 - b.pn) * shannon_entropy(b.phi_plus.p);
    if (b.phi_minus) loss += b.pn * shannon_entropy(b.phi_minus->p);
    return 1 - loss;
}

GainReport gain_report(const PauliChannel &ch, int n) {
    SwitchBranches b = switch_branches(ch, n);
    PauliChannel composite = pauli_power(ch, n);
    GainReport r{};
    r.pn = b.pn;
    r.lambda = max_abs_transfer_eigenvalue(composite);
    r.mu = max_abs_transfer_eigenvalue(b.phi_plus);
    if (b.phi_minus) r.nu = max_abs_transfer_eigenvalue(*b.phi_minus);
    r.capacity_composite = 1 - h_lambda(r.lambda);
    r.capacity_switch = 1 - (1 - b.pn) * h_lambda(r.mu) - (r.nu ? b.pn * h_lambda(*r.nu) : 0.0);
    r.delta_c = r.capacity_switch - r.capacity_composite;
    r.coherent_composite = coherent_info_pauli(composite);
    r.coherent_switch = coherent_info_switch(b);
    r.delta_i = r.coherent_switch - r.coherent_composite;
    return r;
}

double delta_c(const PauliChannel &ch, int n) { return gain_report(ch, n).delta_c; }
double delta_i(const PauliChannel &ch, int n) { return gain_report(ch, n).delta_i; }

PnZeroClass pn_zero_classify(const PauliChannel &ch, int n) {
    if (n < 2) throw DomainError("classification needs n >= 2");
    int support = 0;
    int non_identity = 0;
    for (int i = 0; i < 4; ++i) {
        if (ch.p[i] > 0) {
            ++support;
            if (i > 0) ++non_identity;
        }
    }
    if (n % 2 == 0) return non_identity <= 1 ? PnZeroClass::EvenCommuting : PnZeroClass::Nonzero;
    return support <= 2 ? PnZeroClass::OddAtMostTwoKraus : PnZeroClass::Nonzero;
}

bool sign_properties_check(const PauliChannel &ch, int n) {
    const Vec4 &p = ch.p;
    BranchCoeffs b = branch_coeffs(ch, n);
    const Vec4 &s = b.s;
    const Vec4 &t = b.t;
    auto others = [](int i) {
        std::array<int, 2> o{};
        int c = 0;
        for (int j = 1; j <= 3; ++j)
            if (j != i) o[c++] = j;
        return o;
    };

    for (int i = 1; i <= 3; ++i) {
        auto [j, k] = others(i);
        bool product_zero = p[j] * p[k] == 0;
        if (n % 2 == 0) {
            // s_0 >= s_i, equal only at p_0 = p_i = 1/2.
            bool equality_case = p[0] == p[i] && p[j] == 0 && p[k] == 0;
            if (equality_case ? !is_zero(s[0] - s[i]) : !(s[0] - s[i] > 0)) return false;
            // t_0 <= t_i, equal exactly when p_j p_k = 0.
            if (product_zero ? !is_zero(t[0] - t[i]) : !(t[0] - t[i] < 0)) return false;
        } else {
            if (!sign_agrees(s[0] - s[i], p[0] - p[i])) return false;
            if (product_zero) {
                if ((t[0] - t[i]) * (p[0] - p[i]) > 1e-12) return false;
            } else if (!sign_agrees(t[0] - t[i], -(p[0] - p[i]))) {
                return false;
            }
        }
    }

    for (int i = 1; i <= 3; ++i) {
        auto [j, k] = others(i);
        // Pair (j, k) with the remaining index i.
        if (n % 2 == 0) {
            if (p[0] > 0) {
                if (!sign_agrees(s[j] - s[k], p[j] - p[k])) return false;
            } else if (!is_zero(s[j]) || !is_zero(s[k])) {
                return false;
            }
            if (p[i] > 0) {
                if (!sign_agrees(t[j] - t[k], -(p[j] - p[k]))) return false;
            } else if (!is_zero(t[j]) || !is_zero(t[k])) {
                return false;
            }
        } else {
            if (!sign_agrees(s[j] - s[k], p[j] - p[k])) return false;
            if (p[0] * p[i] > 0) {
                if (!sign_agrees(t[j] - t[k], -(p[j] - p[k]))) return false;
            } else if (!is_zero(t[j]) || !is_zero(t[k])) {
                return false;
            }
        }
    }
    return true;
}

bool same_index_check(const SwitchBranches &b) {
    if (!b.phi_minus) throw DomainError("same-index check needs P_n > 0");
    auto mu = pauli_transfer_eigenvalues(b.phi_plus);
    auto nu = pauli_transfer_eigenvalues(*b.phi_minus);
    double mu_max = 0, nu_max = 0;
    for (int i = 0; i < 3; ++i) {
        mu_max = std::max(mu_max, std::abs(mu[i]));
        nu_max = std::max(nu_max, std::abs(nu[i]));
    }
    for (int i = 0; i < 3; ++i) {
        if (std::abs(mu[i]) >= mu_max - 1e-12 && std::abs(nu[i]) >= nu_max - 1e-12) return true;
    }
    return false;
}

}  // namespace qswitch
