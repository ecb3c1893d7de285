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

#include "qswitch/switch_bruteforce.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qswitch/errors.h"
#include "qswitch/pauli_switch.h"
#include "test_util.h"

using namespace qswitch;
namespace tu = qswitch::testutil;
using tu::max_abs_diff;

namespace {

KrausChannel amplitude_damping(double gamma) {
    CMatrix k0{{1, 0}, {0, std::sqrt(1 - gamma)}};
    CMatrix k1{{0, std::sqrt(gamma)}, {0, 0}};
    return KrausChannel(2, 2, {k0, k1});
}

KrausChannel pauli(std::array<double, 4> p) { return pauli_to_kraus(PauliChannel(p)); }

bool is_cptp(const SwitchOutput &out) {
    CMatrix reduced = partial_trace(out.choi, out.output_dim(), out.dim_in, Keep::Second);
    return hermitian_eigenvalues(out.choi).front() > -1e-9 &&
           frobenius_distance(reduced, CMatrix::identity(out.dim_in)) < 1e-9;
}

}  // namespace

TEST(switch_bruteforce, permutation_set_validation) {
    EXPECT_THROW(PermutationSet(2, {}), DomainError);
    EXPECT_THROW(PermutationSet(2, {{0, 0}}), DomainError);
    EXPECT_THROW(PermutationSet(2, {{0, 1}, {0, 1}}), DomainError);
    EXPECT_THROW(PermutationSet(3, {{0, 1}}), DomainError);
    EXPECT_THROW(PermutationSet::forward_backward(1), DomainError);
    auto fb = PermutationSet::forward_backward(3);
    EXPECT_EQ(fb.perms()[1], (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(PermutationSet::cyclic(4).m(), 4u);
}

TEST(switch_bruteforce, control_state_validation) {
    EXPECT_THROW(ControlState(CMatrix{{0.5, 0}, {0, 0.4}}), DomainError);
    EXPECT_THROW(ControlState(CMatrix{{1.5, 0}, {0, -0.5}}), DomainError);
    EXPECT_THROW(ControlState(CMatrix{{0.5, 0.5}, {0, 0.5}}), DomainError);
    EXPECT_TRUE(ControlState::uniform(3).is_pure());
    EXPECT_FALSE(ControlState(Complex(0.5) * CMatrix::identity(2)).is_pure());
}

TEST(switch_bruteforce, single_order_is_channel_times_control) {
    std::mt19937_64 rng(21);
    KrausChannel ch = tu::random_channel(rng, 2, 3);
    SwitchOutput out = effective_switch(std::vector{ch}, PermutationSet(1, {{0}}), ControlState(CMatrix{{1}}));
    EXPECT_LT(max_abs_diff(out.choi, choi(ch)), 1e-12);
}

TEST(switch_bruteforce, identical_unitaries_trace_to_square) {
    double t = 0.37;
    CMatrix u{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
    u = u * CMatrix{{1, 0}, {0, std::polar(1.0, 0.8)}};
    KrausChannel ch = unitary_channel(u);
    SwitchOutput out = effective_switch(copies(ch, 2), PermutationSet::forward_backward(2), ControlState::uniform(2));
    EXPECT_LT(max_abs_diff(trace_out_control(out), choi(unitary_channel(u * u))), 1e-12);
}

TEST(switch_bruteforce, completely_depolarizing_pair_matches_branches) {
    PauliChannel flat({0.25, 0.25, 0.25, 0.25});
    SwitchOutput out =
        effective_switch(copies(pauli_to_kraus(flat), 2), PermutationSet::forward_backward(2), ControlState::uniform(2));
    EXPECT_LT(frobenius_distance(out.choi, switch_choi_pauli(flat, 2)), 1e-10);
    // Same map written out: (5/8) Phi_+ (x) |+><+| + (3/8) Phi_- (x) |-><-|.
    double r = 1 / std::numbers::sqrt2;
    CMatrix plus = CMatrix::outer(std::vector<Complex>{r, r}), minus = CMatrix::outer(std::vector<Complex>{r, -r});
    std::array<double, 4> phi_plus{0.4, 0.2, 0.2, 0.2}, phi_minus{0, 1.0 / 3, 1.0 / 3, 1.0 / 3};
    CMatrix expected = choi_of_map(2, 4, [&](const CMatrix &rho) {
        CMatrix a(2, 2), b(2, 2);
        for (int i = 0; i < 4; ++i) {
            a += Complex(phi_plus[i]) * pauli_matrix(i) * rho * pauli_matrix(i);
            b += Complex(phi_minus[i]) * pauli_matrix(i) * rho * pauli_matrix(i);
        }
        return Complex(5.0 / 8) * kron(a, plus) + Complex(3.0 / 8) * kron(b, minus);
    });
    EXPECT_LT(frobenius_distance(out.choi, expected), 1e-10);
}

TEST(switch_bruteforce, pn_exact_known_values) {
    for (int n = 2; n <= 5; ++n) {
        EXPECT_NEAR(pn_exact(copies(pauli({1, 0, 0, 0}), n), PermutationSet::forward_backward(n)), 0, 1e-12);
    }
    EXPECT_NEAR(pn_exact(copies(pauli({0.25, 0.25, 0.25, 0.25}), 2), PermutationSet::forward_backward(2)), 0.375,
                1e-12);
    EXPECT_NEAR(pn_exact(copies(pauli({0.5, 0.5, 0, 0}), 2), PermutationSet::forward_backward(2)), 0, 1e-12);
    EXPECT_NEAR(pn_exact(copies(pauli({0.4, 0.3, 0.2, 0.1}), 3), PermutationSet::forward_backward(3)), 0.3, 1e-12);
    EXPECT_NEAR(pn_exact(copies(pauli({0.4, 0.3, 0.2, 0.1}), 2), PermutationSet::forward_backward(2)), 0.22, 1e-12);
    EXPECT_NEAR(pn_exact(copies(pauli({0.5, 0.2, 0.2, 0.1}), 4), PermutationSet::forward_backward(4)), 0.3328,
                1e-12);
    EXPECT_NEAR(pn_exact(copies(pauli({0.7, 0.1, 0.15, 0.05}), 5), PermutationSet::forward_backward(5)), 0.231,
                1e-12);
}

TEST(switch_bruteforce, state_dependence) {
    auto fb = PermutationSet::forward_backward(2);
    auto uniform = ControlState::uniform(2);
    std::mt19937_64 rng(22);
    for (int t = 0; t < 5; ++t) {
        auto s = pn_state_dependence(copies(pauli_to_kraus(tu::random_pauli(rng)), 2), fb, uniform);
        EXPECT_LT(s.spread(), 1e-10);
    }
    auto depol = pn_state_dependence(copies(depol_to_kraus(DepolChannel(3, 0.6)), 2), fb, uniform);
    EXPECT_LT(depol.spread(), 1e-10);

    std::vector<KrausChannel> asymmetric{amplitude_damping(0.6), pauli({0.5, 0, 0, 0.5})};
    auto a = pn_state_dependence(asymmetric, fb, uniform);
    EXPECT_GT(a.spread(), 1e-3);
    EXPECT_LE(a.sampled_max, a.spectral_max + 1e-12);
    EXPECT_GE(a.sampled_min, a.spectral_min - 1e-12);
    EXPECT_NEAR(a.max, pn_exact(asymmetric, fb), 1e-12);

    EXPECT_THROW(pn_state_dependence(asymmetric, fb, ControlState(Complex(0.5) * CMatrix::identity(2))), DomainError);
}

TEST(switch_bruteforce, probe_states_are_normalized) {
    for (size_t d : {2u, 3u, 4u}) {
        auto states = probe_states(d);
        EXPECT_EQ(states.size(), (d == 2 ? 6 : d * d + d) + 100);
        for (const auto &v : states) {
            double norm = 0;
            for (auto x : v) norm += std::norm(x);
            EXPECT_NEAR(norm, 1, 1e-12);
        }
    }
}

TEST(switch_bruteforce, s_invariance) {
    std::mt19937_64 rng(23);
    KrausChannel u = tu::random_channel(rng, 2, 1);
    EXPECT_TRUE(s_invariance_check(copies(u, 3), PermutationSet::forward_backward(3)).invariant);
    for (int n : {2, 4}) {
        EXPECT_TRUE(s_invariance_check(copies(pauli({0.5, 0.5, 0, 0}), n), PermutationSet::forward_backward(n)).invariant);
    }
    auto flat = s_invariance_check(copies(pauli({0.25, 0.25, 0.25, 0.25}), 2), PermutationSet::forward_backward(2));
    EXPECT_FALSE(flat.invariant);
    ASSERT_TRUE(flat.violating_tuple);
    EXPECT_EQ(*flat.violating_tuple, (std::vector<size_t>{1, 2}));
    EXPECT_EQ(flat.violating_orders->second, 1u);
}

TEST(switch_bruteforce, s_invariance_agrees_with_pn_exact) {
    std::vector<std::array<double, 4>> cases{
        {0.5, 0.5, 0, 0}, {0, 0.3, 0.7, 0}, {0.2, 0, 0, 0.8}, {0.4, 0.3, 0.3, 0}, {0, 0.2, 0.3, 0.5}, {0.25, 0.25, 0.25, 0.25}};
    for (const auto &p : cases) {
        for (int n = 2; n <= 5; ++n) {
            auto k = copies(pauli(p), n);
            auto fb = PermutationSet::forward_backward(n);
            bool invariant = s_invariance_check(k, fb).invariant;
            EXPECT_EQ(invariant, pn_exact(k, fb) < 1e-12) << p[0] << " " << p[1] << " " << p[2] << " " << p[3] << " n=" << n;
        }
    }
}

TEST(switch_bruteforce, capacity_floor) {
    std::mt19937_64 rng(24);
    for (int n : {2, 3}) {
        EXPECT_TRUE(capacity_floor_check(copies(pauli({1, 0, 0, 0}), n), PermutationSet::forward_backward(n),
                                         ControlState::uniform(2)));
    }
    EXPECT_TRUE(capacity_floor_check(copies(pauli({0.5, 0.5, 0, 0}), 2), PermutationSet::forward_backward(2),
                                     ControlState::uniform(2)));
    EXPECT_TRUE(capacity_floor_check(copies(pauli({0, 0.5, 0.5, 0}), 3), PermutationSet::forward_backward(3),
                                     ControlState::uniform(2)));
    ControlState skewed = ControlState::pure(std::vector<Complex>{0.6, Complex(0, 0.8)});
    EXPECT_TRUE(capacity_floor_check(copies(pauli({0.3, 0, 0, 0.7}), 4), PermutationSet::forward_backward(4), skewed));
    EXPECT_THROW(capacity_floor_check(copies(pauli({0.25, 0.25, 0.25, 0.25}), 2), PermutationSet::forward_backward(2),
                                      ControlState::uniform(2)),
                 DomainError);
}

TEST(switch_bruteforce, output_is_cptp_for_general_inputs) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 4; ++t) {
        std::vector<KrausChannel> chans{tu::random_channel(rng, 2, 2), tu::random_channel(rng, 2, 3),
                                        tu::random_channel(rng, 2, 2)};
        auto orders = PermutationSet::cyclic(3);
        auto omega = ControlState::pure(tu::random_vector(rng, 3));
        EXPECT_TRUE(is_cptp(effective_switch(chans, orders, omega)));
        auto mixed = ControlState(tu::random_state(rng, 3));
        EXPECT_TRUE(is_cptp(effective_switch(chans, orders, mixed)));
    }
}

TEST(switch_bruteforce, diagonal_control_gives_mixture_of_orders) {
    std::mt19937_64 rng(26);
    std::vector<KrausChannel> chans{tu::random_channel(rng, 2, 2), tu::random_channel(rng, 2, 2),
                                    tu::random_channel(rng, 2, 3)};
    PermutationSet orders(3, {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
    std::array<double, 3> w{0.5, 0.3, 0.2};
    CMatrix omega(3, 3);
    for (int k = 0; k < 3; ++k) omega(k, k) = w[k];
    SwitchOutput out = effective_switch(chans, orders, ControlState(omega));

    CMatrix expected(4, 4);
    for (int k = 0; k < 3; ++k) {
        const auto &p = orders.perms()[k];
        // Product K^{p0} K^{p1} K^{p2}: channel p2 acts first.
        KrausChannel composite = compose(chans[p[0]], compose(chans[p[1]], chans[p[2]]));
        expected += Complex(w[k]) * choi(composite);
    }
    EXPECT_LT(max_abs_diff(trace_out_control(out), expected), 1e-12);

    SwitchOutput single = effective_switch(chans, PermutationSet(3, {{0, 1, 2}}), ControlState(CMatrix{{1}}));
    EXPECT_LT(max_abs_diff(trace_out_control(single), choi(compose(chans[0], compose(chans[1], chans[2])))), 1e-12);
}

TEST(switch_bruteforce, pn_exact_is_independent_of_kraus_representation) {
    std::mt19937_64 rng(27);
    KrausChannel ch = tu::random_channel(rng, 2, 3);
    auto fb = PermutationSet::forward_backward(3);
    double reference = pn_exact(copies(ch, 3), fb);

    std::vector<CMatrix> reversed(ch.kraus().rbegin(), ch.kraus().rend());
    EXPECT_NEAR(pn_exact(copies(KrausChannel(2, 2, reversed), 3), fb), reference, 1e-10);

    // Mix the operators with a unitary V: K'_i = sum_j V_ij K_j.
    double a = 0.7;
    std::array<std::array<Complex, 3>, 3> v{{{std::cos(a), -std::sin(a), 0}, {std::sin(a), std::cos(a), 0}, {0, 0, Complex(0, 1)}}};
    std::vector<CMatrix> mixed;
    for (int i = 0; i < 3; ++i) {
        CMatrix m(2, 2);
        for (int j = 0; j < 3; ++j) m += v[i][j] * ch.kraus()[j];
        mixed.push_back(m);
    }
    EXPECT_NEAR(pn_exact(copies(KrausChannel(2, 2, mixed), 3), fb), reference, 1e-10);
}

TEST(switch_bruteforce, enumeration_cap_and_dimension_errors) {
    auto k = copies(depol_to_kraus(DepolChannel(3, 0.5)), 4);
    EXPECT_THROW(effective_switch(k, PermutationSet::forward_backward(4), ControlState::uniform(2), {.cap = 1000}),
                 CapExceeded);
    EXPECT_THROW(pn_exact(k, PermutationSet::forward_backward(4), {.cap = 1000}), CapExceeded);
    EXPECT_THROW(s_invariance_check(k, PermutationSet::forward_backward(4), {.cap = 1000}), CapExceeded);

    std::vector<KrausChannel> mixed_dims{pauli({1, 0, 0, 0}), depol_to_kraus(DepolChannel(3, 0.5))};
    EXPECT_THROW(effective_switch(mixed_dims, PermutationSet::forward_backward(2), ControlState::uniform(2)),
                 DimensionError);
    EXPECT_THROW(effective_switch(copies(pauli({1, 0, 0, 0}), 3), PermutationSet::forward_backward(2),
                                  ControlState::uniform(2)),
                 DimensionError);
    EXPECT_THROW(effective_switch(copies(pauli({1, 0, 0, 0}), 2), PermutationSet::forward_backward(2),
                                  ControlState::uniform(3)),
                 DimensionError);
}

TEST(switch_bruteforce, result_does_not_depend_on_thread_count) {
    auto k = copies(pauli_to_kraus(PauliChannel({0.4, 0.3, 0.2, 0.1})), 5);
    auto fb = PermutationSet::forward_backward(5);
    auto one = effective_switch(k, fb, ControlState::uniform(2), {.threads = 1});
    auto many = effective_switch(k, fb, ControlState::uniform(2), {.threads = 7});
    for (size_t i = 0; i < one.choi.data().size(); ++i) EXPECT_EQ(one.choi.data()[i], many.choi.data()[i]);
}
