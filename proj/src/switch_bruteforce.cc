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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "qswitch/errors.h"

namespace qswitch {

namespace {

// Fixed chunk count so the floating-point summation order (and hence the
// result bits) does not depend on how many threads ran.
constexpr size_t kChunks = 64;

void check_channels(std::span<const KrausChannel> channels, const PermutationSet &orders) {
    if (channels.size() != static_cast<size_t>(orders.n())) {
        throw DimensionError("expected " + std::to_string(orders.n()) + " channels, got " +
                             std::to_string(channels.size()));
    }
    size_t d = channels.front().dim_in();
    for (const auto &ch : channels) {
        if (ch.dim_in() != d || ch.dim_out() != d) {
            throw DimensionError("switched channels must all map C^d to C^d with the same d");
        }
    }
}

std::uint64_t tuple_count(std::span<const KrausChannel> channels, std::uint64_t per_tuple, std::uint64_t cap) {
    std::uint64_t total = per_tuple;
    for (const auto &ch : channels) {
        total *= ch.kraus().size();
        if (total > cap) {
            throw CapExceeded("enumeration needs more than " + std::to_string(cap) + " terms");
        }
    }
    return total / per_tuple;
}

void decode_tuple(std::uint64_t t, std::span<const KrausChannel> channels, std::vector<size_t> &s) {
    for (size_t j = channels.size(); j-- > 0;) {
        size_t r = channels[j].kraus().size();
        s[j] = static_cast<size_t>(t % r);
        t /= r;
    }
}

CMatrix ordered_product(std::span<const KrausChannel> channels, const std::vector<int> &perm,
                        const std::vector<size_t> &s) {
    CMatrix out = channels[perm[0]].kraus()[s[perm[0]]];
    for (size_t j = 1; j < perm.size(); ++j) {
        out = out * channels[perm[j]].kraus()[s[perm[j]]];
    }
    return out;
}

unsigned worker_count(unsigned requested) {
    unsigned hw = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return std::min<unsigned>(hw, kChunks);
}

// Runs body(chunk_begin, chunk_end, chunk_index) over [0, total) split into
// kChunks pieces.
template <typename Body>
void for_chunks(std::uint64_t total, unsigned threads, Body body) {
    std::uint64_t chunk = (total + kChunks - 1) / kChunks;
    auto run = [&](unsigned worker) {
        for (size_t c = worker; c < kChunks; c += threads) {
            std::uint64_t lo = std::min<std::uint64_t>(total, c * chunk);
            std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            body(lo, hi, c);
        }
    };
    if (threads <= 1 || total < 256) {
        threads = 1;
        run(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
}

void verify_cptp(const CMatrix &choi_matrix, size_t dim_in, size_t dim_out) {
    CMatrix reduced = partial_trace(choi_matrix, dim_out, dim_in, Keep::Second);
    if (frobenius_distance(reduced, CMatrix::identity(dim_in)) > 1e-9) {
        throw ConvergenceError("assembled switch channel is not trace preserving");
    }
    auto ev = hermitian_eigenvalues(choi_matrix);
    if (ev.front() < -1e-9) {
        throw ConvergenceError("assembled switch channel is not completely positive");
    }
}

CMatrix pure_effect_complement(const ControlState &control) {
    if (!control.is_pure()) {
        throw DomainError("F2 = I - omega needs a pure control state");
    }
    return CMatrix::identity(control.m()) - control.matrix();
}

}  // namespace

PermutationSet::PermutationSet(int n, std::vector<std::vector<int>> perms) : n_(n), perms_(std::move(perms)) {
    if (n < 1) throw DomainError("permutation length must be positive");
    if (perms_.empty()) throw DomainError("permutation set is empty");
    std::set<std::vector<int>> seen;
    for (const auto &p : perms_) {
        if (p.size() != static_cast<size_t>(n)) throw DomainError("permutation has wrong length");
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) {
            if (sorted[i] != i) throw DomainError("not a permutation of 0..n-1");
        }
        if (!seen.insert(p).second) throw DomainError("duplicate permutation");
    }
}

PermutationSet PermutationSet::forward_backward(int n) {
    if (n < 2) throw DomainError("forward and backward orders coincide for n < 2");
    std::vector<int> fwd(n);
    for (int i = 0; i < n; ++i) fwd[i] = i;
    std::vector<int> bwd(fwd.rbegin(), fwd.rend());
    return PermutationSet(n, {fwd, bwd});
}

PermutationSet PermutationSet::cyclic(int n) {
    std::vector<std::vector<int>> perms;
    for (int shift = 0; shift < n; ++shift) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = (i + shift) % n;
        perms.push_back(std::move(p));
    }
    return PermutationSet(n, std::move(perms));
}

ControlState::ControlState(CMatrix omega) : omega_(std::move(omega)) {
    if (!omega_.is_square() || omega_.rows() == 0) throw DimensionError("control state must be square");
    if (hermiticity_defect(omega_) > 1e-10) throw DomainError("control state is not Hermitian");
    if (std::abs(trace(omega_) - Complex(1.0)) > 1e-10) throw DomainError("control state must have unit trace");
    if (hermitian_eigenvalues(omega_).front() < -1e-10) throw DomainError("control state is not PSD");
}

ControlState ControlState::uniform(size_t m) {
    std::vector<Complex> amp(m, Complex(1.0 / std::sqrt(static_cast<double>(m))));
    return ControlState(CMatrix::outer(amp));
}

ControlState ControlState::pure(std::span<const Complex> amplitudes) {
    double norm = 0;
    for (auto a : amplitudes) norm += std::norm(a);
    if (norm <= 0) throw DomainError("zero control vector");
    std::vector<Complex> v(amplitudes.begin(), amplitudes.end());
    for (auto &a : v) a /= std::sqrt(norm);
    return ControlState(CMatrix::outer(v));
}

bool ControlState::is_pure(double tol) const {
    return std::abs(trace(omega_ * omega_) - Complex(1.0)) <= tol;
}

std::vector<KrausChannel> copies(const KrausChannel &ch, int n) {
    if (n < 1) throw DomainError("need at least one copy");
    return std::vector<KrausChannel>(static_cast<size_t>(n), ch);
}

SwitchOutput effective_switch(std::span<const KrausChannel> channels, const PermutationSet &orders,
                              const ControlState &control, const EnumerationOptions &options) {
    check_channels(channels, orders);
    size_t m = orders.m();
    if (control.m() != m) throw DimensionError("control dimension must equal the number of orders");
    size_t d = channels.front().dim_in();
    std::uint64_t total = tuple_count(channels, m * m, options.cap);

    size_t side = d * m * d;
    const CMatrix &w = control.matrix();
    std::vector<CMatrix> partial(kChunks, CMatrix(side, side));
    unsigned threads = worker_count(options.threads);

    for_chunks(total, threads, [&](std::uint64_t lo, std::uint64_t hi, size_t chunk) {
        CMatrix &acc = partial[chunk];
        std::vector<size_t> s(channels.size());
        std::vector<CMatrix> prods;
        for (std::uint64_t t = lo; t < hi; ++t) {
            decode_tuple(t, channels, s);
            prods.clear();
            for (const auto &perm : orders.perms()) prods.push_back(ordered_product(channels, perm, s));
            for (size_t k = 0; k < m; ++k) {
                for (size_t l = 0; l < m; ++l) {
                    Complex wkl = w(k, l);
                    if (wkl == Complex(0)) continue;
                    const CMatrix &kk = prods[k];
                    const CMatrix &kl = prods[l];
                    for (size_t i = 0; i < d; ++i) {
                        for (size_t a = 0; a < d; ++a) {
                            Complex left = wkl * kk(i, a);
                            if (left == Complex(0)) continue;
                            size_t row = (i * m + k) * d + a;
                            for (size_t j = 0; j < d; ++j) {
                                for (size_t b = 0; b < d; ++b) {
                                    acc(row, (j * m + l) * d + b) += left * std::conj(kl(j, b));
                                }
                            }
                        }
                    }
                }
            }
        }
    });

    CMatrix choi_matrix(side, side);
    for (const auto &p : partial) choi_matrix += p;
    verify_cptp(choi_matrix, d, d * m);
    return SwitchOutput{std::move(choi_matrix), orders.n(), m, d, d};
}

CMatrix control_effect_operator(const SwitchOutput &out, const CMatrix &control_effect) {
    if (control_effect.rows() != out.m || control_effect.cols() != out.m) {
        throw DimensionError("control effect has wrong size");
    }
    CMatrix effect = kron(CMatrix::identity(out.dim_out), control_effect);
    CMatrix weighted = kron(effect, CMatrix::identity(out.dim_in)) * out.choi;
    // tr[F S(rho)] = tr[G' rho^T] with G' = tr_out[(F (x) I) J]; return G'^T.
    return transpose(partial_trace(weighted, out.output_dim(), out.dim_in, Keep::Second));
}

double pn_exact(std::span<const KrausChannel> channels, const PermutationSet &orders,
                const EnumerationOptions &options) {
    return pn_from_output(effective_switch(channels, orders, ControlState::uniform(orders.m()), options));
}

double pn_from_output(const SwitchOutput &out) {
    ControlState control = ControlState::uniform(out.m);
    CMatrix g = control_effect_operator(out, pure_effect_complement(control));
    return hermitian_eigenvalues(g).back();
}

std::vector<std::vector<Complex>> probe_states(size_t d) {
    std::vector<std::vector<Complex>> states;
    if (d == 2) {
        double r = 1 / std::numbers::sqrt2;
        const Complex i(0, 1);
        states = {{1, 0}, {0, 1}, {r, r}, {r, -r}, {r, i * r}, {r, -i * r}};
    } else {
        for (size_t k = 0; k < d; ++k) {
            std::vector<Complex> e(d, 0.0);
            e[k] = 1.0;
            states.push_back(std::move(e));
        }
        double amp = 1 / std::sqrt(static_cast<double>(d));
        for (size_t c = 0; c < d; ++c) {
            for (size_t k = 0; k < d; ++k) {
                std::vector<Complex> v(d);
                for (size_t j = 0; j < d; ++j) {
                    double phase = 2 * std::numbers::pi * static_cast<double>((c * j * j + k * j) % d) / d;
                    v[j] = std::polar(amp, phase);
                }
                states.push_back(std::move(v));
            }
        }
    }
    std::mt19937_64 rng(20260101);
    std::normal_distribution<double> normal;
    for (int h = 0; h < 100; ++h) {
        std::vector<Complex> v(d);
        double norm = 0;
        for (auto &x : v) {
            x = Complex(normal(rng), normal(rng));
            norm += std::norm(x);
        }
        for (auto &x : v) x /= std::sqrt(norm);
        states.push_back(std::move(v));
    }
    return states;
}

StateDependence pn_state_dependence(std::span<const KrausChannel> channels, const PermutationSet &orders,
                                    const ControlState &control, const EnumerationOptions &options) {
    SwitchOutput out = effective_switch(channels, orders, control, options);
    CMatrix g = control_effect_operator(out, pure_effect_complement(control));
    StateDependence r{};
    auto ev = hermitian_eigenvalues(g);
    r.spectral_min = ev.front();
    r.spectral_max = ev.back();
    r.sampled_min = INFINITY;
    r.sampled_max = -INFINITY;
    for (const auto &psi : probe_states(out.dim_in)) {
        double value = trace(g * CMatrix::outer(psi)).real();
        r.sampled_min = std::min(r.sampled_min, value);
        r.sampled_max = std::max(r.sampled_max, value);
    }
    r.min = std::min(r.sampled_min, r.spectral_min);
    r.max = std::max(r.sampled_max, r.spectral_max);
    return r;
}

SInvariance s_invariance_check(std::span<const KrausChannel> channels, const PermutationSet &orders,
                               const EnumerationOptions &options) {
    check_channels(channels, orders);
    std::uint64_t total = tuple_count(channels, orders.m(), options.cap);
    std::vector<size_t> s(channels.size());
    for (std::uint64_t t = 0; t < total; ++t) {
        decode_tuple(t, channels, s);
        CMatrix first = ordered_product(channels, orders.perms()[0], s);
        for (size_t l = 1; l < orders.m(); ++l) {
            CMatrix other = ordered_product(channels, orders.perms()[l], s);
            for (size_t e = 0; e < first.data().size(); ++e) {
                if (std::abs(first.data()[e] - other.data()[e]) > 1e-10) {
                    return SInvariance{false, s, std::pair<size_t, size_t>{0, l}};
                }
            }
        }
    }
    return SInvariance{true, std::nullopt, std::nullopt};
}

bool capacity_floor_check(std::span<const KrausChannel> channels, const PermutationSet &orders,
                          const ControlState &control, const EnumerationOptions &options) {
    if (!s_invariance_check(channels, orders, options).invariant) {
        throw DomainError("capacity floor check needs S-invariant Kraus operators");
    }
    SwitchOutput out = effective_switch(channels, orders, control, options);

    std::uint64_t total = tuple_count(channels, 1, options.cap);
    std::vector<size_t> s(channels.size());
    std::vector<CMatrix> composite;
    for (std::uint64_t t = 0; t < total; ++t) {
        decode_tuple(t, channels, s);
        composite.push_back(ordered_product(channels, orders.perms()[0], s));
    }
    size_t d = out.dim_in;
    size_t m = out.m;
    CMatrix jc = choi(KrausChannel(d, d, std::move(composite)));
    const CMatrix &w = control.matrix();
    CMatrix expected(out.choi.rows(), out.choi.cols());
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < m; ++k)
            for (size_t a = 0; a < d; ++a)
                for (size_t j = 0; j < d; ++j)
                    for (size_t l = 0; l < m; ++l)
                        for (size_t b = 0; b < d; ++b)
                            expected((i * m + k) * d + a, (j * m + l) * d + b) = jc(i * d + a, j * d + b) * w(k, l);
    return frobenius_distance(expected, out.choi) < 1e-9;
}

CMatrix trace_out_control(const SwitchOutput &out) {
    size_t d = out.dim_in;
    size_t e = out.dim_out;
    size_t m = out.m;
    CMatrix r(e * d, e * d);
    for (size_t i = 0; i < e; ++i)
        for (size_t a = 0; a < d; ++a)
            for (size_t j = 0; j < e; ++j)
                for (size_t b = 0; b < d; ++b) {
                    Complex sum = 0;
                    for (size_t c = 0; c < m; ++c) sum += out.choi((i * m + c) * d + a, (j * m + c) * d + b);
                    r(i * d + a, j * d + b) = sum;
                }
    return r;
}

}  // namespace qswitch
