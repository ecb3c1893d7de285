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

#include "qswitch/channel_model.h"

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "qswitch/errors.h"

namespace qswitch {

namespace {

constexpr double kProbTol = 1e-12;

}  // namespace

KrausChannel::KrausChannel(size_t dim_in, size_t dim_out, std::vector<CMatrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
    if (dim_in == 0 || dim_out == 0) throw DimensionError("KrausChannel: dimensions must be positive");
    if (kraus_.empty()) throw DomainError("KrausChannel: needs at least one Kraus operator");
    CMatrix sum(dim_in, dim_in);
    for (const auto &k : kraus_) {
        if (k.rows() != dim_out || k.cols() != dim_in) {
            throw DimensionError("KrausChannel: operator is " + std::to_string(k.rows()) + "x" +
                                 std::to_string(k.cols()) + ", expected " + std::to_string(dim_out) + "x" +
                                 std::to_string(dim_in));
        }
        sum += dagger(k) * k;
    }
    if (frobenius_distance(sum, CMatrix::identity(dim_in)) > 1e-9) {
        throw DomainError("KrausChannel: operators are not trace preserving");
    }
}

PauliChannel::PauliChannel(std::array<double, 4> probabilities) : p(probabilities) {
    double sum = 0;
    for (double x : p) {
        if (!(x >= 0) || !std::isfinite(x)) throw DomainError("PauliChannel: negative or non-finite probability");
        sum += x;
    }
    if (std::abs(sum - 1) > kProbTol) throw DomainError("PauliChannel: probabilities do not sum to 1");
}

DepolChannel::DepolChannel(int dimension, double probability) : d(dimension), p(probability) {
    if (d < 2) throw DomainError("DepolChannel: dimension must be >= 2");
    if (!(p >= 0 && p <= 1)) throw DomainError("DepolChannel: probability outside [0, 1]");
}

const CMatrix &pauli_matrix(int index) {
    static const std::array<CMatrix, 4> paulis = {
        CMatrix{{1, 0}, {0, 1}},
        CMatrix{{0, 1}, {1, 0}},
        CMatrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}},
        CMatrix{{1, 0}, {0, -1}},
    };
    if (index < 0 || index > 3) throw DomainError("pauli_matrix: index must be in 0..3");
    return paulis[static_cast<size_t>(index)];
}

std::vector<CMatrix> heisenberg_weyl_basis(int d) {
    if (d < 2) throw DomainError("heisenberg_weyl_basis: dimension must be >= 2");
    const auto n = static_cast<size_t>(d);
    std::vector<CMatrix> basis;
    basis.reserve(n * n);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            // (X^a Z^b)|j> = omega^{b j} |j + a>
            CMatrix u(n, n);
            for (size_t j = 0; j < n; ++j) {
                const double phase = 2 * std::numbers::pi * static_cast<double>((b * j) % n) / d;
                u((j + a) % n, j) = std::polar(1.0, phase);
            }
            basis.push_back(std::move(u));
        }
    }
    return basis;
}

KrausChannel unitary_channel(const CMatrix &u) {
    if (!u.is_square()) throw DimensionError("unitary_channel: matrix must be square");
    return KrausChannel(u.rows(), u.rows(), {u});
}

KrausChannel pauli_to_kraus(const PauliChannel &ch) {
    std::vector<CMatrix> ops;
    for (int i = 0; i < 4; ++i) {
        if (ch.p[i] > 0) ops.push_back(Complex(std::sqrt(ch.p[i])) * pauli_matrix(i));
    }
    return KrausChannel(2, 2, std::move(ops));
}

KrausChannel depol_to_kraus(const DepolChannel &ch) {
    const auto n = static_cast<size_t>(ch.d);
    std::vector<CMatrix> ops;
    if (ch.p < 1) ops.push_back(Complex(std::sqrt(1 - ch.p)) * CMatrix::identity(n));
    if (ch.p > 0) {
        const Complex w = std::sqrt(ch.p) / ch.d;
        for (auto &u : heisenberg_weyl_basis(ch.d)) ops.push_back(w * u);
    }
    return KrausChannel(n, n, std::move(ops));
}

KrausChannel to_kraus(const ChannelSpec &spec) {
    struct Visitor {
        KrausChannel operator()(const PauliChannel &c) const { return pauli_to_kraus(c); }
        KrausChannel operator()(const DepolChannel &c) const { return depol_to_kraus(c); }
        KrausChannel operator()(const KrausChannel &c) const { return c; }
    };
    return std::visit(Visitor{}, spec);
}

CMatrix apply_channel(const KrausChannel &ch, const CMatrix &rho) {
    if (!rho.is_square() || rho.rows() != ch.dim_in()) {
        throw DimensionError("apply_channel: state is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", channel input dimension " +
                             std::to_string(ch.dim_in()));
    }
    CMatrix out(ch.dim_out(), ch.dim_out());
    for (const auto &k : ch.kraus()) out += k * rho * dagger(k);
    return out;
}

CMatrix choi(const KrausChannel &ch) {
    const size_t din = ch.dim_in();
    const size_t dim = ch.dim_out() * din;
    CMatrix out(dim, dim);
    // |K>> = (K (x) I)|Omega> has entry K(i, a) at index i * din + a.
    for (const auto &k : ch.kraus()) {
        for (size_t r = 0; r < dim; ++r) {
            const Complex kr = k(r / din, r % din);
            if (kr == Complex{}) continue;
            for (size_t c = 0; c < dim; ++c) out(r, c) += kr * std::conj(k(c / din, c % din));
        }
    }
    return out;
}

CMatrix choi_of_map(size_t dim_in, size_t dim_out, const std::function<CMatrix(const CMatrix &)> &map) {
    CMatrix out(dim_out * dim_in, dim_out * dim_in);
    for (size_t a = 0; a < dim_in; ++a) {
        for (size_t b = 0; b < dim_in; ++b) {
            CMatrix unit(dim_in, dim_in);
            unit(a, b) = 1;
            const CMatrix image = map(unit);
            if (image.rows() != dim_out || image.cols() != dim_out) {
                throw DimensionError("choi_of_map: map output has the wrong shape");
            }
            for (size_t i = 0; i < dim_out; ++i) {
                for (size_t j = 0; j < dim_out; ++j) out(i * dim_in + a, j * dim_in + b) = image(i, j);
            }
        }
    }
    return out;
}

CMatrix apply_choi(const CMatrix &choi_matrix, size_t dim_in, size_t dim_out, const CMatrix &rho) {
    if (choi_matrix.rows() != dim_in * dim_out || !choi_matrix.is_square()) {
        throw DimensionError("apply_choi: Choi matrix does not match dimensions");
    }
    if (!rho.is_square() || rho.rows() != dim_in) throw DimensionError("apply_choi: state has the wrong shape");
    CMatrix out(dim_out, dim_out);
    for (size_t i = 0; i < dim_out; ++i) {
        for (size_t j = 0; j < dim_out; ++j) {
            Complex acc{};
            for (size_t a = 0; a < dim_in; ++a) {
                for (size_t b = 0; b < dim_in; ++b) acc += choi_matrix(i * dim_in + a, j * dim_in + b) * rho(a, b);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

double coherent_info_at_maximally_mixed(const CMatrix &choi_matrix, size_t dim_in, size_t dim_out) {
    const Complex scale = 1.0 / static_cast<double>(dim_in);
    const CMatrix joint = scale * choi_matrix;
    const CMatrix output = partial_trace(joint, dim_out, dim_in, Keep::First);
    return von_neumann_entropy(output) - von_neumann_entropy(joint);
}

size_t choi_rank(const KrausChannel &ch, double tol) {
    size_t rank = 0;
    for (double x : hermitian_eigenvalues(choi(ch))) rank += x > tol ? 1 : 0;
    return rank;
}

bool channels_equal(const KrausChannel &a, const KrausChannel &b, double tol) {
    if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) return false;
    return frobenius_distance(choi(a), choi(b)) < tol;
}

std::array<double, 3> pauli_transfer_eigenvalues(const PauliChannel &ch) {
    const auto &p = ch.p;
    return {(p[0] + p[1]) - (p[2] + p[3]), (p[0] + p[2]) - (p[1] + p[3]), (p[0] + p[3]) - (p[1] + p[2])};
}

PauliChannel eigs_to_pauli(const std::array<double, 3> &l) {
    std::array<double, 4> p = {
        (1 + l[0] + l[1] + l[2]) / 4,
        (1 + l[0] - l[1] - l[2]) / 4,
        (1 - l[0] + l[1] - l[2]) / 4,
        (1 - l[0] - l[1] + l[2]) / 4,
    };
    for (double &x : p) {
        if (x < -kProbTol) throw DomainError("eigs_to_pauli: eigenvalue triple is not completely positive");
        x = std::max(x, 0.0);
    }
    // Absorb round-off so the result passes the simplex check.
    const double sum = p[0] + p[1] + p[2] + p[3];
    for (double &x : p) x /= sum;
    return PauliChannel(p);
}

PauliChannel pauli_power(const PauliChannel &ch, int n) {
    if (n < 1) throw DomainError("pauli_power: n must be positive");
    auto l = pauli_transfer_eigenvalues(ch);
    for (double &x : l) x = std::pow(x, n);
    return eigs_to_pauli(l);
}

KrausChannel compose(const KrausChannel &a, const KrausChannel &b) {
    if (a.dim_in() != b.dim_out()) throw DimensionError("compose: a.dim_in != b.dim_out");
    std::vector<CMatrix> ops;
    ops.reserve(a.kraus().size() * b.kraus().size());
    for (const auto &ka : a.kraus()) {
        for (const auto &kb : b.kraus()) ops.push_back(ka * kb);
    }
    return KrausChannel(b.dim_in(), a.dim_out(), std::move(ops));
}

ChannelSpec parse_channel_spec(std::string_view json_text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception &e) {
        throw DomainError(std::string("channel spec: invalid JSON: ") + e.what());
    }
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "pauli") {
            const auto p = j.at("p").get<std::vector<double>>();
            if (p.size() != 4) throw DomainError("channel spec: pauli \"p\" needs 4 entries");
            return PauliChannel({p[0], p[1], p[2], p[3]});
        }
        if (kind == "depolarizing") {
            return DepolChannel(j.at("d").get<int>(), j.at("p").get<double>());
        }
        if (kind == "kraus") {
            const auto din = j.at("dim_in").get<size_t>();
            const auto dout = j.at("dim_out").get<size_t>();
            std::vector<CMatrix> ops;
            for (const auto &m : j.at("matrices")) {
                std::vector<Complex> data;
                for (const auto &z : m) {
                    const auto pair = z.get<std::vector<double>>();
                    if (pair.size() != 2) throw DomainError("channel spec: entries must be [re, im]");
                    data.emplace_back(pair[0], pair[1]);
                }
                ops.emplace_back(dout, din, std::move(data));
            }
            return KrausChannel(din, dout, std::move(ops));
        }
        throw DomainError("channel spec: unknown kind \"" + kind + "\"");
    } catch (const json::exception &e) {
        throw DomainError(std::string("channel spec: ") + e.what());
    } catch (const DimensionError &e) {
        throw DomainError(std::string("channel spec: ") + e.what());
    }
}

std::string channel_spec_to_json(const ChannelSpec &spec) {
    using nlohmann::json;
    struct Visitor {
        json operator()(const PauliChannel &c) const {
            return {{"kind", "pauli"}, {"p", c.p}};
        }
        json operator()(const DepolChannel &c) const {
            return {{"kind", "depolarizing"}, {"d", c.d}, {"p", c.p}};
        }
        json operator()(const KrausChannel &c) const {
            json mats = json::array();
            for (const auto &k : c.kraus()) {
                json m = json::array();
                for (const auto &z : k.data()) m.push_back({z.real(), z.imag()});
                mats.push_back(std::move(m));
            }
            return {{"kind", "kraus"}, {"dim_in", c.dim_in()}, {"dim_out", c.dim_out()}, {"matrices", mats}};
        }
    };
    return std::visit(Visitor{}, spec).dump();
}

}  // namespace qswitch
